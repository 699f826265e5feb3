#pragma once

#include "core/validate.hpp"

namespace wqed::core {

// Every physics module works in units where one module-chosen reference rate
// equals 1 (the 2LE and router scale by Gamma, the Rydberg module by gamma
// and r_B, the lattice by J). These two helpers are the only unit
// conversions in the codebase; they are pure and exactly inverse of each
// other up to rounding.

inline double to_reference_units(double value, double reference) {
    require_positive("reference", reference);
    return value / reference;
}

inline double from_reference_units(double scaled, double reference) {
    require_positive("reference", reference);
    return scaled * reference;
}

}  // namespace wqed::core
