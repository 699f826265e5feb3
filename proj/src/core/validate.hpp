#pragma once

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace wqed::core {

inline void require_finite(const char* name, double v) {
    if (!std::isfinite(v))
        throw ValidationError(std::string(name) + " must be finite, got " + std::to_string(v));
}

inline void require_nonnegative(const char* name, double v) {
    require_finite(name, v);
    if (v < 0.0)
        throw ValidationError(std::string(name) + " must be >= 0, got " + std::to_string(v));
}

inline void require_positive(const char* name, double v) {
    require_finite(name, v);
    if (v <= 0.0)
        throw ValidationError(std::string(name) + " must be > 0, got " + std::to_string(v));
}

}  // namespace wqed::core
