#pragma once

#include <vector>

#include "core/error.hpp"

namespace wqed::core {

// Ordered probe-detuning samples Delta = v_g k - omega_e.
struct DetuningGrid {
    std::vector<double> values;

    explicit DetuningGrid(std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    auto begin() const { return values.begin(); }
    auto end() const { return values.end(); }
};

// Uniform grid of n points, endpoints included and exact.
DetuningGrid make_grid(double min, double max, std::size_t n);

}  // namespace wqed::core
