#include "core/grid.hpp"

#include <cmath>
#include <string>

namespace wqed::core {

DetuningGrid::DetuningGrid(std::vector<double> v) : values(std::move(v)) {
    if (values.size() < 2)
        throw ValidationError("DetuningGrid needs at least 2 points");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw ValidationError("DetuningGrid values must be finite");
        if (i > 0 && !(values[i] > values[i - 1]))
            throw ValidationError("DetuningGrid values must be strictly increasing");
    }
}

DetuningGrid make_grid(double min, double max, std::size_t n) {
    if (!std::isfinite(min) || !std::isfinite(max))
        throw ValidationError("make_grid: bounds must be finite");
    if (!(min < max))
        throw ValidationError("make_grid: min must be < max");
    if (n < 2)
        throw ValidationError("make_grid: n must be >= 2, got " + std::to_string(n));

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        v[i] = min * (1.0 - t) + max * t;  // hits both endpoints exactly
    }
    return DetuningGrid(std::move(v));
}

}  // namespace wqed::core
