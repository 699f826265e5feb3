#pragma once

#include <complex>
#include <vector>

namespace wqed::core {

// Complex amplitudes (t, r) and real coefficients (T, R) on a detuning grid.
struct Spectrum {
    std::vector<double> delta;
    std::vector<std::complex<double>> t;
    std::vector<std::complex<double>> r;
    std::vector<double> T;
    std::vector<double> R;
};

}  // namespace wqed::core
