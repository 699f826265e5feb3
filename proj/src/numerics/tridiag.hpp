#pragma once

#include <complex>
#include <vector>

namespace wqed::numerics {

// Thomas solve of a complex symmetric tridiagonal system
//   diag[i] x[i] + off[i-1] x[i-1] + off[i] x[i+1] = rhs[i].
// No pivoting; intended for the diagonally dominant Cayley factors of the
// Crank-Nicolson scheme.
inline void solve_tridiag(const std::vector<std::complex<double>>& diag,
                          const std::vector<std::complex<double>>& off,
                          const std::vector<std::complex<double>>& rhs,
                          std::vector<std::complex<double>>& x,
                          std::vector<std::complex<double>>& scratch) {
    const std::size_t n = diag.size();
    scratch.resize(n);
    x.resize(n);

    std::complex<double> m = diag[0];
    scratch[0] = off[0] / m;
    x[0] = rhs[0] / m;
    for (std::size_t i = 1; i < n; ++i) {
        m = diag[i] - off[i - 1] * scratch[i - 1];
        if (i < n - 1) scratch[i] = off[i] / m;
        x[i] = (rhs[i] - off[i - 1] * x[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= scratch[i] * x[i + 1];
}

}  // namespace wqed::numerics
