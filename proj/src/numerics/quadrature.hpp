#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <complex>
#include <string>

#include "core/error.hpp"

namespace wqed::numerics {

struct QuadratureResult {
    std::complex<double> value;
    double error;  // achieved error estimate
};

// Adaptive Gauss-Kronrod (G7,K15) on [a, b]. Throws RuntimeAbort with the
// achieved error estimate if the requested tolerance is missed by a wide
// margin. The integrand may be complex-valued.
template <class F>
QuadratureResult integrate_gk(F&& f, double a, double b, double rel_tol = 1e-10,
                              unsigned max_depth = 12) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    std::complex<double> v = gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &err);
    const double scale = std::max(std::abs(v), 1.0);
    if (!(err <= 1e3 * rel_tol * scale))
        throw RuntimeAbort("quadrature did not converge: achieved error estimate " +
                           std::to_string(err) + " on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    return {v, err};
}

}  // namespace wqed::numerics
