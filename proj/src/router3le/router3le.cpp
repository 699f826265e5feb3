#include "router3le/router3le.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

namespace wqed::router3le {

using std::complex;
namespace {
constexpr complex<double> I{0.0, 1.0};
}

Susceptibility susceptibility_chi(const core::ThreeLevelParams& p, double delta_probe) {
    core::require_finite("delta_probe", delta_probe);
    const double delta = delta_probe - p.Delta_c;  // Raman detuning
    if (p.Omega_c > 0.0 && delta == 0.0 && p.gamma_s == 0.0) return {0.0, true};
    if (p.Omega_c == 0.0)
        return {complex<double>(delta_probe, p.base.gamma), false};
    const complex<double> chi = complex<double>(delta_probe, p.base.gamma) -
                                p.Omega_c * p.Omega_c /
                                    (4.0 * complex<double>(delta, p.gamma_s));
    return {chi, false};
}

RouterAmplitudes router_amplitudes_at(const core::ThreeLevelParams& p, double delta_probe) {
    const Susceptibility chi = susceptibility_chi(p, delta_probe);
    if (chi.divergent) return {1.0, 0.0};  // perfect transparency at the undamped Raman pole
    const complex<double> denom = chi.value + I * p.base.Gamma;
    return {chi.value / denom, -I * p.base.Gamma / denom};
}

core::Spectrum router_amplitudes(const core::ThreeLevelParams& p,
                                 const core::DetuningGrid& grid) {
    core::Spectrum s;
    s.delta = grid.values;
    const std::size_t n = grid.size();
    s.t.resize(n);
    s.r.resize(n);
    s.T.resize(n);
    s.R.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = router_amplitudes_at(p, grid[i]);
        s.t[i] = a.t;
        s.r[i] = a.r;
        s.T[i] = std::norm(a.t);
        s.R[i] = std::norm(a.r);
    }
    return s;
}

namespace {

// Golden-section maximization of f on [a, b].
template <class F>
double golden_max(F&& f, double a, double b, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

AtsSplitting ats_splitting(const core::ThreeLevelParams& p) {
    if (p.Omega_c <= 0.0) throw RuntimeAbort("ats_splitting: no doublet found (Omega_c = 0)");

    auto refl = [&](double d) { return std::norm(router_amplitudes_at(p, d).r); };

    const double half = 3.0 * p.Omega_c;
    const int n = 2001;
    std::vector<double> d(n), R(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        d[i] = -half * (1.0 - t) + half * t;
        R[i] = refl(d[i]);
    }

    // interior local maxima of the reflection, strongest two
    std::vector<int> peaks;
    for (int i = 1; i + 1 < n; ++i)
        if (R[i] > R[i - 1] && R[i] > R[i + 1]) peaks.push_back(i);
    if (peaks.size() < 2) throw RuntimeAbort("ats_splitting: no doublet found");
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return R[a] > R[b]; });
    int i1 = peaks[0], i2 = peaks[1];
    if (d[i1] > d[i2]) std::swap(i1, i2);

    const double tol = (d[1] - d[0]) * 1e-6;
    const double lo = golden_max(refl, d[i1 - 1], d[i1 + 1], tol);
    const double hi = golden_max(refl, d[i2 - 1], d[i2 + 1], tol);
    return {hi - lo, lo, hi, p.Omega_c < 4.0 * p.base.Gamma};
}

DrivenQubitParams::DrivenQubitParams(double Gamma1_, double Gamma_phi_, double Omega_, double r0_)
    : Gamma1(Gamma1_), Gamma_phi(Gamma_phi_), Gamma2(Gamma1_ / 2.0 + Gamma_phi_),
      Omega(Omega_), r0(r0_) {
    core::require_nonnegative("Gamma1", Gamma1);
    core::require_nonnegative("Gamma_phi", Gamma_phi);
    core::require_nonnegative("Omega", Omega);
    core::require_finite("r0", r0);
    if (r0 < 0.0 || r0 > 1.0) throw ValidationError("r0 must be in [0, 1]");
}

DrivenQubitAmplitudes driven_qubit_steady_state(const DrivenQubitParams& q, double delta) {
    core::require_finite("delta", delta);
    const double x = delta / q.Gamma2;
    const double denom = 1.0 + x * x + q.Omega * q.Omega / (q.Gamma1 * q.Gamma2);
    const complex<double> r = q.r0 * complex<double>(1.0, x) / denom;
    return {r, 1.0 - r};
}

DrivenQubitAmplitudes bloch_steady_state_oracle(const DrivenQubitParams& q, double delta) {
    core::require_finite("delta", delta);
    if (q.Gamma1 == 0.0 && q.Gamma_phi == 0.0)
        throw RuntimeAbort("bloch_steady_state_oracle: singular linear system (all rates zero)");
    if (q.Omega <= 0.0)
        throw ValidationError(
            "bloch_steady_state_oracle: requires Omega > 0 (the r0 normalization maps the "
            "coherence through a factor 1/Omega)");

    // Rotating-frame Bloch equations for x = (Re sigma, Im sigma, rho_ee),
    // sigma = rho_eg:
    //   d(Re s)/dt = -Gamma2 Re s - Delta Im s
    //   d(Im s)/dt =  Delta Re s - Gamma2 Im s + Omega rho_ee - Omega/2
    //   d(ree)/dt  = -Omega Im s - Gamma1 ree
    Eigen::Matrix3d A;
    A << -q.Gamma2, -delta, 0.0,
         delta, -q.Gamma2, q.Omega,
         0.0, -q.Omega, -q.Gamma1;
    Eigen::Vector3d b(0.0, q.Omega / 2.0, 0.0);

    Eigen::FullPivLU<Eigen::Matrix3d> lu(A);
    if (!lu.isInvertible())
        throw RuntimeAbort("bloch_steady_state_oracle: singular linear system");
    const Eigen::Vector3d x = lu.solve(b);

    const complex<double> sigma(x[0], x[1]);
    const complex<double> r = 2.0 * I * q.Gamma2 * q.r0 / q.Omega * sigma;
    return {r, 1.0 - r};
}

}  // namespace wqed::router3le
