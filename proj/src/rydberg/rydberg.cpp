#include "rydberg/rydberg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/validate.hpp"
#include "numerics/tridiag.hpp"

namespace wqed::rydberg {

using std::complex;
namespace {
constexpr complex<double> I{0.0, 1.0};
}

double RydbergMedium::v_eit() const { return attenuation_length() * omega_c * omega_c / (2.0 * gamma); }
double RydbergMedium::mass_coef() const { return 4.0 * attenuation_length() * delta / gamma; }
double RydbergMedium::potential_coef() const { return gamma / (attenuation_length() * delta); }

namespace {

void validate_medium(const RydbergMedium& m) {
    core::require_positive("od", m.od);
    core::require_positive("od_b", m.od_b);
    core::require_positive("r_b", m.r_b);
    core::require_positive("L", m.L);
    core::require_positive("gamma", m.gamma);
    core::require_finite("delta", m.delta);
    core::require_nonnegative("omega_c", m.omega_c);
    const double la1 = m.L / m.od;
    const double la2 = 2.0 * m.r_b / m.od_b;
    if (std::abs(la1 - la2) > 1e-9 * std::max(la1, la2))
        throw ValidationError(
            "RydbergMedium: inconsistent attenuation length, L/OD != 2 r_B/OD_B");
}

}  // namespace

RydbergMedium make_medium(double od, double od_b, double r_b, double gamma, double delta,
                          double omega_c) {
    core::require_positive("od_b", od_b);
    core::require_positive("r_b", r_b);
    core::require_positive("od", od);
    RydbergMedium m{od, od_b, r_b, od * 2.0 * r_b / od_b, gamma, delta, omega_c};
    validate_medium(m);
    return m;
}

RydbergMedium make_medium_explicit(double od, double od_b, double r_b, double L, double gamma,
                                   double delta, double omega_c) {
    RydbergMedium m{od, od_b, r_b, L, gamma, delta, omega_c};
    validate_medium(m);
    return m;
}

double effective_potential(double r, double r_b) {
    core::require_positive("r_b", r_b);
    return std::abs(r) <= r_b ? 1.0 : 0.0;
}

double effective_potential_smoothed(double r, double r_b, double width) {
    core::require_positive("r_b", r_b);
    core::require_positive("width", width);
    return 0.5 * (1.0 + std::tanh((r_b - std::abs(r)) / width));
}

PsiField uniform_initial(int n, double half_width) {
    if (n < 16) throw ValidationError("uniform_initial: need at least 16 grid points");
    core::require_positive("half_width", half_width);
    PsiField f;
    f.r.resize(n);
    f.values.assign(n, 1.0);
    const double h = 2.0 * half_width / n;
    for (int j = 0; j < n; ++j) f.r[j] = -half_width + (j + 0.5) * h;
    return f;
}

namespace {

double grid_spacing(const PsiField& f) {
    const std::size_t n = f.r.size();
    if (n < 16 || f.values.size() != n)
        throw ValidationError("PsiField: grid and values must match, >= 16 points");
    const double h = f.r[1] - f.r[0];
    for (std::size_t j = 1; j + 1 < n; ++j)
        if (std::abs((f.r[j + 1] - f.r[j]) - h) > 1e-9 * std::abs(h))
            throw ValidationError("PsiField: grid must be uniform");
    return h;
}

double l2_norm(const std::vector<complex<double>>& v, double h) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s * h);
}

}  // namespace

EvolveResult evolve_psi(const RydbergMedium& m, const PsiField& psi0, const EvolveOptions& opts) {
    validate_medium(m);
    if (m.delta == 0.0)
        throw ValidationError(
            "evolve_psi: the dispersive equation is undefined at Delta = 0; the dissipative "
            "regime is outside this model");
    for (const auto& z : psi0.values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("evolve_psi: psi0 must be finite");

    const int n = static_cast<int>(psi0.r.size());
    const double h = grid_spacing(psi0);

    complex<double> delta_eff = m.delta;
    if (opts.dissipative_extension) delta_eff += I * m.gamma;
    const double la = m.attenuation_length();
    const complex<double> c2 = 4.0 * la * delta_eff / m.gamma;
    const complex<double> c0 = m.gamma / (la * delta_eff);

    // step policy: resolve both the well-crossing scale r_B^2/|c2| and the
    // potential phase scale 1/|c0|
    const double dR_max = std::min(m.r_b * m.r_b / std::abs(c2), 1.0 / std::abs(c0)) / 16.0;
    int steps = opts.n_steps;
    if (steps <= 0) steps = static_cast<int>(std::ceil(m.L / (dR_max / 8.0)));
    const double dR = m.L / steps;
    if (dR > dR_max)
        throw RuntimeAbort("evolve_psi: step " + std::to_string(dR) +
                           " breaches the accuracy policy dR <= " + std::to_string(dR_max));

    std::vector<double> U(n);
    for (int j = 0; j < n; ++j)
        U[j] = opts.smoothing_width > 0.0
                   ? effective_potential_smoothed(psi0.r[j], m.r_b, opts.smoothing_width)
                   : effective_potential(psi0.r[j], m.r_b);

    // Cayley factors (I +- i dR/2 A), A = c2 D2 + c0 diag(U), zero-flux D2
    const complex<double> beta = I * (dR / 2.0) * c2 / (h * h);
    std::vector<complex<double>> diag_p(n), off_p(n - 1, beta);
    for (int j = 0; j < n; ++j) {
        const double lap_diag = (j == 0 || j == n - 1) ? -1.0 : -2.0;
        diag_p[j] = 1.0 + beta * lap_diag + I * (dR / 2.0) * c0 * U[j];
    }

    auto apply_minus = [&](const std::vector<complex<double>>& x,
                           std::vector<complex<double>>& y) {
        // y = (I - i dR/2 A) x  -- conjugate-coefficient mirror of the solve matrix
        for (int j = 0; j < n; ++j) {
            const complex<double> up = (j + 1 < n) ? x[j + 1] : complex<double>(0.0);
            const complex<double> dn = (j > 0) ? x[j - 1] : complex<double>(0.0);
            const double lap_diag = (j == 0 || j == n - 1) ? -1.0 : -2.0;
            y[j] = x[j] - (beta * (dn + lap_diag * x[j] + up) + I * (dR / 2.0) * c0 * U[j] * x[j]);
        }
    };
    auto apply_plus = [&](const std::vector<complex<double>>& x,
                          std::vector<complex<double>>& y) {
        for (int j = 0; j < n; ++j) {
            const complex<double> up = (j + 1 < n) ? x[j + 1] : complex<double>(0.0);
            const complex<double> dn = (j > 0) ? x[j - 1] : complex<double>(0.0);
            y[j] = diag_p[j] * x[j] + beta * dn * (j > 0 ? 1.0 : 0.0) +
                   beta * up * (j + 1 < n ? 1.0 : 0.0);
        }
    };

    std::vector<complex<double>> psi = psi0.values;
    std::vector<complex<double>> rhs(n), x(n), resid(n), corr(n), scratch(n), tmp(n);
    const double norm0 = l2_norm(psi, h);
    bool wall_ok = true;

    for (int s = 0; s < steps; ++s) {
        apply_minus(psi, rhs);
        numerics::solve_tridiag(diag_p, off_p, rhs, x, scratch);
        // one iterative-refinement pass: keeps stationary states stationary
        apply_plus(x, tmp);
        for (int j = 0; j < n; ++j) resid[j] = rhs[j] - tmp[j];
        numerics::solve_tridiag(diag_p, off_p, resid, corr, scratch);
        for (int j = 0; j < n; ++j) psi[j] = x[j] + corr[j];

        if ((s & 255) == 0 &&
            (std::abs(psi.front() - 1.0) > 1e-6 || std::abs(psi.back() - 1.0) > 1e-6))
            wall_ok = false;
    }
    if (std::abs(psi.front() - 1.0) > 1e-6 || std::abs(psi.back() - 1.0) > 1e-6) wall_ok = false;

    EvolveResult out;
    out.psi.r = psi0.r;
    out.psi.values = std::move(psi);
    out.psi.R = psi0.R + m.L;
    out.validity_window_ok =
        std::abs(m.delta) >= 3.0 * m.gamma && m.omega_c <= 0.5 * std::abs(m.delta);
    out.wall_ok = wall_ok;
    out.norm_rel_change = std::abs(l2_norm(out.psi.values, h) - norm0) / norm0;
    out.steps = steps;
    out.dR = dR;
    return out;
}

namespace {

// Eigenvalue count below lambda for the symmetric tridiagonal (diag, off)
// via the Sturm / LDL^T sign recurrence.
int sturm_count_below(const std::vector<double>& diag, double off, double lambda) {
    int count = 0;
    double q = diag[0] - lambda;
    if (q < 0.0) ++count;
    const double off2 = off * off;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        double d = diag[i] - lambda - off2 / q;
        if (d == 0.0) d = 1e-300;
        if (d < 0.0) ++count;
        q = d;
    }
    return count;
}

struct WellGrid {
    std::vector<double> diag;
    double off;
    double h;
    int n;
};

// Dirichlet discretization of B = c2a d^2/dr^2 + c0a U on [-W, W],
// cell-centered; bound states live at eigenvalues in (0, c0a).
WellGrid build_well(double c2a, double c0a, double r_b, double W, int n) {
    WellGrid g;
    g.n = n;
    g.h = 2.0 * W / n;
    g.off = c2a / (g.h * g.h);
    g.diag.resize(n);
    for (int j = 0; j < n; ++j) {
        const double r = -W + (j + 0.5) * g.h;
        g.diag[j] = -2.0 * g.off + c0a * effective_potential(r, r_b);
    }
    return g;
}

std::vector<double> eigenvalues_in_well(const WellGrid& g, double c0a, int max_states) {
    const double lo = 1e-9 * c0a;
    const double hi = c0a * (1.0 + 1e-9);
    const int below_lo = sturm_count_below(g.diag, g.off, lo);
    const int below_hi = sturm_count_below(g.diag, g.off, hi);
    int m = below_hi - below_lo;
    m = std::min(m, max_states);
    std::vector<double> evs;
    for (int idx = 0; idx < m; ++idx) {
        // bisect for the (below_lo + idx + 1)-th eigenvalue
        double a = lo, b = hi;
        const int target = below_lo + idx + 1;
        for (int it = 0; it < 200 && (b - a) > 1e-15 * c0a; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count_below(g.diag, g.off, mid) >= target)
                b = mid;
            else
                a = mid;
        }
        evs.push_back(0.5 * (a + b));
    }
    return evs;
}

// Inverse iteration for the eigenvector at (approximately) lambda.
std::vector<double> inverse_iteration(const WellGrid& g, double lambda) {
    const int n = g.n;
    std::vector<complex<double>> d(n), off(n - 1, g.off), b(n), x(n), scratch(n);
    const double shift = lambda * (1.0 + 1e-10) + 1e-300;
    for (int j = 0; j < n; ++j) d[j] = g.diag[j] - shift;
    for (int j = 0; j < n; ++j) b[j] = 1.0 / std::sqrt(static_cast<double>(n));
    for (int it = 0; it < 4; ++it) {
        numerics::solve_tridiag(d, off, b, x, scratch);
        double nrm = 0.0;
        for (const auto& z : x) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        for (int j = 0; j < n; ++j) b[j] = x[j] / nrm;
    }
    std::vector<double> v(n);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += b[j].real() * b[j].real();
    const double sign = b[n / 2].real() >= 0.0 ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j) v[j] = sign * b[j].real() / std::sqrt(s * g.h);
    return v;
}

}  // namespace

std::vector<BoundState> bound_states(const RydbergMedium& m, int max_states) {
    validate_medium(m);
    if (m.delta == 0.0) throw ValidationError("bound_states: requires Delta != 0 (dispersive)");
    if (max_states < 1) throw ValidationError("bound_states: max_states must be >= 1");

    const double sgn = m.delta > 0.0 ? 1.0 : -1.0;
    const double c2a = std::abs(m.mass_coef());
    const double c0a = std::abs(m.potential_coef());

    // first pass on a moderate domain to estimate the weakest binding, then
    // widen so the slowest exponential tail is negligible at the walls
    double W = 10.0 * m.r_b;
    {
        const WellGrid probe = build_well(c2a, c0a, m.r_b, W, 2048);
        const auto evs = eigenvalues_in_well(probe, c0a, max_states);
        if (!evs.empty()) {
            const double e_min = evs.front();  // smallest = weakest binding
            const double kappa = std::sqrt(std::max(e_min, 1e-12 * c0a) / c2a);
            W = std::min(std::max(W, m.r_b + 14.0 / kappa), 400.0 * m.r_b);
        }
    }

    const double h_target = 0.02 * m.r_b;
    const int n1 = std::max(2048, static_cast<int>(std::ceil(2.0 * W / h_target)));
    const WellGrid coarse = build_well(c2a, c0a, m.r_b, W, n1);
    const WellGrid fine = build_well(c2a, c0a, m.r_b, W, 2 * n1);
    const auto ev_c = eigenvalues_in_well(coarse, c0a, max_states);
    const auto ev_f = eigenvalues_in_well(fine, c0a, max_states);
    if (ev_f.empty())
        throw RuntimeAbort("bound_states: discretization found no bound state (expected >= 1)");

    std::vector<BoundState> out;
    for (std::size_t i = 0; i < ev_f.size(); ++i) {
        // second-order scheme: Richardson-extrapolate h and h/2 eigenvalues
        const double e = (i < ev_c.size()) ? (4.0 * ev_f[i] - ev_c[i]) / 3.0 : ev_f[i];
        BoundState b;
        b.binding = e;
        b.eigenvalue = sgn * e;
        b.psi = inverse_iteration(fine, ev_f[i]);
        b.r.resize(fine.n);
        for (int j = 0; j < fine.n; ++j) b.r[j] = -W + (j + 0.5) * fine.h;
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const BoundState& a, const BoundState& b) { return a.binding > b.binding; });
    return out;
}

G2PhiCurves g2_and_phase(const RydbergMedium& m, const PsiField& psi_out,
                         const std::vector<double>& tau) {
    validate_medium(m);
    const double h = grid_spacing(psi_out);
    (void)h;
    const double v = m.v_eit();
    if (!(v > 0.0))
        throw ValidationError("g2_and_phase: v_EIT must be positive (need Omega_c > 0)");

    G2PhiCurves out;
    out.tau = tau;
    out.g2.resize(tau.size());
    out.phi.resize(tau.size());
    const double r_lo = psi_out.r.front(), r_hi = psi_out.r.back();
    for (std::size_t i = 0; i < tau.size(); ++i) {
        const double r = v * tau[i];
        if (!(r >= r_lo && r <= r_hi))
            throw ValidationError("g2_and_phase: tau maps to r = " + std::to_string(r) +
                                  " outside the grid");
        const double pos = (r - r_lo) / (psi_out.r[1] - psi_out.r[0]);
        const std::size_t j = std::min(static_cast<std::size_t>(pos), psi_out.r.size() - 2);
        const double w = pos - static_cast<double>(j);
        const complex<double> z = (1.0 - w) * psi_out.values[j] + w * psi_out.values[j + 1];
        out.g2[i] = std::norm(z);
        out.phi[i] = std::arg(z);
    }
    return out;
}

double blockade_probability(double od, double od_b) {
    core::require_nonnegative("od", od);
    core::require_nonnegative("od_b", od_b);
    if (od == 0.0) throw ValidationError("blockade_probability: undefined at OD = 0");
    return 1.0 - std::exp(-od_b) / std::sqrt(od);
}

double conditional_phase_estimate(const RydbergMedium& m) {
    validate_medium(m);
    if (m.delta == 0.0)
        throw ValidationError("conditional_phase_estimate: undefined at Delta = 0");
    return -(m.gamma / m.delta) * m.od_b / 2.0;
}

}  // namespace wqed::rydberg
