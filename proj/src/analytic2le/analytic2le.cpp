#include "analytic2le/analytic2le.hpp"

#include <cmath>

#include "numerics/quadrature.hpp"

namespace wqed::analytic2le {

using std::complex;
namespace {

constexpr complex<double> I{0.0, 1.0};
const double SQRT_2PI = std::sqrt(2.0 * M_PI);

// theta(0) = 1/2, the convention fixed by the continuity relations of the
// scattering eigenstate.
double theta_half(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? 0.0 : 0.5); }

complex<double> t_of(const core::EmitterParams& p, double delta) {
    return complex<double>(delta, p.gamma) / complex<double>(delta, p.gamma + p.Gamma);
}

void require_resonant_lossless(const core::EmitterParams& p, double k1, double k2,
                               const char* who) {
    if (p.gamma != 0.0)
        throw ValidationError(std::string(who) +
                              ": closed form exists only for the lossless emitter (gamma = 0)");
    const double scale = std::max({std::abs(p.omega_e), p.Gamma, 1e-300});
    if (std::abs(p.v_g * k1 - p.omega_e) > 1e-12 * scale ||
        std::abs(p.v_g * k2 - p.omega_e) > 1e-12 * scale)
        throw ValidationError(std::string(who) +
                              ": closed form exists only for degenerate resonant photons "
                              "(v_g k1 = v_g k2 = omega_e)");
}

}  // namespace

OnePhotonAmplitudes one_photon_amplitudes(const core::EmitterParams& p, double delta) {
    const complex<double> t = t_of(p, delta);
    return {t, t - 1.0};
}

core::Spectrum one_photon_coefficients(const core::EmitterParams& p,
                                       const core::DetuningGrid& grid) {
    core::Spectrum s;
    s.delta = grid.values;
    const std::size_t n = grid.size();
    s.t.resize(n);
    s.r.resize(n);
    s.T.resize(n);
    s.R.resize(n);
    const double w = p.gamma + p.Gamma;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = grid[i];
        const double denom = d * d + w * w;
        s.R[i] = p.Gamma * p.Gamma / denom;
        s.T[i] = (d * d + p.gamma * p.gamma) / denom;
        const auto a = one_photon_amplitudes(p, d);
        s.t[i] = a.t;
        s.r[i] = a.r;
    }
    return s;
}

OnePhotonAmplitudes input_output_one_photon(const core::EmitterParams& p, double delta) {
    if (p.gamma != 0.0)
        throw ValidationError(
            "input_output_one_photon: formalism derived without loss, requires gamma = 0");

    // Matrix element of the coherence for a right-moving photon |k+>:
    //   d<sigma_->/dt = -(i omega_e + Gamma) <sigma_-> - i V e^{-i w t} / sqrt(2 pi),
    // w = v_g k. The steady (particular) solution is A e^{-i w t} with
    //   (Gamma + i (omega_e - w)) A = -i V / sqrt(2 pi),
    // and the output field follows from b_out = b_in - i (V/v_g) sigma_-.
    const double w = p.omega_e + delta;
    const complex<double> drive = -I * p.V / SQRT_2PI;
    const complex<double> A = drive / complex<double>(p.Gamma, p.omega_e - w);
    const complex<double> t = 1.0 - I * (p.V / p.v_g) * A * SQRT_2PI;
    return {t, t - 1.0};
}

std::complex<double> one_photon_piece(const core::EmitterParams& p, double k, double x) {
    const complex<double> tk = t_of(p, p.v_g * k - p.omega_e);
    const complex<double> phase = std::exp(I * k * x);
    return phase / SQRT_2PI * (theta_half(-x) + tk * theta_half(x));
}

std::complex<double> excitation_amplitude(const core::EmitterParams& p, double k) {
    return (1.0 / SQRT_2PI) * p.V /
           complex<double>(p.v_g * k - p.omega_e, p.gamma + p.Gamma);
}

BoundStateAmplitudes two_photon_bound_state(const core::EmitterParams& p, double k1, double k2,
                                            const std::vector<double>& x1,
                                            const std::vector<double>& x2) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw ValidationError("two_photon_bound_state: wavevectors must be finite");
    if (x1.empty() || x2.empty())
        throw ValidationError("two_photon_bound_state: empty grid");

    BoundStateAmplitudes out;
    out.x1 = x1;
    out.x2 = x2;
    out.g_rr.resize(static_cast<Eigen::Index>(x1.size()), static_cast<Eigen::Index>(x2.size()));
    out.e_r.resize(static_cast<Eigen::Index>(x1.size()));

    const complex<double> e1 = excitation_amplitude(p, k1);
    const complex<double> e2 = excitation_amplitude(p, k2);
    const double ktot = k1 + k2;
    const double decay = (p.gamma + p.Gamma) / p.v_g;

    // bound term of g_RR for ordered coordinates (x = xa - xb > 0, xb > 0)
    auto bound = [&](double xa, double xb) -> complex<double> {
        const double x = xa - xb;
        const double xc = 0.5 * (xa + xb);
        const complex<double> osc =
            std::exp(I * ktot * xc) * std::exp(I * (ktot - 2.0 * p.omega_e / p.v_g) * x / 2.0);
        return 2.0 * (p.Gamma / p.v_g) * e1 * e2 * osc * std::exp(-decay * x) *
               theta_half(x) * theta_half(xb);
    };

    for (std::size_t a = 0; a < x1.size(); ++a) {
        for (std::size_t b = 0; b < x2.size(); ++b) {
            const double xa = x1[a], xb = x2[b];
            const complex<double> direct =
                one_photon_piece(p, k1, xa) * one_photon_piece(p, k2, xb) + bound(xa, xb);
            const complex<double> swapped =
                one_photon_piece(p, k1, xb) * one_photon_piece(p, k2, xa) + bound(xb, xa);
            out.g_rr(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                (direct + swapped) / std::sqrt(2.0);
        }
    }

    const complex<double> etot(p.v_g * (k1 + k2) - p.omega_e, p.gamma + p.Gamma);
    for (std::size_t a = 0; a < x1.size(); ++a) {
        const double xa = x1[a];
        out.e_r(static_cast<Eigen::Index>(a)) =
            one_photon_piece(p, k1, xa) * e2 + one_photon_piece(p, k2, xa) * e1 +
            2.0 * I * (p.V / p.v_g) * e1 * e2 * std::exp(I * etot * xa / p.v_g) * theta_half(xa);
    }
    return out;
}

TwoPhotonAsymptotics two_photon_asymptotics(const core::EmitterParams& p, double k1, double k2,
                                            const std::vector<double>& x1,
                                            const std::vector<double>& x2) {
    require_resonant_lossless(p, k1, k2, "two_photon_asymptotics");
    if (x1.empty() || x2.empty())
        throw ValidationError("two_photon_asymptotics: empty grid");

    TwoPhotonAsymptotics out;
    out.x1 = x1;
    out.x2 = x2;
    const auto n1 = static_cast<Eigen::Index>(x1.size());
    const auto n2 = static_cast<Eigen::Index>(x2.size());
    out.t2.resize(n1, n2);
    out.r2.resize(n1, n2);
    out.rt.resize(n1, n2);

    const double pref2 = 1.0 / (std::sqrt(2.0) * M_PI);
    const double w = p.omega_e / p.v_g;
    for (Eigen::Index a = 0; a < n1; ++a) {
        for (Eigen::Index b = 0; b < n2; ++b) {
            const double x = x1[a] - x2[b];
            const double xc = 0.5 * (x1[a] + x2[b]);
            const double env = std::exp(-p.Gamma * std::abs(x) / p.v_g);
            out.t2(a, b) = -pref2 * std::exp(2.0 * I * w * xc) * env;
            out.r2(a, b) = pref2 * std::exp(-2.0 * I * w * xc) * (1.0 - env);
            out.rt(a, b) = -(1.0 / M_PI) * std::exp(I * w * x) *
                           std::exp(-2.0 * p.Gamma * std::abs(xc) / p.v_g);
        }
    }
    return out;
}

TwoPhotonProfiles two_photon_profiles(const core::EmitterParams& p,
                                      const std::vector<double>& x) {
    const double k_res = p.omega_e / p.v_g;
    require_resonant_lossless(p, k_res, k_res, "two_photon_profiles");
    if (x.empty()) throw ValidationError("two_photon_profiles: empty grid");

    TwoPhotonProfiles out;
    out.x = x;
    out.t2_sq.resize(x.size());
    out.r2_sq.resize(x.size());
    out.rt_sq.resize(x.size());
    const double pref = 1.0 / (2.0 * M_PI * M_PI);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double env = std::exp(-p.Gamma * std::abs(x[i]) / p.v_g);
        out.t2_sq[i] = pref * env * env;
        out.r2_sq[i] = pref * (1.0 - env) * (1.0 - env);
        out.rt_sq[i] = (1.0 / (M_PI * M_PI)) * std::exp(-4.0 * p.Gamma * std::abs(x[i]) / p.v_g);
    }
    return out;
}

namespace {

// alpha(k) without the sqrt(n_bar) factor; it cancels in every ratio below.
double envelope(const core::CoherentInput& in, double k) {
    const double u = (k - in.k0) / in.delta_k;
    return std::exp(-u * u / 4.0) / std::pow(2.0 * M_PI * in.delta_k * in.delta_k, 0.25);
}

}  // namespace

double coherent_transmission(const core::EmitterParams& p, const core::CoherentInput& in,
                             double x) {
    if (!(x > 0.0))
        throw ValidationError("coherent_transmission: requires x > 0 (transmitted side)");

    const double a = in.k0 - 6.0 * in.delta_k;
    const double b = in.k0 + 6.0 * in.delta_k;
    auto num_f = [&](double k) {
        return envelope(in, k) * t_of(p, p.v_g * k - p.omega_e) * std::exp(I * k * x);
    };
    auto den_f = [&](double k) { return envelope(in, k) * std::exp(I * k * x); };
    const auto num = numerics::integrate_gk(num_f, a, b);
    const auto den = numerics::integrate_gk(den_f, a, b);
    return std::norm(num.value) / std::norm(den.value);
}

AveragedCoefficients gaussian_averaged_coefficients(const core::EmitterParams& p,
                                                    const core::CoherentInput& in) {
    const double a = in.k0 - 6.0 * in.delta_k;
    const double b = in.k0 + 6.0 * in.delta_k;
    auto weight = [&](double k) {
        const double e = envelope(in, k);
        return e * e;
    };
    auto Tf = [&](double k) {
        const double d = p.v_g * k - p.omega_e;
        return complex<double>(weight(k) * std::norm(t_of(p, d)), 0.0);
    };
    auto Rf = [&](double k) {
        const double d = p.v_g * k - p.omega_e;
        const complex<double> r = t_of(p, d) - 1.0;
        return complex<double>(weight(k) * std::norm(r), 0.0);
    };
    auto Wf = [&](double k) { return complex<double>(weight(k), 0.0); };
    const double W = numerics::integrate_gk(Wf, a, b).value.real();
    return {numerics::integrate_gk(Tf, a, b).value.real() / W,
            numerics::integrate_gk(Rf, a, b).value.real() / W};
}

std::vector<double> g2_transmitted(const core::EmitterParams& p, const core::CoherentInput& in,
                                   const std::vector<double>& tau) {
    for (double t : tau)
        if (!std::isfinite(t)) throw ValidationError("g2_transmitted: tau grid must be finite");

    const double a = in.k0 - 6.0 * in.delta_k;
    const double b = in.k0 + 6.0 * in.delta_k;
    auto At_f = [&](double k) { return envelope(in, k) * t_of(p, p.v_g * k - p.omega_e); };
    auto Ar_f = [&](double k) {
        return envelope(in, k) * (t_of(p, p.v_g * k - p.omega_e) - 1.0);
    };
    const complex<double> At = numerics::integrate_gk(At_f, a, b).value;
    const complex<double> Ar = numerics::integrate_gk(Ar_f, a, b).value;

    const complex<double> At2 = At * At;
    const complex<double> Ar2 = Ar * Ar;
    std::vector<double> g(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        const double env = std::exp(-(p.Gamma + p.gamma) * std::abs(tau[i]));
        g[i] = std::norm(At2 - Ar2 * env) / std::norm(At2);
    }
    return g;
}

double g2_monochromatic(const core::EmitterParams& p, double delta, double tau) {
    const auto a = one_photon_amplitudes(p, delta);
    if (std::abs(a.t) == 0.0)
        throw ValidationError(
            "g2_monochromatic: perfect-mirror divergence (|t| = 0 at this detuning); "
            "evaluate g2_transmitted with finite Delta_k instead");
    const complex<double> t2 = a.t * a.t;
    const complex<double> r2 = a.r * a.r;
    const double env = std::exp(-(p.Gamma + p.gamma) * std::abs(tau));
    return std::norm(t2 - r2 * env) / std::norm(t2);
}

}  // namespace wqed::analytic2le
