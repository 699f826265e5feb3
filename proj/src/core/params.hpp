#pragma once

#include <cmath>

#include "core/validate.hpp"

namespace wqed::core {

// Side-coupled two-level emitter in a linear-dispersion waveguide.
// All frequencies/rates are angular and measured relative to the
// linearization point, so only the detuning Delta = v_g k - omega_e ever
// enters the closed forms. 2*Gamma is the energy relaxation rate into the
// guided channels; gamma is the loss rate into non-guided modes.
//
// Gamma = 0 is accepted as the exact decoupled-emitter limit (V = 0).
struct EmitterParams {
    double omega_e;  // transition frequency (relative to linearization point)
    double gamma;    // non-guided loss rate
    double Gamma;    // guided decay rate, Gamma = V^2 / v_g
    double v_g;      // group velocity
    double V;        // coupling amplitude, derived: V = sqrt(Gamma * v_g)

    EmitterParams(double omega_e_, double gamma_, double Gamma_, double v_g_ = 1.0)
        : omega_e(omega_e_), gamma(gamma_), Gamma(Gamma_), v_g(v_g_),
          V(std::sqrt(Gamma_ * v_g_)) {
        require_finite("omega_e", omega_e);
        require_nonnegative("gamma", gamma);
        require_nonnegative("Gamma", Gamma);
        require_positive("v_g", v_g);
    }
};

// Driven three-level emitter (Lambda or ladder): a classical control field
// with Rabi frequency Omega_c and detuning Delta_c couples |e> to |s>,
// which decays at gamma_s.
struct ThreeLevelParams {
    EmitterParams base;
    double gamma_s;  // loss rate of |s>
    double Omega_c;  // control Rabi frequency
    double Delta_c;  // control detuning

    ThreeLevelParams(EmitterParams base_, double gamma_s_, double Omega_c_, double Delta_c_)
        : base(base_), gamma_s(gamma_s_), Omega_c(Omega_c_), Delta_c(Delta_c_) {
        require_nonnegative("gamma_s", gamma_s);
        require_nonnegative("Omega_c", Omega_c);
        require_finite("Delta_c", Delta_c);
    }
};

// Gaussian coherent-state wave packet
//   alpha(k) = sqrt(n_bar) / (2 pi Delta_k^2)^{1/4} exp(-(k-k0)^2/(4 Delta_k^2)).
// The few-photon observables (transmission, g2) are derived neglecting the
// N >= 3 components, valid for n_bar <= 1; larger n_bar must be opted into
// explicitly and is flagged on the object.
struct CoherentInput {
    double k0;       // carrier wavevector
    double delta_k;  // Gaussian width in wavevector
    double n_bar;    // mean photon number
    bool nbar_above_one_allowed = false;

    CoherentInput(double k0_, double delta_k_, double n_bar_, bool allow_nbar_above_one = false)
        : k0(k0_), delta_k(delta_k_), n_bar(n_bar_),
          nbar_above_one_allowed(allow_nbar_above_one) {
        require_finite("k0", k0);
        require_positive("delta_k", delta_k);
        require_positive("n_bar", n_bar);
        if (n_bar > 1.0 && !allow_nbar_above_one)
            throw ValidationError(
                "n_bar > 1 requires allow_nbar_above_one: the few-photon "
                "expressions neglect N >= 3 contributions");
    }

    bool nbar_exceeds_validity() const { return n_bar > 1.0; }
};

}  // namespace wqed::core
