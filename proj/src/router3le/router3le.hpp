#pragma once

#include <complex>

#include "core/grid.hpp"
#include "core/params.hpp"
#include "core/spectrum.hpp"

// Driven three-level emitter as a single-photon router: EIT / Autler-Townes
// transmission lineshapes, plus the driven two-level steady state with pure
// dephasing and its optical-Bloch-equation oracle.
namespace wqed::router3le {

// chi = Delta + i gamma - Omega_c^2 / (4 (delta + i gamma_s)),
// delta = Delta - Delta_c. The pole at delta = 0, gamma_s = 0 is carried as
// a first-class divergent value rather than a NaN; it maps to perfect
// transparency (t' = 1, r' = 0).
struct Susceptibility {
    std::complex<double> value;
    bool divergent = false;
};

Susceptibility susceptibility_chi(const core::ThreeLevelParams& p, double delta_probe);

// t' = chi / (chi + i Gamma), r' = -i Gamma / (chi + i Gamma).
struct RouterAmplitudes {
    std::complex<double> t;
    std::complex<double> r;
};
RouterAmplitudes router_amplitudes_at(const core::ThreeLevelParams& p, double delta_probe);
core::Spectrum router_amplitudes(const core::ThreeLevelParams& p, const core::DetuningGrid& grid);

// Separation of the Autler-Townes doublet: the two dressed-state resonance
// lines, located as the two local maxima of the reflection |r'|^2
// (equivalently the two transmission minima). Coarse scan over
// Delta in [-3 Omega_c, 3 Omega_c] at 2001 points, then golden-section
// refinement of each peak. Throws "no doublet found" when the scan shows
// fewer than two interior reflection maxima. weak_drive is flagged when
// Omega_c is not well above Gamma (splitting ~ Omega_c only holds for
// strong drive).
struct AtsSplitting {
    double splitting;
    double peak_lo;
    double peak_hi;
    bool weak_drive;
};
AtsSplitting ats_splitting(const core::ThreeLevelParams& p);

// Driven two-level emitter with pure dephasing, Gamma2 = Gamma1/2 + Gamma_phi.
// r0 is the maximal reflection amplitude (a free normalization, default 1).
struct DrivenQubitParams {
    double Gamma1;     // energy relaxation rate
    double Gamma_phi;  // pure dephasing rate
    double Gamma2;     // derived: Gamma1/2 + Gamma_phi
    double Omega;      // probe Rabi frequency
    double r0;         // maximal reflection amplitude, in [0, 1]

    DrivenQubitParams(double Gamma1_, double Gamma_phi_, double Omega_, double r0_ = 1.0);
};

// r = r0 (1 + i Delta/Gamma2) / (1 + (Delta/Gamma2)^2 + Omega^2/(Gamma1 Gamma2)),
// t = 1 - r. Note the sign convention differs from the scattering-theory
// r = t - 1; the two are compared only through normalized |r| lineshapes.
struct DrivenQubitAmplitudes {
    std::complex<double> r;
    std::complex<double> t;
};
DrivenQubitAmplitudes driven_qubit_steady_state(const DrivenQubitParams& q, double delta);

// Independent route: steady state of the two-level optical Bloch equations
// (3x3 real linear solve for (Re sigma, Im sigma, rho_ee)), mapped to the
// reflection with the same r0 normalization, r = (2 i Gamma2 r0 / Omega) sigma.
// Requires Omega > 0 (the mapping divides by Omega); reports a singular
// system when all rates vanish.
DrivenQubitAmplitudes bloch_steady_state_oracle(const DrivenQubitParams& q, double delta);

}  // namespace wqed::router3le
