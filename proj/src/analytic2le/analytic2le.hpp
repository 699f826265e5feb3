#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/grid.hpp"
#include "core/params.hpp"
#include "core/spectrum.hpp"

// Closed-form single- and two-photon scattering from a side-coupled
// two-level emitter, the input-output crosscheck, and the coherent-state
// observables (transmission, g2).
//
// Sign convention: r = t - 1 throughout. Other parts of the literature
// define the reflection amplitude with the opposite sign (see the driven-
// qubit steady state in router3le); comparisons across the two conventions
// are made on normalized |r| lineshapes only.
namespace wqed::analytic2le {

struct OnePhotonAmplitudes {
    std::complex<double> t;
    std::complex<double> r;  // r = t - 1
};

// t = (Delta + i gamma) / (Delta + i (gamma + Gamma)), r = t - 1.
OnePhotonAmplitudes one_photon_amplitudes(const core::EmitterParams& p, double delta);

// R = Gamma^2 / (Delta^2 + (gamma+Gamma)^2),
// T = (Delta^2 + gamma^2) / (Delta^2 + (gamma+Gamma)^2); also fills t, r.
core::Spectrum one_photon_coefficients(const core::EmitterParams& p,
                                       const core::DetuningGrid& grid);

// Heisenberg-picture route: steady solution of the inhomogeneous coherence
// equation and the output-field relation b_out = b_in - i (V/v_g) sigma_-.
// Derived without the loss term; rejects gamma != 0.
OnePhotonAmplitudes input_output_one_photon(const core::EmitterParams& p, double delta);

// --- two-photon scattering ---------------------------------------------

// Building blocks of the two-photon eigenstate: the scattered one-photon
// amplitude g_k(x) (step convention theta(0) = 1/2) and the emitter
// excitation amplitude e_k.
std::complex<double> one_photon_piece(const core::EmitterParams& p, double k, double x);
std::complex<double> excitation_amplitude(const core::EmitterParams& p, double k);

struct BoundStateAmplitudes {
    std::vector<double> x1, x2;
    Eigen::MatrixXcd g_rr;  // two right-moving photons, g_RR(x1, x2)
    Eigen::VectorXcd e_r;   // one right-moving photon with the emitter excited, e_R(x1)
};

// Assembles g_RR(x1,x2) and e_R(x1) from g_k, e_k, including the bound-state
// terms that decay as exp(-(gamma+Gamma)|x1-x2|/v_g).
BoundStateAmplitudes two_photon_bound_state(const core::EmitterParams& p, double k1, double k2,
                                            const std::vector<double>& x1,
                                            const std::vector<double>& x2);

struct TwoPhotonAsymptotics {
    std::vector<double> x1, x2;
    Eigen::MatrixXcd t2;  // both transmitted
    Eigen::MatrixXcd r2;  // both reflected
    Eigen::MatrixXcd rt;  // one transmitted, one reflected
};

// Asymptotic outgoing amplitudes for two degenerate resonant photons on a
// lossless emitter (v_g k1 = v_g k2 = omega_e, gamma = 0):
//   t2 = -(1/(sqrt(2) pi)) e^{2 i omega_e x_c / v_g} e^{-Gamma |x| / v_g}
//   r2 = +(1/(sqrt(2) pi)) e^{-2 i omega_e x_c / v_g} (1 - e^{-Gamma |x| / v_g})
//   rt = -(1/pi) e^{i omega_e x / v_g} e^{-2 Gamma |x_c| / v_g}
// with x = x1 - x2 and x_c = (x1 + x2)/2. Off-resonant or lossy requests
// are rejected: the closed form only exists in this corner.
TwoPhotonAsymptotics two_photon_asymptotics(const core::EmitterParams& p, double k1, double k2,
                                            const std::vector<double>& x1,
                                            const std::vector<double>& x2);

// |t2|^2 and |r2|^2 against the separation x = x1 - x2 (independent of x_c),
// and |rt|^2 against the center coordinate x_c. Same preconditions as
// two_photon_asymptotics, evaluated at resonance.
struct TwoPhotonProfiles {
    std::vector<double> x;      // separation samples
    std::vector<double> t2_sq;  // |t2|^2(x)
    std::vector<double> r2_sq;  // |r2|^2(x)
    std::vector<double> rt_sq;  // |rt|^2 sampled at x_c = x (reuses the same axis)
};
TwoPhotonProfiles two_photon_profiles(const core::EmitterParams& p,
                                      const std::vector<double>& x);

// --- coherent-state observables -----------------------------------------

// Transmission of a weak coherent wave packet at x > 0 (leading, one-photon
// order): |int dk alpha(k) t_k e^{ikx}|^2 / |int dk alpha(k) e^{ikx}|^2,
// by adaptive quadrature truncated at k0 +- 6 Delta_k.
double coherent_transmission(const core::EmitterParams& p, const core::CoherentInput& in,
                             double x);

// Ensemble-averaged one-photon coefficients of the same Gaussian packet:
// T = int dk |alpha(k)|^2 T(k) (and likewise R). This is the scattering
// prediction for a single-photon wave packet, used as the analytic side of
// the lattice crosscheck.
struct AveragedCoefficients {
    double T;
    double R;
};
AveragedCoefficients gaussian_averaged_coefficients(const core::EmitterParams& p,
                                                    const core::CoherentInput& in);

// g2 of the transmitted field for a weak coherent input,
//   g2(tau) = |A_t^2 - A_r^2 e^{-(Gamma+gamma)|tau|}|^2 / |A_t^2|^2,
// A_t = int dk alpha(k) t_k, A_r = int dk alpha(k) r_k (the x-independent
// factorization of the double-integral form; the tensor-product double
// integral is kept as a test oracle).
std::vector<double> g2_transmitted(const core::EmitterParams& p, const core::CoherentInput& in,
                                   const std::vector<double>& tau);

// Monochromatic limit (Delta_k -> 0 inside the integrals):
//   g2(tau) = |t^2 - r^2 e^{-(Gamma+gamma)|tau|}|^2 / |t|^4
// at carrier detuning delta. Throws a "perfect-mirror divergence" error when
// |t| = 0 exactly; use the finite-Delta_k g2_transmitted there instead.
double g2_monochromatic(const core::EmitterParams& p, double delta, double tau);

}  // namespace wqed::analytic2le
