#pragma once

#include <complex>
#include <vector>

#include "core/error.hpp"

// Two-photon Rydberg-polariton dynamics: the effective wavefunction
// psi(r, R) of a photon pair obeys a Schroedinger-like equation with the
// mean coordinate R playing the role of time,
//   i dpsi/dR = (4 l_a Delta / gamma) d^2psi/dr^2 + (gamma / (l_a Delta)) U(r) psi,
// with U a step potential of half-width r_B (the blockade radius) and
// l_a = L/OD = 2 r_B/OD_B the attenuation length. Valid in the dispersive
// window |Delta| >> gamma, Omega_c << |Delta|.
namespace wqed::rydberg {

struct RydbergMedium {
    double od;       // resonant optical depth of the medium
    double od_b;     // optical depth of one blockade sphere
    double r_b;      // blockade radius
    double L;        // medium length
    double gamma;    // intermediate-state linewidth
    double delta;    // probe detuning
    double omega_c;  // control Rabi frequency

    double attenuation_length() const { return L / od; }                       // l_a
    double v_eit() const;  // l_a Omega_c^2 / (2 gamma)
    double mass_coef() const;       // 4 l_a delta / gamma
    double potential_coef() const;  // gamma / (l_a delta)
};

// L derived from the blockade-sphere definition: L = od * 2 r_b / od_b.
RydbergMedium make_medium(double od, double od_b, double r_b, double gamma, double delta,
                          double omega_c);

// Explicit L; enforces the consistency L/OD == 2 r_B/OD_B to 1e-9 (relative).
RydbergMedium make_medium_explicit(double od, double od_b, double r_b, double L, double gamma,
                                   double delta, double omega_c);

// Step potential, closed interval: U = 1 for |r| <= r_B, else 0.
double effective_potential(double r, double r_b);

// Smoothed edge for convergence studies: 0.5 (1 + tanh((r_B - |r|)/width)).
double effective_potential_smoothed(double r, double r_b, double width);

struct PsiField {
    std::vector<double> r;                      // uniform cell-centered grid, symmetric in r
    std::vector<std::complex<double>> values;
    double R = 0.0;                             // current mean coordinate ("time")
};

// psi = 1 on a cell-centered grid of n points over [-half_width, half_width].
PsiField uniform_initial(int n, double half_width);

struct EvolveOptions {
    int n_steps = 0;                    // 0 = choose from the step policy
    double smoothing_width = 0.0;       // 0 = sharp step edge
    bool dissipative_extension = false; // Delta -> Delta + i gamma (off-validity extrapolation)
};

struct EvolveResult {
    PsiField psi;                // at R = L
    bool validity_window_ok;     // |Delta| >= 3 gamma and Omega_c <= |Delta|/2
    bool wall_ok;                // |psi - 1| at the walls stayed <= 1e-6
    double norm_rel_change;      // |norm(L) - norm(0)| / norm(0)
    int steps;
    double dR;
};

// Crank-Nicolson (Cayley) propagation from R = 0 to R = L on the grid of
// psi0, with zero-flux walls. One iterative-refinement pass per solve keeps
// the stationary solution psi = 1 (for U = 0) exact to ~1e-13 at any step
// count. A configured step exceeding the accuracy policy
// dR <= min(r_B^2/|c2|, 1/|c0|)/16 aborts.
EvolveResult evolve_psi(const RydbergMedium& m, const PsiField& psi0,
                        const EvolveOptions& opts = {});

struct BoundState {
    double eigenvalue;           // eigenvalue of the evolution generator
    double binding;              // |eigenvalue|, in (0, |potential_coef|)
    std::vector<double> r;
    std::vector<double> psi;     // real eigenfunction, L2-normalized (sum |psi|^2 h = 1)
};

// Discrete spectrum of the finite well implied by the equation coefficients,
// by Sturm-sequence bisection on the discretized 1D operator with Richardson
// extrapolation in the grid spacing; a 1D finite well always binds at least
// one state. States are ordered by decreasing binding.
std::vector<BoundState> bound_states(const RydbergMedium& m, int max_states = 8);

struct G2PhiCurves {
    std::vector<double> tau;
    std::vector<double> g2;   // |psi(v_EIT tau, L)|^2
    std::vector<double> phi;  // arg psi(v_EIT tau, L)
};

// Reads g2 and the conditional phase off an evolved field; linear
// interpolation between grid points, tau outside the grid is an error.
G2PhiCurves g2_and_phase(const RydbergMedium& m, const PsiField& psi_out,
                         const std::vector<double>& tau);

// Dissipative-interaction blockade probability p = 1 - OD^{-1/2} e^{-OD_B}.
double blockade_probability(double od, double od_b);

// Single-blockade-sphere dispersive phase estimate phi = -(gamma/Delta) OD_B / 2
// (the weak-interaction estimate, not the PDE result).
double conditional_phase_estimate(const RydbergMedium& m);

}  // namespace wqed::rydberg
