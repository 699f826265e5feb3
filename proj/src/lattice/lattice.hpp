#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/error.hpp"

// Tight-binding waveguide (dispersion -2J cos k) with the emitter realized
// as an extra bosonic side-coupled site; the hard-core constraint on the
// emitter site reproduces the two-level emitter in the U -> infinity limit.
// Wave packets are evolved in time with a fixed-step RK4 integrator and the
// transmission/reflection read off after the packet clears the emitter.
// This module is the numerical oracle for the linear-dispersion closed forms.
namespace wqed::lattice {

struct LatticeModel {
    int n_sites;
    double J;        // hopping rate
    double omega_e;  // emitter frequency (band center = 0)
    double V0;       // emitter-waveguide coupling
    double U;        // on-site interaction on the emitter site (ignored if hardcore)
    bool hardcore;
    int emitter_site;

    // effective linear-dispersion parameters at carrier k0
    double group_velocity(double k0) const;          // 2 J sin k0
    double guided_decay(double k0) const;            // Gamma = V0^2 / v_g(k0)
    double detuning(double k0) const;                // -2J cos k0 - omega_e
};

LatticeModel build_model(double J, double omega_e, double V0, double U, bool hardcore,
                         int n_sites, int emitter_site = -1);

// Dense one-particle Hamiltonian over (sites..., emitter); for tests and
// small spectra only.
Eigen::MatrixXd one_photon_hamiltonian(const LatticeModel& m);

struct OnePhotonState {
    Eigen::VectorXcd amp;  // n_sites + 1 amplitudes, last = emitter
    double time = 0.0;
};

struct TwoPhotonState {
    Eigen::MatrixXcd amp;  // symmetric (n_sites+1) x (n_sites+1), Frobenius-normalized
    double time = 0.0;
};

struct GaussianPacket {
    double k0;
    double sigma_x;  // position-space std dev (sites)
    double center;
};

OnePhotonState gaussian_packet(const LatticeModel& m, const GaussianPacket& g);

// Symmetrized product of two displaced Gaussians with equal carriers.
TwoPhotonState two_packet_state(const LatticeModel& m, const GaussianPacket& g,
                                double center1, double center2);

// Conservative default step: min(0.02/J, 0.012 / rho) with rho a Gershgorin
// bound on the one-particle spectrum; keeps the RK4 norm drift far below
// 1e-9 per 1e4 steps.
double default_dt(const LatticeModel& m);

// Unitary evolution by `steps` fixed RK4 steps. Requires dt <= 0.02/J and a
// normalized state; aborts with diagnostics if the norm drifts by more than
// 1e-9 per 1e4 steps.
void evolve(const LatticeModel& m, OnePhotonState& s, double dt, long steps);
void evolve(const LatticeModel& m, TwoPhotonState& s, double dt, long steps);

struct TransmissionResult {
    double T;
    double R;
    double sum_deficit;  // 1 - T - R (mass still near the emitter)
    double norm_drift;
    double t_end;
    long steps;
    double dt;
};

// Scatters a spectrally narrow packet off the emitter and integrates |psi|^2
// on each side after the packet clears it (clearance 3 sigma + 8 v_g/Gamma,
// so the slaved emitter amplitude has rung down). Aborts if the geometry
// cannot hold the packet or if probability reaches the hard walls.
TransmissionResult transmission_from_run(const LatticeModel& m, const GaussianPacket& g,
                                         double dt = 0.0);

struct G2MapResult {
    std::vector<int> separation;  // x1 - x2
    std::vector<double> tt;       // transmitted-transmitted coincidences, normalized
    std::vector<double> rr;       // reflected-reflected coincidences, normalized
    double tt_mass;
    double rr_mass;
    double norm_drift;
    double t_end;
    long steps;
    TwoPhotonState final_state;
};

// Post-scattering joint amplitude of a resonant two-photon packet on the
// hard-core emitter, reduced to coincidence profiles versus x1 - x2 in the
// transmitted-transmitted and reflected-reflected regions.
G2MapResult two_photon_g2_map(const LatticeModel& m, const GaussianPacket& g, double center1,
                              double center2, int d_max = 24, double dt = 0.0);

// Maximum double occupancy |psi_ee|^2 reached while a resonant two-photon
// packet scatters, for finite-U convergence studies (hard-core gives 0).
double double_occupancy_probe(const LatticeModel& m, const GaussianPacket& g, double center1,
                              double center2, double dt = 0.0);

}  // namespace wqed::lattice
