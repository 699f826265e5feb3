#include "lattice/lattice.hpp"

#include <cmath>
#include <string>

#include "core/validate.hpp"

namespace wqed::lattice {

using std::complex;
namespace {

constexpr complex<double> MINUS_I{0.0, -1.0};
constexpr int WALL_PAD = 12;       // cells kept clear of packet tails
constexpr int WALL_PROBE = 8;      // cells monitored for boundary contamination
constexpr double WALL_TOL = 1e-3;  // abort threshold on probed wall mass

}  // namespace

double LatticeModel::group_velocity(double k0) const { return 2.0 * J * std::sin(k0); }
double LatticeModel::guided_decay(double k0) const { return V0 * V0 / group_velocity(k0); }
double LatticeModel::detuning(double k0) const { return -2.0 * J * std::cos(k0) - omega_e; }

LatticeModel build_model(double J, double omega_e, double V0, double U, bool hardcore,
                         int n_sites, int emitter_site) {
    core::require_positive("J", J);
    core::require_finite("omega_e", omega_e);
    core::require_nonnegative("V0", V0);
    core::require_nonnegative("U", U);
    if (n_sites < 64)
        throw ValidationError("n_sites must be >= 64, got " + std::to_string(n_sites));
    if (emitter_site < 0) emitter_site = n_sites / 2;
    if (emitter_site < WALL_PAD || emitter_site > n_sites - 1 - WALL_PAD)
        throw ValidationError("emitter_site too close to a wall");
    return {n_sites, J, omega_e, V0, U, hardcore, emitter_site};
}

Eigen::MatrixXd one_photon_hamiltonian(const LatticeModel& m) {
    const int M = m.n_sites + 1;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(M, M);
    for (int x = 0; x + 1 < m.n_sites; ++x) {
        H(x, x + 1) = -m.J;
        H(x + 1, x) = -m.J;
    }
    H(m.emitter_site, m.n_sites) = m.V0;
    H(m.n_sites, m.emitter_site) = m.V0;
    H(m.n_sites, m.n_sites) = m.omega_e;
    return H;
}

namespace {

// y = H1 x over (sites, emitter); hard walls, side coupling at emitter_site.
void apply_h1(const LatticeModel& m, const complex<double>* x, complex<double>* y) {
    const int n = m.n_sites;
    const double J = m.J;
    y[0] = -J * x[1];
    for (int i = 1; i + 1 < n; ++i) y[i] = -J * (x[i - 1] + x[i + 1]);
    y[n - 1] = -J * x[n - 2];
    y[m.emitter_site] += m.V0 * x[n];
    y[n] = m.omega_e * x[n] + m.V0 * x[m.emitter_site];
}

void rhs_one(const LatticeModel& m, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_h1(m, x.data(), y.data());
    y *= MINUS_I;
}

// y = -i H x in the two-photon sector: H x = B + B^T with B = H1 x applied
// to the first leg (x symmetric), plus the emitter-site interaction. The
// B + B^T form keeps exchange symmetry exact in floating point.
void rhs_two(const LatticeModel& m, const Eigen::MatrixXcd& x, Eigen::MatrixXcd& B,
             Eigen::MatrixXcd& y) {
    const int M = m.n_sites + 1;
    for (int j = 0; j < M; ++j) apply_h1(m, x.col(j).data(), B.col(j).data());
    y = B + B.transpose();
    const int e = m.n_sites;
    if (m.hardcore)
        y(e, e) = 0.0;  // projector P H P onto singly occupied emitter
    else
        y(e, e) += m.U * x(e, e);
    y *= MINUS_I;
}

void check_dt(const LatticeModel& m, double dt) {
    core::require_positive("dt", dt);
    if (dt > 0.02 / m.J)
        throw ValidationError("evolve: dt exceeds the stability policy dt <= 0.02/J");
}

void check_drift(double norm0, double norm, long steps_done, long, const char* who) {
    const double allowed = 1e-9 * std::max(1.0, static_cast<double>(steps_done) / 1e4);
    const double drift = std::abs(norm - norm0);
    if (drift > allowed)
        throw RuntimeAbort(std::string(who) + ": norm drift " + std::to_string(drift) + " after " +
                           std::to_string(steps_done) + " steps exceeds 1e-9 per 1e4 steps");
}

template <class State, class Rhs>
double rk4_run(State& psi, double dt, long steps, Rhs&& rhs, long monitor_every,
               const char* who) {
    const double norm0 = psi.norm();
    if (std::abs(norm0 - 1.0) > 1e-6)
        throw ValidationError(std::string(who) + ": state must be normalized");

    State k1 = psi, k2 = psi, k3 = psi, k4 = psi, tmp = psi;
    for (long s = 0; s < steps; ++s) {
        rhs(psi, k1);
        tmp = psi + (0.5 * dt) * k1;
        rhs(tmp, k2);
        tmp = psi + (0.5 * dt) * k2;
        rhs(tmp, k3);
        tmp = psi + dt * k3;
        rhs(tmp, k4);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((s + 1) % monitor_every == 0) check_drift(norm0, psi.norm(), s + 1, steps, who);
    }
    const double drift = std::abs(psi.norm() - norm0);
    check_drift(norm0, psi.norm(), steps, steps, who);
    return drift;
}

}  // namespace

OnePhotonState gaussian_packet(const LatticeModel& m, const GaussianPacket& g) {
    if (!(g.k0 > 0.0 && g.k0 < M_PI))
        throw ValidationError("gaussian_packet: carrier k0 must lie inside the band (0, pi)");
    core::require_positive("sigma_x", g.sigma_x);
    if (g.sigma_x < 2.0) throw ValidationError("gaussian_packet: sigma_x must be >= 2 sites");
    if (g.center < 0.0 || g.center > m.n_sites - 1)
        throw ValidationError("gaussian_packet: center outside the lattice");

    OnePhotonState s;
    s.amp = Eigen::VectorXcd::Zero(m.n_sites + 1);
    for (int x = 0; x < m.n_sites; ++x) {
        const double d = (x - g.center) / (2.0 * g.sigma_x);
        s.amp[x] = std::polar(std::exp(-d * d), g.k0 * x);
    }
    s.amp.normalize();
    return s;
}

TwoPhotonState two_packet_state(const LatticeModel& m, const GaussianPacket& g, double center1,
                                double center2) {
    const OnePhotonState a = gaussian_packet(m, {g.k0, g.sigma_x, center1});
    const OnePhotonState b = gaussian_packet(m, {g.k0, g.sigma_x, center2});
    TwoPhotonState s;
    const int n = m.n_sites;
    s.amp = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    s.amp.topLeftCorner(n, n) = a.amp.head(n) * b.amp.head(n).transpose() +
                                b.amp.head(n) * a.amp.head(n).transpose();
    s.amp /= s.amp.norm();
    return s;
}

double default_dt(const LatticeModel& m) {
    const double rho = std::max(2.0 * m.J + m.V0, std::abs(m.omega_e) + m.V0);
    return std::min(0.02 / m.J, 0.012 / rho);
}

void evolve(const LatticeModel& m, OnePhotonState& s, double dt, long steps) {
    check_dt(m, dt);
    if (steps < 0) throw ValidationError("evolve: steps must be >= 0");
    if (steps == 0) return;
    if (s.amp.size() != m.n_sites + 1) throw ValidationError("evolve: state size mismatch");
    auto rhs = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { rhs_one(m, x, y); };
    rk4_run(s.amp, dt, steps, rhs, 2000, "evolve(one-photon)");
    s.time += dt * static_cast<double>(steps);
}

void evolve(const LatticeModel& m, TwoPhotonState& s, double dt, long steps) {
    check_dt(m, dt);
    if (steps < 0) throw ValidationError("evolve: steps must be >= 0");
    if (steps == 0) return;
    const int M = m.n_sites + 1;
    if (s.amp.rows() != M || s.amp.cols() != M)
        throw ValidationError("evolve: state size mismatch");
    Eigen::MatrixXcd B(M, M);
    auto rhs = [&](const Eigen::MatrixXcd& x, Eigen::MatrixXcd& y) { rhs_two(m, x, B, y); };
    rk4_run(s.amp, dt, steps, rhs, 500, "evolve(two-photon)");
    s.time += dt * static_cast<double>(steps);
}

namespace {

double wall_mass_one(const Eigen::VectorXcd& amp, int n) {
    double w = 0.0;
    for (int i = 0; i < WALL_PROBE; ++i) w += std::norm(amp[i]) + std::norm(amp[n - 1 - i]);
    return w;
}

double wall_mass_two(const Eigen::MatrixXcd& amp, int n) {
    double w = 0.0;
    for (int i = 0; i < WALL_PROBE; ++i)
        for (int j = 0; j < n; ++j)
            w += std::norm(amp(i, j)) + std::norm(amp(n - 1 - i, j)) + std::norm(amp(j, i)) +
                 std::norm(amp(j, n - 1 - i));
    return w;
}

}  // namespace

TransmissionResult transmission_from_run(const LatticeModel& m, const GaussianPacket& g,
                                         double dt) {
    if (dt == 0.0) dt = default_dt(m);
    check_dt(m, dt);
    const double vg = m.group_velocity(g.k0);
    if (!(vg > 0.0)) throw ValidationError("transmission_from_run: carrier must move right");
    const double Gamma = m.guided_decay(g.k0);
    if (!(Gamma > 0.0))
        throw ValidationError("transmission_from_run: emitter decoupled runs need V0 > 0; "
                              "T = 1 trivially");
    if (static_cast<double>(m.n_sites) / (2.0 * g.sigma_x) < 8.0)
        throw ValidationError(
            "transmission_from_run: packet not spectrally narrow (need n_sites/(2 sigma) >= 8)");

    const int xe = m.emitter_site;
    const double s3 = 3.0 * g.sigma_x;
    const double d_clear = s3 + 8.0 * vg / Gamma;
    const bool ok = (g.center - s3 >= WALL_PAD) && (xe - g.center >= s3 + WALL_PAD) &&
                    (xe + d_clear + s3 <= m.n_sites - WALL_PAD) && (xe - d_clear - s3 >= 0.0);
    if (!ok)
        throw RuntimeAbort("transmission_from_run: lattice cannot hold the packet through "
                           "scattering and clearance (run invalid)");

    OnePhotonState s = gaussian_packet(m, g);
    const double t_end = (xe - g.center + d_clear) / vg;
    const long steps = static_cast<long>(std::ceil(t_end / dt));

    // evolve in slices so the walls can be probed along the way
    const long slice = 4000;
    long done = 0;
    const double norm0 = s.amp.norm();
    while (done < steps) {
        const long todo = std::min(slice, steps - done);
        evolve(m, s, dt, todo);
        done += todo;
        if (wall_mass_one(s.amp, m.n_sites) > WALL_TOL)
            throw RuntimeAbort("transmission_from_run: packet hit boundary (run invalid)");
    }

    TransmissionResult out{};
    out.T = 0.0;
    out.R = 0.0;
    for (int x = 0; x < xe; ++x) out.R += std::norm(s.amp[x]);
    for (int x = xe + 1; x < m.n_sites; ++x) out.T += std::norm(s.amp[x]);
    out.sum_deficit = 1.0 - out.T - out.R;
    out.norm_drift = std::abs(s.amp.norm() - norm0);
    out.t_end = dt * static_cast<double>(steps);
    out.steps = steps;
    out.dt = dt;
    return out;
}

namespace {

TwoPhotonState run_two_packets(const LatticeModel& m, const GaussianPacket& g, double center1,
                               double center2, double dt, long& steps_out, double& drift_out,
                               double* max_double_occ) {
    const double vg = m.group_velocity(g.k0);
    const double c_lead = std::max(center1, center2);
    const double c_trail = std::min(center1, center2);
    const double s3 = 3.0 * g.sigma_x;
    const int xe = m.emitter_site;
    if (!(c_lead + s3 + WALL_PAD <= xe))
        throw ValidationError("two-photon run: packets must start left of the emitter");
    // the trailing packet must also clear the emitter before measurement
    const double t_end = (xe + s3 + 10.0 - c_lead) / vg + (c_lead - c_trail) / vg;

    TwoPhotonState s = two_packet_state(m, g, center1, center2);
    const double norm0 = s.amp.norm();
    const long steps = static_cast<long>(std::ceil(t_end / dt));
    const long slice = 2000;
    long done = 0;
    double occ = 0.0;
    while (done < steps) {
        const long todo = std::min(slice, steps - done);
        evolve(m, s, dt, todo);
        done += todo;
        occ = std::max(occ, std::norm(s.amp(m.n_sites, m.n_sites)));
        if (wall_mass_two(s.amp, m.n_sites) > WALL_TOL)
            throw RuntimeAbort("two-photon run: boundary contamination detected");
    }
    steps_out = steps;
    drift_out = std::abs(s.amp.norm() - norm0);
    if (max_double_occ) *max_double_occ = occ;
    return s;
}

}  // namespace

G2MapResult two_photon_g2_map(const LatticeModel& m, const GaussianPacket& g, double center1,
                              double center2, int d_max, double dt) {
    if (!m.hardcore)
        throw ValidationError("two_photon_g2_map: requires the hard-core emitter site");
    if (dt == 0.0) dt = default_dt(m);
    check_dt(m, dt);

    G2MapResult out{};
    out.final_state =
        run_two_packets(m, g, center1, center2, dt, out.steps, out.norm_drift, nullptr);
    out.t_end = out.final_state.time;

    const int xe = m.emitter_site;
    const int n = m.n_sites;
    const int buf = 6;
    out.separation.resize(2 * d_max + 1);
    out.tt.assign(2 * d_max + 1, 0.0);
    out.rr.assign(2 * d_max + 1, 0.0);
    for (int d = -d_max; d <= d_max; ++d) out.separation[d + d_max] = d;

    out.tt_mass = 0.0;
    out.rr_mass = 0.0;
    const auto& A = out.final_state.amp;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double w = std::norm(A(i, j));
            const int d = i - j;
            if (i > xe + buf && j > xe + buf) {
                out.tt_mass += w;
                if (std::abs(d) <= d_max) out.tt[d + d_max] += w;
            } else if (i < xe - buf && j < xe - buf) {
                out.rr_mass += w;
                if (std::abs(d) <= d_max) out.rr[d + d_max] += w;
            }
        }
    }
    auto normalize = [](std::vector<double>& v, const char* which) {
        double sum = 0.0;
        for (double x : v) sum += x;
        if (!(sum > 0.0))
            throw RuntimeAbort(std::string("two_photon_g2_map: empty ") + which + " region");
        for (double& x : v) x /= sum;
    };
    normalize(out.tt, "transmitted-transmitted");
    normalize(out.rr, "reflected-reflected");
    return out;
}

double double_occupancy_probe(const LatticeModel& m, const GaussianPacket& g, double center1,
                              double center2, double dt) {
    if (dt == 0.0) dt = default_dt(m);
    check_dt(m, dt);
    long steps = 0;
    double drift = 0.0;
    double occ = 0.0;
    run_two_packets(m, g, center1, center2, dt, steps, drift, &occ);
    return occ;
}

}  // namespace wqed::lattice
