// jcm.cpp

#include "cqed/jcm.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/eig.hpp"

namespace cqed {

namespace {

void validate(const JcmParams& p) {
    if (p.n_cav < 3) throw std::domain_error("JcmParams: n_cav must be >= 3");
    if (p.g < 0.0) throw std::domain_error("JcmParams: g must be >= 0");
}

// Qubit operators in the (|g>, |e>) ordering.
Operator qubit_sz() {
    Operator s(2);
    s(0, 0) = -1.0;
    s(1, 1) = 1.0;
    return s;
}

Operator qubit_raise() { return ket_bra(2, 1, 0); }  // |e><g|
Operator qubit_lower() { return ket_bra(2, 0, 1); }  // |g><e|

Operator jc_core(const JcmParams& p, double omega_r, double omega_q, double drive_rabi) {
    const Operator a = destroy(p.n_cav);
    const Operator id_c = Operator::identity(p.n_cav);
    const Operator id_q = Operator::identity(2);

    Operator h = omega_r * kron(id_q, create(p.n_cav) * a) +
                 (0.5 * omega_q) * kron(qubit_sz(), id_c) +
                 p.g * (kron(qubit_raise(), a) + kron(qubit_lower(), a.adjoint()));
    if (drive_rabi != 0.0)
        h += drive_rabi * kron(qubit_raise() + qubit_lower(), id_c);
    return h;
}

}  // namespace

Operator jc_hamiltonian(const JcmParams& p) {
    validate(p);
    return jc_core(p, p.omega_r, p.omega_q, 0.0);
}

Operator jc_excitation_number(const JcmParams& p) {
    validate(p);
    return kron(Operator::identity(2), number_op(p.n_cav)) +
           kron(projector(2, 1), Operator::identity(p.n_cav));
}

JcDoublet jc_doublet(int n, double delta, double g, double omega_r) {
    if (n < 0) throw std::domain_error("jc_doublet: n must be >= 0");
    const double w0 = 2.0 * g * std::sqrt(n + 1.0);          // W_n(0)
    const double wn = std::hypot(delta, w0);                 // W_n(Delta)
    JcDoublet d;
    d.e_plus = (n + 0.5) * omega_r + 0.5 * wn;
    d.e_minus = (n + 0.5) * omega_r - 0.5 * wn;
    d.theta = std::atan2(w0, delta);
    return d;
}

Operator jc_block(int n, double delta, double g, double omega_r) {
    if (n < 0) throw std::domain_error("jc_block: n must be >= 0");
    Operator h(2);
    const double off = (n + 0.5) * omega_r;
    h(0, 0) = off + 0.5 * delta;   // <e,n|
    h(1, 1) = off - 0.5 * delta;   // <g,n+1|
    h(0, 1) = g * std::sqrt(n + 1.0);
    h(1, 0) = g * std::sqrt(n + 1.0);
    return h;
}

double dispersive_shift(const JcmParams& p) {
    const double detuning = p.omega_r - p.omega_q;
    if (detuning == 0.0)
        throw regime_error("dispersive_shift: qubit and cavity resonant, no dispersive regime");
    return p.g * p.g / detuning;
}

double dispersive_ratio(const JcmParams& p) {
    const double detuning = p.omega_r - p.omega_q;
    if (detuning == 0.0)
        throw regime_error("dispersive_ratio: qubit and cavity resonant");
    return std::abs(p.g / detuning);
}

bool dispersive_ratio_warning(const JcmParams& p) {
    const double r = dispersive_ratio(p);
    return r > 0.05 && r <= 0.1;
}

DispersiveEnergies dispersive_energies(const JcmParams& p, int n, double omega_d) {
    if (n < 0) throw std::domain_error("dispersive_energies: n must be >= 0");
    const double r = dispersive_ratio(p);
    if (r > 0.1)
        throw regime_error("dispersive_energies: g/|detuning| > 0.1, dispersive expansion invalid");
    const double chi = dispersive_shift(p);
    const double wr = p.omega_r - omega_d;
    const double wq = p.omega_q - omega_d;
    const double half_d = 0.5 * (p.omega_r - p.omega_q);
    DispersiveEnergies e;
    e.chi = chi;
    e.omega_g_n = n * (wr + chi) + half_d;
    e.omega_e_n = n * (wr - chi) + (wq - chi) + half_d;
    return e;
}

Operator driven_rotating_hamiltonian(const JcmParams& p, const DriveSpec& d) {
    validate(p);
    if (d.drive_rabi < 0.0) throw std::domain_error("DriveSpec: drive_rabi must be >= 0");
    return jc_core(p, p.omega_r - d.omega_d, p.omega_q - d.omega_d, d.drive_rabi);
}

PolaritonBasis polariton_basis(const JcmParams& p, const DriveSpec& d) {
    validate(p);
    if (d.drive_rabi < 0.0) throw std::domain_error("DriveSpec: drive_rabi must be >= 0");
    const double r = dispersive_ratio(p);
    if (r > 0.1)
        throw regime_error("polariton_basis: g/|detuning| > 0.1, dispersive expansion invalid");

    const double chi = dispersive_shift(p);
    const double wq = p.omega_q - d.omega_d;
    const double wd2 = 2.0 * d.drive_rabi;

    PolaritonBasis b{};
    b.chi = chi;
    // atan2 keeps both angles in [0, pi] and continuous across the window.
    b.theta_l = std::atan2(wd2, wq - chi);
    b.theta_u = std::atan2(wd2, -wq + 3.0 * chi);
    b.omega_21 = std::hypot(wq - chi, wd2);
    b.omega_43 = std::hypot(wq - 3.0 * chi, wd2);
    b.nested = (p.omega_q - 3.0 * chi < d.omega_d) && (d.omega_d < p.omega_q - chi);

    const double cl = std::cos(0.5 * b.theta_l), sl = std::sin(0.5 * b.theta_l);
    const double cu = std::cos(0.5 * b.theta_u), su = std::sin(0.5 * b.theta_u);
    // Subspace ordering {|g,0>, |e,0>, |g,1>, |e,1>}.
    b.states[0] = {cxd{cl}, cxd{-sl}, cxd{0.0}, cxd{0.0}};   // |1>
    b.states[1] = {cxd{sl}, cxd{cl}, cxd{0.0}, cxd{0.0}};    // |2>
    b.states[2] = {cxd{0.0}, cxd{0.0}, cxd{-su}, cxd{cu}};   // |3>
    b.states[3] = {cxd{0.0}, cxd{0.0}, cxd{cu}, cxd{su}};    // |4>
    return b;
}

PolaritonNumeric polariton_numeric(const JcmParams& p, const DriveSpec& d) {
    const PolaritonBasis analytic = polariton_basis(p, d);

    // Exact diagonalization of the driven rotating-frame Hamiltonian; a bare
    // 4x4 block would drop the |e,1> <-> |g,2> repulsion, which shifts the
    // upper pair at order chi. Pad the cavity so that truncation error sits
    // far below the dispersive-expansion error being measured.
    JcmParams big = p;
    big.n_cav = std::max(p.n_cav, 8);
    const Operator h = driven_rotating_hamiltonian(big, d);
    const EigenSystem es = eig_hermitian(h);

    // Embed the analytic states in the full basis: |g,n> at index n,
    // |e,n> at n_cav + n (qubit slow, cavity fast).
    const int nc = big.n_cav;
    const int dim = 2 * nc;
    const int idx[4] = {0, nc, 1, nc + 1};  // subspace order g0, e0, g1, e1

    std::array<double, 4> energy{};
    for (int s = 0; s < 4; ++s) {
        int best = 0;
        double omax = -1.0;
        for (int c = 0; c < dim; ++c) {
            cxd ov{0.0, 0.0};
            for (int r = 0; r < 4; ++r)
                ov += std::conj(analytic.states[s][r]) * es.vectors(idx[r], c);
            if (std::abs(ov) > omax) {
                omax = std::abs(ov);
                best = c;
            }
        }
        energy[s] = es.values[best];
    }
    return {std::abs(energy[1] - energy[0]), std::abs(energy[3] - energy[2])};
}

}  // namespace cqed
