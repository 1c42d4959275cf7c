// jcm.hpp — Jaynes–Cummings builders, analytic dressed doublets, dispersive
// energies, the driven rotating-frame Hamiltonian, and the doubly-dressed
// polariton basis that defines the engineered Lambda system.
//
// Basis ordering everywhere: qubit slow index, cavity fast index, qubit
// levels (|g>, |e>). hbar = 1 frequency units. Golden files depend on this
// ordering.
//
// Dispersive conventions: chi = g^2 / (omega_r - omega_q). With the qubit
// below the cavity this makes chi positive, the nesting window
// omega_q - 3 chi < omega_d < omega_q - chi nonempty, and the pair-splitting
// formulas below consistent with exact diagonalization — the combination
// under which the dressed-level pulls (+chi on g-levels, -chi on e-levels
// per photon) hold.

#pragma once

#include <array>

#include "cqed/operator.hpp"

namespace cqed {

struct JcmParams {
    double omega_r;  // rad/s, cavity
    double omega_q;  // rad/s, qubit
    double g;        // rad/s, coupling, >= 0
    int n_cav;       // cavity truncation, >= 3
};

struct DriveSpec {
    double omega_d;  // rad/s, drive frequency
    double drive_rabi;  // rad/s, Omega_d >= 0
};

// H = w_r a†a + (w_q/2) sigma_z + g (sigma+ a + sigma- a†), dimension 2 n_cav.
// Conserves total excitation a†a + |e><e|.
Operator jc_hamiltonian(const JcmParams& p);

// a†a + |e><e| on the same basis, for conservation checks.
Operator jc_excitation_number(const JcmParams& p);

struct JcDoublet {
    double e_plus;   // (n + 1/2) w_r + W_n(Delta)/2
    double e_minus;  // (n + 1/2) w_r - W_n(Delta)/2
    double theta;    // mixing angle, atan2(W_n(0), Delta) in [0, pi]
};

// Doublet of the n-th excitation manifold. delta = w_q - w_r;
// W_n(Delta) = sqrt(Delta^2 + 4 g^2 (n+1)). omega_r shifts both levels by
// the manifold offset and may be left 0 for manifold-relative energies.
JcDoublet jc_doublet(int n, double delta, double g, double omega_r = 0.0);

// The 2x2 block of the JC Hamiltonian on (|e,n>, |g,n+1>), for oracle tests.
Operator jc_block(int n, double delta, double g, double omega_r = 0.0);

struct DispersiveEnergies {
    double omega_g_n;  // n (w~_r + chi) + D/2
    double omega_e_n;  // n (w~_r - chi) + (w~_q - chi) + D/2
    double chi;        // g^2 / (w_r - w_q)
};

// Dispersive-limit level energies in the frame rotating at omega_d.
// Requires |g / (w_r - w_q)| <= 0.1 (regime_error above, and exactly at
// resonance); `warning` flag via dispersive_ratio_warning below 0.05.
DispersiveEnergies dispersive_energies(const JcmParams& p, int n, double omega_d = 0.0);

double dispersive_shift(const JcmParams& p);       // chi
double dispersive_ratio(const JcmParams& p);       // |g / (w_r - w_q)|
bool dispersive_ratio_warning(const JcmParams& p); // ratio in (0.05, 0.1]

// H = w~_r a†a + (w~_q/2) sigma_z + g (sigma+ a + sigma- a†) + W_d (sigma+ + sigma-)
// with w~ = w - w_d; same basis ordering as jc_hamiltonian.
Operator driven_rotating_hamiltonian(const JcmParams& p, const DriveSpec& d);

// The four doubly-dressed polariton states spanning the engineered Lambda
// system, expressed on the ordered subspace {|g,0>, |e,0>, |g,1>, |e,1>}.
struct PolaritonBasis {
    double chi;       // dispersive shift
    double theta_l;   // lower-pair mixing angle, tan = 2 W_d / (w~_q - chi)
    double theta_u;   // upper-pair mixing angle, tan = 2 W_d / (-w~_q + 3 chi)
    double omega_21;  // sqrt((w~_q - chi)^2 + 4 W_d^2)
    double omega_43;  // sqrt((w~_q - 3 chi)^2 + 4 W_d^2)
    bool nested;      // w_q - 3 chi < w_d < w_q - chi
    std::array<std::array<cxd, 4>, 4> states;  // states[i] = |i+1> components
};

// Dispersive-limit construction of |1>..|4>. Outside the nesting window the
// basis is still returned with nested = false.
PolaritonBasis polariton_basis(const JcmParams& p, const DriveSpec& d);

struct PolaritonNumeric {
    double omega_21;
    double omega_43;
};

// Cross-check: diagonalizes the driven Hamiltonian restricted to the
// {|g,0>, |e,0>, |g,1>, |e,1>} block and reads the pair splittings off the
// eigenvectors (matched to the analytic states by overlap). Quantifies the
// dispersive-limit approximation.
PolaritonNumeric polariton_numeric(const JcmParams& p, const DriveSpec& d);

}  // namespace cqed
