// circuits.hpp — Hamiltonians and derived parameters for the circuit zoo:
// LC oscillator, transmission line, Josephson junction, Cooper-pair box and
// its transmon limit, three-junction flux qubit, RF-SQUID phase qubit.
//
// Everything at this boundary is in SI units; conversion to the solver's
// dimensionless hbar = 1 frame happens in the dynamics builders.

#pragma once

#include <string>
#include <vector>

#include "cqed/operator.hpp"

namespace cqed {

// ------------------------------ constants ------------------------------------

struct PhysicalConstants {
    double hbar = 1.054571817e-34;        // J s
    double e_charge = 1.602176634e-19;    // C
    double eps0 = 8.8541878128e-12;       // F/m
    double c_light = 299792458.0;         // m/s

    double h() const { return 2.0 * 3.141592653589793238462643383279502884 * hbar; }
    double flux_quantum() const { return h() / (2.0 * e_charge); }          // Wb
    double resistance_quantum() const {                                     // Ohm
        return h() / ((2.0 * e_charge) * (2.0 * e_charge));
    }
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ------------------------------ LC oscillator --------------------------------

struct OscillatorParams {
    double inductance;   // H
    double capacitance;  // F
    double omega;        // rad/s, 1/sqrt(LC)
    double impedance;    // Ohm, sqrt(L/C)
    double z;            // impedance / R_Q
    double q_zpf;        // C, sqrt(hbar / 2Z)
    double phi_zpf;      // Wb, sqrt(hbar Z / 2)

    // Ladder-operator realizations at a chosen truncation:
    // phi_hat = phi_zpf (a + a†), q_hat = -i q_zpf (a - a†).
    Operator flux_operator(int n_levels) const;
    Operator charge_operator(int n_levels) const;
};

// Oscillator parameters from L and C. Throws std::domain_error unless both
// are positive. q_zpf * phi_zpf = hbar/2 by construction.
OscillatorParams lc_quantize(double inductance, double capacitance);

// ------------------------------ transmission line ----------------------------

struct TransmissionLineSpec {
    double ell;     // H/m
    double cap;     // F/m
    double length;  // m
    int n_max;      // number of standing modes to emit
};

struct TlineMode {
    int n;
    double k;                 // 1/m, n*pi/length
    double omega;             // rad/s, v_p * k
    std::vector<double> phi;  // sqrt(2/length) cos(k x) on the supplied grid
};

// Standing modes n = 1..n_max (the n = 0 uniform-charge mode is a free
// particle, not an oscillator, and is dropped). Mode functions sampled on
// x_grid; pass an empty grid to skip sampling.
std::vector<TlineMode> tline_modes(const TransmissionLineSpec& spec,
                                   const std::vector<double>& x_grid = {});

// ------------------------------ Josephson junction ---------------------------

// Effective junction inductance Phi0 / (2 pi Ic cos(phase)); sign follows the
// cosine. Throws std::domain_error for Ic <= 0 or |cos(phase)| < 1e-9 (the
// junction is inductively singular at +-pi/2).
double josephson_inductance(double critical_current, double phase);

// ------------------------------ Cooper-pair box -------------------------------

// Convention: H = 4 Ec (N - Ng)^2 - Ej cos(phi) with Ec = e^2 / 2 C_Sigma,
// so a Cooper pair costs 4 Ec. The charge basis runs N = -n_max..n_max.
struct CpbParams {
    double ec;     // J, charging energy
    double ej;     // J, Josephson energy
    double ng;     // dimensionless gate charge
    int n_max;     // charge cutoff, basis dimension 2 n_max + 1
};

// Charge-basis Hamiltonian: diagonal 4 Ec (N - Ng)^2, off-diagonals -Ej/2.
Operator cpb_hamiltonian(const CpbParams& p);

struct CpbBands {
    std::vector<double> ng;                    // gate-charge grid
    std::vector<std::vector<double>> levels;   // levels[i] = sorted energies at ng[i],
                                               // relative to the grid minimum of band 0
    bool cutoff_warning;                       // any band leaned on the edge charge states
};

// Lowest n_levels bands over the gate-charge grid, sorted per point (no
// adiabatic continuation, matching how band plots are drawn). Flags the
// cutoff when any requested eigenvector puts more than 1e-8 population on
// the edge states N = +-n_max. Grid points run in parallel.
CpbBands cpb_bands(const CpbParams& p, const std::vector<double>& ng_grid, int n_levels,
                   int jobs = 0);

// ------------------------------ transmon -------------------------------------

struct TransmonDerived {
    double omega_q;    // rad/s, (sqrt(8 Ec Ej) - Ec) / hbar
    double phi_zpf;    // (2 Ec / Ej)^(1/4)
    double n_zpf;      // (Ej / 32 Ec)^(1/4)
    double kerr;       // J, the -Ec/2 coefficient of b†b†bb
    bool regime_warning;  // true for 5 <= Ej/Ec < 10
};

// Duffing reduction of the CPB: H = hbar w_q b†b - (Ec/2) b†b†bb truncated to
// n_trunc levels (entries in joules). Requires Ej/Ec >= 5 (regime_error
// below); warns below 10 where the bosonic expansion starts to strain.
// Transitions: w01 = w_q, w12 = w_q - Ec/hbar.
std::pair<TransmonDerived, Operator> transmon_effective(double ec, double ej, int n_trunc);

// ------------------------------ flux qubit -----------------------------------

// The kinetic terms of the three-junction circuit live on the effective
// masses m_+ = (Phi0/2pi)^2 (C_J/2)(1 + gamma_cap) and
// m_- = (Phi0/2pi)^2 (C_J/2)(1 + 2 alpha + gamma_cap); they are recorded
// here for reference only — the two-dimensional eigenproblem is not solved,
// the phenomenological tunnel_delta stands in for it.
struct FluxQubitParams {
    double alpha;         // small-junction ratio
    double gamma_cap;     // gate-capacitance ratio (enters only the masses above)
    double k;             // external flux in units of Phi0
    double ej;            // J
    double persistent_current;  // A
    double tunnel_delta;  // rad/s, avoided-crossing strength
};

// U / Ej = 2 + alpha - 2 cos(phi+) cos(phi-) - alpha cos(2 pi k + 2 phi-).
// Non-negative everywhere; zero at k = 0, phi+- = 0.
double flux_potential(const FluxQubitParams& p, double phi_plus, double phi_minus);

// Two-level reduction, in joules:
//   H = -1/2 [ 2 Ip Phi0 (k - 1/2) sigma_x + hbar Delta sigma_z ].
// Note the bias sits on sigma_x and the tunneling on sigma_z, transposed
// from the common convention; kept exactly as modeled here.
Operator flux_tls(const FluxQubitParams& p);

// Level splitting of flux_tls: sqrt([2 Ip Phi0 (k-1/2)]^2 + (hbar Delta)^2).
double flux_tls_splitting(const FluxQubitParams& p);

// Advisory parameter checks (e.g. alpha outside the usual [0.5, 1] window).
std::vector<std::string> flux_warnings(const FluxQubitParams& p);

// ------------------------------ phase qubit ----------------------------------

struct PhaseQubitParams {
    double beta_l;      // 2 pi L Ic / Phi0
    double flux_bias;   // Phi_ext / Phi0
    double ej;          // J
    double omega01;     // rad/s
    double barrier_du;  // J, well barrier height
    double cap;         // F
    double di_circ;     // A, circulating-current bias
};

// U / Ej = 1 - cos(phi) + (phi - 2 pi flux_bias)^2 / (2 beta_l).
double phase_potential(const PhaseQubitParams& p, double phi);

struct PhaseTls {
    Operator h;   // 2x2, joules
    double chi;   // sqrt(hbar w01 / 3 dU)
};

// H = -1/2 [ hbar w01 sigma_z + sqrt(hbar / 2 w01 C) dI (sigma_x + chi sigma_z) ].
PhaseTls phase_tls(const PhaseQubitParams& p);

// True when the RF SQUID sits in the usable phase-qubit window 1 < beta_L < 4.6.
bool phase_operation_range(const PhaseQubitParams& p);

std::vector<std::string> phase_warnings(const PhaseQubitParams& p);

}  // namespace cqed
