// twolevel.hpp — closed-form driven two-level results: Rabi oscillation,
// steady state, linear susceptibility, plus the matching open-system model
// for numeric cross-checks.
//
// Basis ordering is (|g>, |e>). gamma is the coherence decay rate, so the
// excited population relaxes at 2*gamma (the T1/T2 split of a radiatively
// damped two-level system). The drive Hamiltonian in the rotating frame is
// H/hbar = -Delta |e><e| - G (|e><g| + |g><e|).

#pragma once

#include <complex>
#include <vector>

#include "cqed/dynamics.hpp"
#include "cqed/operator.hpp"

namespace cqed {

struct TlsDriveParams {
    double gamma = 0.0;    // 1/s, coherence decay
    double delta = 0.0;    // rad/s, drive detuning omega - omega_eg
    double rabi_g = 0.0;   // rad/s, Rabi frequency G >= 0
    double density = 0.0;  // 1/m^3, emitter number density
    double dipole = 0.0;   // C m, |d_eg|
};

// Generalized Rabi frequency sqrt(Delta^2 + 4 G^2).
double rabi_frequency(const TlsDriveParams& p);

// Lossless ground-state population cos^2(Wt/2) + (Delta/W)^2 sin^2(Wt/2);
// returns 1 in the W -> 0 limit.
double rabi_population_gg(const TlsDriveParams& p, double t);

struct TlsSteady {
    double rho_ee;
    std::complex<double> rho_eg;
};

// rho_ee = G^2/(g^2 + D^2 + 2G^2), rho_eg = iG(g + iD)/(g^2 + D^2 + 2G^2).
// Requires gamma > 0 (no steady state without damping).
TlsSteady tls_steady(const TlsDriveParams& p);

// chi(Delta) = (N |d|^2 / hbar eps0) (-Delta + i gamma)/(g^2 + D^2 + 2G^2),
// evaluated per grid point. Re is odd in Delta, Im even and non-negative.
std::vector<std::complex<double>> tls_susceptibility(const TlsDriveParams& p,
                                                     const std::vector<double>& delta_grid,
                                                     int jobs = 0);

// Prefactor N |d|^2 / (hbar eps0) in rad/s.
double susceptibility_prefactor(const TlsDriveParams& p);

// Absorption-line widths of Im chi over Delta. The Lorentzian half-width is
// sqrt(gamma^2 + 2 G^2); both half and full widths are reported since either
// may be quoted as "the" linewidth.
struct LineWidths {
    double half;  // sqrt(g^2 + 2G^2)
    double full;  // 2 sqrt(g^2 + 2G^2)
};
LineWidths tls_linewidths(const TlsDriveParams& p);

// |d_eg| from a spontaneous decay rate via Gamma = w^3 d^2 / (3 pi eps0 hbar c^3)
// with Gamma = 2*gamma; one common convention, provided so absolute scales can
// be set from (gamma, lambda) alone.
double dipole_from_decay(double gamma, double omega);

// The equivalent open-system model: H as above, one decay channel
// (sigma- = |g><e|, rate 2*gamma). Used by the numeric cross-check paths.
LindbladModel make_tls_model(const TlsDriveParams& p);

}  // namespace cqed
