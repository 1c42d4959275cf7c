// lambda3.hpp — the engineered Lambda system: probe susceptibility (analytic
// and numeric), pole/regime classification, and the STIRAP / saSTIRAP
// protocols with the counterdiabatic drive.
//
// Level scheme: |1>, |2> are the long-lived lower states, |3> the decaying
// upper state. The probe couples 1<->3, the control (or Stokes) 2<->3, the
// counterdiabatic drive 1<->2. All rates and Rabi frequencies share one
// hbar = 1 frequency unit.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cqed/dynamics.hpp"
#include "cqed/operator.hpp"

namespace cqed {

// ------------------------------ decay structure -------------------------------

struct LambdaDecays {
    double gamma31 = 0.0;  // |3> -> |1>
    double gamma32 = 0.0;  // |3> -> |2>
    double gamma21 = 0.0;  // |2> -> |1>

    double gamma3_total() const { return gamma31 + gamma32; }  // Gamma_31
};

// ------------------------------ EIT / ATS -------------------------------------

struct ProbeControlSpec {
    double probe_rabi = 0.0;    // Omega_p
    double control_rabi = 0.0;  // Omega_c
    double delta1 = 0.0;        // probe detuning
    double delta2 = 0.0;        // control detuning

    double two_photon() const { return delta1 - delta2; }  // delta
};

// Weak-probe linear susceptibility (dimensionless, proportional to rho_31):
//   chi = (d - i g21/2) / [ (d - i G31/2)(d + D2 - i g21/2) - Wc^2/4 ],
// with d the two-photon detuning. The denominator has no real-axis zeros for
// positive decay rates.
std::complex<double> eit_chi1(const ProbeControlSpec& s, const LambdaDecays& d);

// Same, on a two-photon-detuning grid at fixed delta2.
std::vector<std::complex<double>> eit_chi1_grid(const ProbeControlSpec& s,
                                                const LambdaDecays& d,
                                                const std::vector<double>& delta_grid,
                                                int jobs = 0);

enum class EitRegime { eit, boundary, ats };

struct EitPoles {
    std::complex<double> delta_plus;
    std::complex<double> delta_minus;
    EitRegime regime;
};

// Poles of the chi denominator at delta2 = 0:
//   delta_+- = i (g21 + G31)/4 +- (1/2) sqrt(Wc^2 - (G31 - g21)^2 / 4).
// ATS when Wc > (G31 - g21)/2, EIT below, boundary at equality
// (1e-12 relative tolerance).
EitPoles eit_poles(double control_rabi, const LambdaDecays& d);

const char* to_string(EitRegime r);

// Weak-probe numeric spectrum: steady-state rho_31 of the three-level
// Lindblad model per grid point (independent solves, parallel over points).
// Enforces the weak-probe regime Omega_p <= Gamma_31 / 50 (regime_error).
// The analytic chi corresponds to -(2/Omega_p) * conj(rho_31).
std::vector<std::complex<double>> eit_numeric_spectrum(const ProbeControlSpec& s,
                                                       const LambdaDecays& d,
                                                       const std::vector<double>& delta_grid,
                                                       int jobs = 0);

// The rotating-frame Lambda Hamiltonian behind the numeric path, basis
// (|1>, |2>, |3>): H = -D1 |3><3| - d |2><2|
//                      - (Wp/2)(|3><1| + h.c.) - (Wc/2)(|3><2| + h.c.).
Operator lambda_hamiltonian(const ProbeControlSpec& s);

// The matching open-system model with jump operators sqrt(g31)|1><3|,
// sqrt(g32)|2><3|, sqrt(g21)|1><2|.
LindbladModel make_lambda_model(const ProbeControlSpec& s, const LambdaDecays& d);

// ------------------------------ STIRAP ----------------------------------------

// Pump centered at t = 0, Stokes at t = t_s; the counterintuitive ordering
// (Stokes first) therefore means t_s < 0, which also makes the
// counterdiabatic amplitude positive.
struct StirapConfig {
    double pump_peak = 0.0;    // Omega_p
    double stokes_peak = 0.0;  // Omega_s
    double sigma = 1.0;        // shared pulse width
    double t_stokes = 0.0;     // Stokes center minus pump center (t_s)
    double t_start = 0.0;
    double t_end = 0.0;
    bool cd_enabled = false;

    double pump_at(double t) const;
    double stokes_at(double t) const;
};

// Throws std::invalid_argument unless sigma > 0 and [t_start, t_end] covers
// [-4 sigma + min(0, t_s), 4 sigma + max(0, t_s)].
void validate(const StirapConfig& cfg);

// The 3x3 protocol Hamiltonian in the (|1>, |3>, |2>) ordering:
//   rows/cols (0,1) and (1,2) carry Wp(t)/2 and Ws(t)/2; with the CD drive,
//   entry (0,2) = i Wa(t)/2 and (2,0) = -i Wa(t)/2 couple |1> <-> |2>.
Operator stirap_hamiltonian(double t, const StirapConfig& cfg);

// Counterdiabatic amplitude for equal peak Rabi frequencies:
//   Wa(t) = -(t_s / sigma^2) sech[-(t_s/sigma^2)(t - t_s/2)] = 2 dtheta/dt.
// Throws std::invalid_argument for unequal peaks — use mixing_angle's
// theta_dot (the general 2*theta_dot route) in that case.
double cd_amplitude(double t, const StirapConfig& cfg);

struct MixingAngle {
    double theta;         // atan2(Wp, Ws) in [0, pi/2] for nonnegative envelopes
    double theta_dot;     // analytic derivative of the Gaussian ratio
    double omega0;        // sqrt(Wp^2 + Ws^2)
    double adiabaticity;  // |theta_dot| / omega0
};

// Throws std::domain_error when both envelopes have vanished (< 1e-300).
MixingAngle mixing_angle(double t, const StirapConfig& cfg);

// Instantaneous dark state (cos th, 0, -sin th) in the (|1>, |3>, |2>) basis.
std::vector<cxd> dark_state(double t, const StirapConfig& cfg);

struct ProtocolResult {
    Trajectory trajectory;  // observables p1, p2, p3
    double p1_final;
    double p2_final;        // transfer fidelity
    double p3_final;
};

// Integrates the protocol from |1><1| over n_times points spanning
// [t_start, t_end], closed-system when decays is null.
ProtocolResult run_protocol(const StirapConfig& cfg, const LambdaDecays* decays = nullptr,
                            int n_times = 601);

}  // namespace cqed
