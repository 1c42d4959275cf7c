// dynamics.hpp — open-system engine: time-dependent Hamiltonians, Lindblad
// integrator, Liouvillian construction, steady-state solver, pulse envelopes.
//
// Everything here works in a dimensionless hbar = 1 frame: Hamiltonian
// entries and decay rates share one frequency unit chosen by the caller.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cqed/operator.hpp"

namespace cqed {

// ------------------------------ pulse envelopes -------------------------------

enum class PulseKind { gaussian, sech, constant };

// Complex drive amplitude A * shape((t - center)/width) * exp(i phase).
struct PulseEnvelope {
    PulseKind kind = PulseKind::constant;
    double amplitude = 0.0;  // rad/s
    double center = 0.0;     // s
    double width = 1.0;      // s: sigma for gaussian, 1/rate for sech
    double phase = 0.0;      // rad

    static PulseEnvelope gaussian(double amplitude, double center, double sigma,
                                  double phase = 0.0);
    static PulseEnvelope sech(double amplitude, double center, double width,
                              double phase = 0.0);
    static PulseEnvelope constant(double amplitude, double phase = 0.0);
};

// gaussian: A exp(-(t-c)^2 / 2 sigma^2); sech: A sech((t-c)/width);
// constant: A. The phase enters as a multiplicative exp(i phase).
cxd pulse_eval(const PulseEnvelope& env, double t);

// ------------------------------ model ----------------------------------------

struct DriveTerm {
    Operator op;          // Hermitian coupling structure
    PulseEnvelope env;    // amplitude/phase carrier
};

struct DecayChannel {
    Operator jump;
    double rate;          // 1/s, >= 0
};

// Static + driven Hamiltonian terms plus decay channels. The Hamiltonian at
// time t is h_static + sum_k Re[pulse_eval(env_k, t)] * op_k, so drive
// operators carry the coupling structure and envelopes the amplitude/phase.
struct LindbladModel {
    Operator h_static;
    std::vector<DriveTerm> drives;
    std::vector<DecayChannel> channels;

    explicit LindbladModel(Operator h);

    LindbladModel& add_drive(Operator op, PulseEnvelope env);
    LindbladModel& add_channel(Operator jump, double rate);

    int dim() const { return h_static.dim(); }
    Operator hamiltonian(double t) const;
    bool time_independent() const;

    // Largest frequency scale: max Hamiltonian entry (at peak drive) or rate.
    double max_frequency() const;
};

// ------------------------------ Liouvillian ----------------------------------

// The d^2-by-d^2 superoperator generating d vec(rho)/dt, with column-stacking
// vectorization (vec(rho)[i + d j] = rho_ij). Unitary part -i[H, rho] plus
// the dissipator sum_i rate_i/2 (2 L rho L† - L†L rho - rho L†L).
Operator liouvillian(const LindbladModel& model, double t = 0.0);

// Full master-equation right-hand side -i[H(t), rho] + dissipator, evaluated
// without forming the superoperator (d x d products instead of d^2 x d^2).
Operator apply_rhs(const LindbladModel& model, const Operator& rho, double t);

// ------------------------------ time evolution --------------------------------

struct Trajectory {
    std::vector<double> times;
    std::vector<Operator> states;
    std::vector<std::string> observable_names;
    std::vector<std::vector<double>> observables;  // one series per name
};

struct EvolveOptions {
    // 0 selects the default step bound 1/(100 * max_frequency); any explicit
    // value is used as the upper step bound instead. Steps always subdivide
    // the requested grid intervals evenly, so output times are hit exactly.
    double max_step = 0.0;
    bool check_invariants = true;
};

// Fixed-step RK4 on vec(rho). Emits a state per requested time; each emitted
// state must stay trace-one within 1e-6, Hermitian within 1e-8 and have
// smallest eigenvalue >= -1e-6, else a solver_error names the failing time.
Trajectory evolve(const LindbladModel& model, const Operator& rho0,
                  const std::vector<double>& times,
                  const std::vector<std::pair<std::string, Operator>>& observables = {},
                  const EvolveOptions& options = {});

// Null-space solve of the time-independent Liouvillian under Tr rho = 1 via
// least squares on the stacked system. Throws solver_error if the model is
// driven by non-constant envelopes, if the steady manifold is degenerate
// (rank deficiency beyond the expected single null vector), or if the
// residual exceeds 1e-10 * ||L||_F.
Operator steady_state(const LindbladModel& model);

}  // namespace cqed
