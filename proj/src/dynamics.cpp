// dynamics.cpp

#include "cqed/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cqed/eig.hpp"
#include "cqed/lstsq.hpp"

namespace cqed {

// ------------------------------ pulse envelopes -------------------------------

PulseEnvelope PulseEnvelope::gaussian(double amplitude, double center, double sigma,
                                      double phase) {
    if (sigma <= 0.0) throw std::domain_error("PulseEnvelope: gaussian width must be positive");
    return {PulseKind::gaussian, amplitude, center, sigma, phase};
}

PulseEnvelope PulseEnvelope::sech(double amplitude, double center, double width, double phase) {
    if (width <= 0.0) throw std::domain_error("PulseEnvelope: sech width must be positive");
    return {PulseKind::sech, amplitude, center, width, phase};
}

PulseEnvelope PulseEnvelope::constant(double amplitude, double phase) {
    return {PulseKind::constant, amplitude, 0.0, 1.0, phase};
}

cxd pulse_eval(const PulseEnvelope& env, double t) {
    double shape = 1.0;
    switch (env.kind) {
        case PulseKind::gaussian: {
            const double u = (t - env.center) / env.width;
            shape = std::exp(-0.5 * u * u);
            break;
        }
        case PulseKind::sech: {
            const double u = (t - env.center) / env.width;
            // 2/(e^u + e^-u) without overflow in the tails
            const double a = std::exp(-std::abs(u));
            shape = 2.0 * a / (1.0 + a * a);
            break;
        }
        case PulseKind::constant:
            shape = 1.0;
            break;
    }
    return env.amplitude * shape * std::polar(1.0, env.phase);
}

// ------------------------------ model ----------------------------------------

LindbladModel::LindbladModel(Operator h) : h_static(std::move(h)) {
    if (h_static.max_asymmetry() > 1e-9 * std::max(h_static.max_abs(), 1e-300))
        throw hermiticity_error("LindbladModel: static Hamiltonian not Hermitian");
}

LindbladModel& LindbladModel::add_drive(Operator op, PulseEnvelope env) {
    if (op.dim() != dim()) throw dimension_error("add_drive: dimension mismatch");
    if (op.max_asymmetry() > 1e-9 * std::max(op.max_abs(), 1e-300))
        throw hermiticity_error("add_drive: drive operator must be Hermitian");
    drives.push_back({std::move(op), env});
    return *this;
}

LindbladModel& LindbladModel::add_channel(Operator jump, double rate) {
    if (jump.dim() != dim()) throw dimension_error("add_channel: dimension mismatch");
    if (rate < 0.0) throw std::domain_error("add_channel: rate must be >= 0");
    channels.push_back({std::move(jump), rate});
    return *this;
}

Operator LindbladModel::hamiltonian(double t) const {
    Operator h = h_static;
    for (const DriveTerm& d : drives) h += pulse_eval(d.env, t).real() * d.op;
    return h;
}

bool LindbladModel::time_independent() const {
    for (const DriveTerm& d : drives)
        if (d.env.kind != PulseKind::constant) return false;
    return true;
}

double LindbladModel::max_frequency() const {
    double w = h_static.max_abs();
    for (const DriveTerm& d : drives) w = std::max(w, std::abs(d.env.amplitude) * d.op.max_abs());
    for (const DecayChannel& c : channels) w = std::max(w, c.rate);
    return w;
}

// ------------------------------ Liouvillian ----------------------------------

Operator liouvillian(const LindbladModel& model, double t) {
    const int d = model.dim();
    const int d2 = d * d;  // superoperators outgrow the default kron budget
    const Operator id = Operator::identity(d);
    const Operator h = model.hamiltonian(t);

    Operator l = cxd{0.0, -1.0} * (kron(id, h, d2) - kron(h.transpose(), id, d2));
    for (const DecayChannel& c : model.channels) {
        if (c.rate == 0.0) continue;
        const Operator ldag_l = c.jump.adjoint() * c.jump;
        l += (0.5 * c.rate) * (2.0 * kron(c.jump.conj(), c.jump, d2) -
                               kron(id, ldag_l, d2) - kron(ldag_l.transpose(), id, d2));
    }
    return l;
}

Operator apply_rhs(const LindbladModel& model, const Operator& rho, double t) {
    const Operator h = model.hamiltonian(t);
    Operator drho = cxd{0.0, -1.0} * (h * rho - rho * h);
    for (const DecayChannel& c : model.channels) {
        if (c.rate == 0.0) continue;
        const Operator ldag_l = c.jump.adjoint() * c.jump;
        drho += c.rate * (c.jump * rho * c.jump.adjoint() -
                          0.5 * (ldag_l * rho + rho * ldag_l));
    }
    return drho;
}

// ------------------------------ time evolution --------------------------------

namespace {

void check_state(const Operator& rho, double t) {
    const double tr_err = std::abs(rho.trace() - cxd{1.0, 0.0});
    if (tr_err > 1e-6) {
        std::ostringstream os;
        os << "evolve: trace drift " << tr_err << " at t = " << t;
        throw solver_error(os.str());
    }
    if (rho.max_asymmetry() > 1e-8) {
        std::ostringstream os;
        os << "evolve: Hermiticity violation " << rho.max_asymmetry() << " at t = " << t;
        throw solver_error(os.str());
    }
    const EigenSystem es = eig_hermitian(rho);
    if (es.values.front() < -1e-6) {
        std::ostringstream os;
        os << "evolve: negative population " << es.values.front() << " at t = " << t;
        throw solver_error(os.str());
    }
}

}  // namespace

Trajectory evolve(const LindbladModel& model, const Operator& rho0,
                  const std::vector<double>& times,
                  const std::vector<std::pair<std::string, Operator>>& observables,
                  const EvolveOptions& options) {
    if (rho0.dim() != model.dim()) throw dimension_error("evolve: state dimension mismatch");
    if (times.empty()) throw std::invalid_argument("evolve: empty time grid");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("evolve: times must be strictly increasing");

    double h_max = options.max_step;
    if (h_max <= 0.0) {
        const double w = model.max_frequency();
        h_max = w > 0.0 ? 1.0 / (100.0 * w) : std::numeric_limits<double>::infinity();
    }

    Trajectory traj;
    traj.times = times;
    traj.states.reserve(times.size());
    for (const auto& [name, op] : observables) {
        if (op.dim() != model.dim()) throw dimension_error("evolve: observable dimension");
        traj.observable_names.push_back(name);
    }
    traj.observables.assign(observables.size(), {});

    auto emit = [&](const Operator& rho, double t) {
        if (options.check_invariants) check_state(rho, t);
        traj.states.push_back(rho);
        for (std::size_t k = 0; k < observables.size(); ++k)
            traj.observables[k].push_back(expect(observables[k].second, rho).real());
    };

    Operator rho = rho0;
    emit(rho, times.front());

    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        const double t0 = times[i];
        const double dt = times[i + 1] - t0;
        const int m = std::isfinite(h_max) ? std::max(1, static_cast<int>(std::ceil(dt / h_max)))
                                           : 1;
        const double h = dt / m;
        for (int s = 0; s < m; ++s) {
            const double t = t0 + s * h;
            const Operator k1 = apply_rhs(model, rho, t);
            const Operator k2 = apply_rhs(model, rho + (0.5 * h) * k1, t + 0.5 * h);
            const Operator k3 = apply_rhs(model, rho + (0.5 * h) * k2, t + 0.5 * h);
            const Operator k4 = apply_rhs(model, rho + h * k3, t + h);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        emit(rho, times[i + 1]);
    }
    return traj;
}

// ------------------------------ steady state ----------------------------------

Operator steady_state(const LindbladModel& model) {
    if (!model.time_independent())
        throw solver_error("steady_state: model must be time-independent "
                           "(constant drive envelopes only)");

    const int d = model.dim();
    const int n = d * d;
    const Operator l = liouvillian(model, 0.0);

    double lnorm_f = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lnorm_f += std::norm(l(i, j));
    lnorm_f = std::sqrt(lnorm_f);

    // Stack the trace constraint under the Liouvillian, weighted to its scale.
    const double w = std::max(1.0, l.max_abs());
    std::vector<cxd> a(static_cast<std::size_t>(n + 1) * n, cxd{0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = l(i, j);
    for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(n) * n + i * (d + 1)] = w;
    std::vector<cxd> b(n + 1, cxd{0.0, 0.0});
    b[n] = w;

    const LstsqResult sol = lstsq(std::move(a), n + 1, n, std::move(b), 1e-10);
    if (sol.rank < n)
        throw solver_error("steady_state: degenerate steady-state manifold "
                           "(Liouvillian null space has dimension > 1)");

    Operator rho = unvec(sol.x, d);
    // Hermitize and renormalize; the null vector is Hermitian up to rounding.
    Operator rho_h(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho_h(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    const double tr = rho_h.trace().real();
    if (std::abs(tr) < 1e-12) throw solver_error("steady_state: traceless null vector");
    rho_h *= cxd{1.0 / tr, 0.0};

    // Residual postcondition against the Liouvillian scale.
    const std::vector<cxd> v = vec(rho_h);
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        cxd s{0.0, 0.0};
        for (int j = 0; j < n; ++j) s += l(i, j) * v[j];
        res += std::norm(s);
    }
    res = std::sqrt(res);
    if (res > 1e-10 * std::max(lnorm_f, 1e-300)) {
        std::ostringstream os;
        os << "steady_state: residual " << res << " exceeds 1e-10 * ||L|| = " << 1e-10 * lnorm_f;
        throw solver_error(os.str());
    }
    return rho_h;
}

}  // namespace cqed
