// test_dynamics.cpp — Liouvillian construction, RK4 integrator, steady state,
// pulse envelopes

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cqed/circuits.hpp"
#include "cqed/dynamics.hpp"
#include "cqed/eig.hpp"
#include "cqed/twolevel.hpp"

#if defined(CQED_HAVE_EIGEN)
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#endif

using namespace cqed;

namespace {

Operator random_hermitian(int n, std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Operator h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = u(rng);
        for (int j = i + 1; j < n; ++j) {
            const cxd z{u(rng), u(rng)};
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

Operator random_matrix(int n, std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Operator m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cxd{u(rng), u(rng)};
    return m;
}

LindbladModel random_model(int n, int n_channels, std::mt19937& rng) {
    LindbladModel model(random_hermitian(n, rng));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int c = 0; c < n_channels; ++c)
        model.add_channel(random_matrix(n, rng, 0.7), u(rng));
    return model;
}

Operator random_density(int n, std::mt19937& rng) {
    const Operator g = random_matrix(n, rng);
    Operator rho = g * g.adjoint();
    rho *= cxd{1.0 / rho.trace().real(), 0.0};
    return rho;
}

// g-first two-level sigma_z as a physical operator |e><e| - |g><g|
Operator sz_phys() {
    Operator s(2);
    s(0, 0) = -1.0;
    s(1, 1) = 1.0;
    return s;
}

}  // namespace

TEST_CASE("pulse_eval: peaks, widths, phases") {
    const auto g = PulseEnvelope::gaussian(2.0, 1.0, 0.5);
    CHECK(pulse_eval(g, 1.0).real() == doctest::Approx(2.0));
    CHECK(pulse_eval(g, 1.5).real() == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-14));
    CHECK(pulse_eval(g, 1.5).real() == doctest::Approx(2.0 * 0.6065).epsilon(1e-3));

    const auto s = PulseEnvelope::sech(1.5, 0.2, 0.3);
    CHECK(pulse_eval(s, 0.2).real() == doctest::Approx(1.5));
    CHECK(pulse_eval(s, 0.5).real() ==
          doctest::Approx(1.5 / std::cosh(1.0)).epsilon(1e-14));

    const auto c = PulseEnvelope::constant(0.7, kPi / 2.0);
    CHECK(pulse_eval(c, 123.0).real() == doctest::Approx(0.0).scale(1.0));
    CHECK(pulse_eval(c, 123.0).imag() == doctest::Approx(0.7));

    CHECK_THROWS_AS(PulseEnvelope::gaussian(1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("liouvillian: coherence rotation spectrum for H = sz/2") {
    LindbladModel model(0.5 * sz_phys());
    const Operator l = liouvillian(model);
    // diagonal superoperator with entries {0, +-i, 0}
    std::vector<cxd> diag;
    for (int i = 0; i < 4; ++i) diag.push_back(l(i, i));
    double offmax = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) offmax = std::max(offmax, std::abs(l(i, j)));
    CHECK(offmax == 0.0);
    int zeros = 0, plus_i = 0, minus_i = 0;
    for (const cxd& z : diag) {
        if (std::abs(z) < 1e-15) ++zeros;
        if (std::abs(z - cxd{0.0, 1.0}) < 1e-15) ++plus_i;
        if (std::abs(z + cxd{0.0, 1.0}) < 1e-15) ++minus_i;
    }
    CHECK(zeros == 2);
    CHECK(plus_i == 1);
    CHECK(minus_i == 1);
}

TEST_CASE("liouvillian: decay channel eigenvalues -gamma and -gamma/2 +- iw") {
    // analytic 4x4 oracle: H = (w/2) sz, channel sigma- at rate gamma gives a
    // diagonal-in-blocks Liouvillian with population eigenvalues {0, -gamma}
    // and coherence eigenvalues -gamma/2 +- iw
    const double w = 1.3, gamma = 0.4;
    LindbladModel model(0.5 * w * sz_phys());
    model.add_channel(destroy(2), gamma);
    const Operator l = liouvillian(model);

    // population block acts on (rho_gg, rho_ee) = vec indices 0 and 3
    CHECK(std::abs(l(0, 0)) < 1e-15);
    CHECK(std::abs(l(0, 3) - cxd{gamma}) < 1e-15);
    CHECK(std::abs(l(3, 3) + cxd{gamma}) < 1e-15);
    // coherence entries: vec index 1 = rho_eg row... column-stacking puts
    // rho(1,0) at index 1: d/dt rho_eg = (-gamma/2 - i w) rho_eg
    CHECK(std::abs(l(1, 1) - cxd{-0.5 * gamma, -w}) < 1e-14);
    CHECK(std::abs(l(2, 2) - cxd{-0.5 * gamma, +w}) < 1e-14);
}

TEST_CASE("liouvillian matches the direct superoperator-free evaluation") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + rep % 4;
        const LindbladModel model = random_model(n, 1 + rep % 3, rng);
        const Operator l = liouvillian(model);
        const Operator rho = random_density(n, rng);
        const Operator direct = apply_rhs(model, rho, 0.0);
        const auto v = vec(rho);
        const auto dv = vec(direct);
        double worst = 0.0;
        for (int i = 0; i < n * n; ++i) {
            cxd s{0.0, 0.0};
            for (int j = 0; j < n * n; ++j) s += l(i, j) * v[j];
            worst = std::max(worst, std::abs(s - dv[i]));
        }
        CHECK(worst < 1e-12 * std::max(1.0, l.max_abs()));
    }
}

TEST_CASE("liouvillian: vec(I)† is a left null vector (trace preservation)") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + rep % 3;
        const LindbladModel model = random_model(n, 2, rng);
        const Operator l = liouvillian(model);
        const auto tr = vec(Operator::identity(n));
        for (int j = 0; j < n * n; ++j) {
            cxd s{0.0, 0.0};
            for (int i = 0; i < n * n; ++i) s += std::conj(tr[i]) * l(i, j);
            CHECK(std::abs(s) < 1e-12 * std::max(1.0, l.max_abs()));
        }
    }
}

#if defined(CQED_HAVE_EIGEN)
TEST_CASE("liouvillian spectrum is contractive (real parts <= 0)") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 2 + rep % 5;  // dims up to 6
        const LindbladModel model = random_model(n, 1 + rep % 3, rng);
        const Operator l = liouvillian(model);
        Eigen::MatrixXcd m(n * n, n * n);
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j) m(i, j) = l(i, j);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
        for (int i = 0; i < m.rows(); ++i)
            CHECK(es.eigenvalues()[i].real() <= 1e-10 * std::max(1.0, l.max_abs()));
    }
}
#endif

TEST_CASE("evolve: H = 0, no channels keeps the state constant") {
    LindbladModel model{Operator(3)};
    std::mt19937 rng(29);
    const Operator rho0 = random_density(3, rng);
    const Trajectory traj = evolve(model, rho0, {0.0, 1.0, 5.0, 10.0});
    for (const Operator& st : traj.states)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(std::abs(st(i, j) - rho0(i, j)) < 1e-12);
}

TEST_CASE("evolve: resonant lossless Rabi oscillation matches cos^2") {
    TlsDriveParams p{};
    p.rabi_g = 1.0;
    const LindbladModel model = make_tls_model(p);
    const double omega = rabi_frequency(p);
    std::vector<double> times;
    for (int i = 0; i <= 200; ++i) times.push_back(10.0 * 2.0 * kPi / omega * i / 200.0);
    const Trajectory traj = evolve(model, projector(2, 0), times, {{"pgg", projector(2, 0)}});
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        worst = std::max(worst,
                         std::abs(traj.observables[0][i] - rabi_population_gg(p, times[i])));
    CHECK(worst < 1e-6);
}

TEST_CASE("evolve: pure decay gives rho_ee = exp(-2 gamma t)") {
    const double gamma = 0.35;  // coherence rate; population decays at 2 gamma
    TlsDriveParams p{};
    p.gamma = gamma;
    const LindbladModel model = make_tls_model(p);
    std::vector<double> times;
    for (int i = 0; i <= 60; ++i) times.push_back(3.0 * i / 60.0);
    const Trajectory traj = evolve(model, projector(2, 1), times, {{"pee", projector(2, 1)}});
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(std::abs(traj.observables[0][i] - std::exp(-2.0 * gamma * times[i])) < 1e-8);
}

TEST_CASE("evolve: CPTP sanity on random models over many steps") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 4; ++rep) {
        const int n = 2 + rep;
        const LindbladModel model = random_model(n, 1 + rep % 3, rng);
        const Operator rho0 = random_density(n, rng);
        // 1e4 fixed steps, invariant checks at every emitted point
        std::vector<double> times;
        const double h = 1.0 / (100.0 * model.max_frequency());
        for (int i = 0; i <= 100; ++i) times.push_back(100.0 * h * i);
        EvolveOptions opt;
        opt.max_step = h;
        const Trajectory traj = evolve(model, rho0, times, {}, opt);
        const Operator& last = traj.states.back();
        CHECK(std::abs(last.trace() - cxd{1.0}) < 1e-8);
        CHECK(last.max_asymmetry() < 1e-9);
        const EigenSystem es = eig_hermitian(last);
        CHECK(es.values.front() >= -1e-6);
    }
}

TEST_CASE("evolve: fourth-order convergence on the driven two-level benchmark") {
    TlsDriveParams p{};
    p.gamma = 0.1;
    p.rabi_g = 1.0;
    const LindbladModel model = make_tls_model(p);
    const std::vector<double> times{0.0, 5.0};

    auto run = [&](double h) {
        EvolveOptions opt;
        opt.max_step = h;
        return evolve(model, projector(2, 0), times, {}, opt).states.back();
    };
    const Operator ref = run(0.0125 / 4.0);
    auto err = [&](const Operator& st) {
        double w = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) w = std::max(w, std::abs(st(i, j) - ref(i, j)));
        return w;
    };
    const double e1 = err(run(0.1));
    const double e2 = err(run(0.05));
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("evolve rejects a bad grid and reports invariant violations") {
    LindbladModel model{Operator(2)};
    CHECK_THROWS_AS(evolve(model, Operator::identity(2) * 0.5, {0.0, 0.0}),
                    std::invalid_argument);
    // a non-density initial state trips the invariant check at t = 0
    Operator bogus(2);
    bogus(0, 0) = 3.0;
    CHECK_THROWS_AS(evolve(model, bogus, {0.0, 1.0}), solver_error);
}

TEST_CASE("steady_state: decay-only model lands on the ground state") {
    TlsDriveParams p{};
    p.gamma = 0.5;
    const Operator rho = steady_state(make_tls_model(p));
    CHECK(std::abs(rho(0, 0) - cxd{1.0}) < 1e-12);
    CHECK(std::abs(rho(1, 1)) < 1e-12);
    CHECK(std::abs(rho(0, 1)) < 1e-12);
}

TEST_CASE("steady_state: driven two-level matches the analytic solution") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.1, 1.5);
    for (int rep = 0; rep < 30; ++rep) {
        TlsDriveParams p{};
        p.gamma = u(rng);
        p.delta = u(rng) - 0.8;
        p.rabi_g = u(rng);
        const Operator rho = steady_state(make_tls_model(p));
        const TlsSteady ref = tls_steady(p);
        CHECK(std::abs(rho(1, 1).real() - ref.rho_ee) < 1e-10);
        CHECK(std::abs(rho(1, 0) - ref.rho_eg) < 1e-10);
    }
}

TEST_CASE("steady_state agrees with long-time integration") {
    TlsDriveParams p{};
    p.gamma = 0.4;
    p.delta = 0.3;
    p.rabi_g = 0.8;
    const LindbladModel model = make_tls_model(p);
    const Operator ss = steady_state(model);
    const Trajectory traj = evolve(model, projector(2, 0), {0.0, 50.0 / p.gamma});
    const Operator& late = traj.states.back();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(late(i, j) - ss(i, j)) < 1e-6);
}

TEST_CASE("steady_state is a fixed point of evolve") {
    TlsDriveParams p{};
    p.gamma = 0.3;
    p.rabi_g = 0.6;
    const LindbladModel model = make_tls_model(p);
    const Operator ss = steady_state(model);
    const Trajectory traj = evolve(model, ss, {0.0, 10.0 / p.gamma});
    const Operator& moved = traj.states.back();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(moved(i, j) - ss(i, j)) < 1e-8);
}

TEST_CASE("steady_state detects a degenerate steady manifold") {
    // H = 0 and no channels: every state is stationary
    LindbladModel model{Operator(2)};
    CHECK_THROWS_AS(steady_state(model), solver_error);

    // time-dependent drives are refused
    LindbladModel driven{Operator(2)};
    driven.add_drive(pauli_x(), PulseEnvelope::gaussian(1.0, 0.0, 1.0));
    CHECK_THROWS_AS(steady_state(driven), solver_error);
}

TEST_CASE("drive validation: non-Hermitian structure operators are rejected") {
    LindbladModel model{Operator(2)};
    CHECK_THROWS_AS(model.add_drive(destroy(2), PulseEnvelope::constant(1.0)),
                    hermiticity_error);
    CHECK_THROWS_AS(model.add_channel(destroy(2), -0.1), std::domain_error);
}
