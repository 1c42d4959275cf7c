// test_jcm.cpp — JC Hamiltonian, dressed doublets, dispersive energies,
// doubly-dressed polariton basis

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cqed/circuits.hpp"
#include "cqed/eig.hpp"
#include "cqed/jcm.hpp"

using namespace cqed;

TEST_CASE("jc_hamiltonian: uncoupled spectrum is w_r n +- w_q/2") {
    JcmParams p{10.0, 7.0, 0.0, 5};
    const EigenSystem es = eig_hermitian(jc_hamiltonian(p));
    std::vector<double> expected;
    for (int n = 0; n < 5; ++n) {
        expected.push_back(10.0 * n - 3.5);
        expected.push_back(10.0 * n + 3.5);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(es.values[i] == doctest::Approx(expected[i]).epsilon(1e-13));
}

TEST_CASE("jc_hamiltonian: resonant vacuum doublet splits by 2g") {
    JcmParams p{5.0, 5.0, 0.13, 6};
    const EigenSystem es = eig_hermitian(jc_hamiltonian(p));
    // lowest level is |g,0> at -w_q/2; the next two are the n = 0 doublet
    CHECK(es.values[1] - es.values[0] == doctest::Approx(5.0 - 0.13).epsilon(1e-12));
    CHECK(es.values[2] - es.values[1] == doctest::Approx(2.0 * 0.13).epsilon(1e-10));
}

TEST_CASE("jc_hamiltonian conserves the total excitation number") {
    JcmParams p{9.0, 8.0, 0.4, 7};
    const Operator h = jc_hamiltonian(p);
    const Operator n_exc = jc_excitation_number(p);
    CHECK(commutator(h, n_exc).max_abs() < 1e-12);
}

TEST_CASE("jc truncation: raising n_cav leaves existing manifolds untouched") {
    JcmParams p20{8.0, 7.5, 0.2, 20};
    JcmParams p40 = p20;
    p40.n_cav = 40;
    const EigenSystem a = eig_hermitian(jc_hamiltonian(p20));
    const EigenSystem b = eig_hermitian(jc_hamiltonian(p40));
    for (int i = 0; i < 8; ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) <=
              1e-8 * std::max(1.0, std::abs(a.values[i])));
}

TEST_CASE("jc_doublet: resonance, weak-coupling limit, matrix oracle") {
    // resonance: theta = pi/2, splitting 2 g sqrt(n+1)
    for (int n : {0, 1, 4}) {
        const JcDoublet d = jc_doublet(n, 0.0, 0.3);
        CHECK(d.theta == doctest::Approx(0.5 * kPi));
        CHECK(d.e_plus - d.e_minus == doctest::Approx(2.0 * 0.3 * std::sqrt(n + 1.0)));
    }

    // g -> 0 with Delta > 0: bare states, theta -> 0
    const JcDoublet bare = jc_doublet(2, 1.0, 1e-9);
    CHECK(bare.theta == doctest::Approx(0.0).scale(1.0));

    // matrix oracle at (n, Delta, g) = (2, 3g, g)
    const double g = 0.7;
    const JcDoublet d = jc_doublet(2, 3.0 * g, g, 5.0);
    const EigenSystem es = eig_hermitian(jc_block(2, 3.0 * g, g, 5.0));
    CHECK(std::abs(d.e_minus - es.values[0]) < 1e-12 * std::abs(es.values[0]));
    CHECK(std::abs(d.e_plus - es.values[1]) < 1e-12 * std::abs(es.values[1]));
}

TEST_CASE("jc_doublet eigenstates diagonalize the block for random draws") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = rep % 6;
        const double delta = u(rng);
        const double g = std::abs(u(rng)) + 1e-6;
        const JcDoublet d = jc_doublet(n, delta, g);
        const Operator h = jc_block(n, delta, g);
        // |n,+> = (cos th/2, sin th/2), |n,-> = (-sin th/2, cos th/2)
        const double c = std::cos(0.5 * d.theta), s = std::sin(0.5 * d.theta);
        const cxd plus[2]{c, s};
        const cxd minus[2]{-s, c};
        const double scale = std::max(1.0, h.max_abs());
        for (int r = 0; r < 2; ++r) {
            const cxd hp = h(r, 0) * plus[0] + h(r, 1) * plus[1];
            const cxd hm = h(r, 0) * minus[0] + h(r, 1) * minus[1];
            CHECK(std::abs(hp - d.e_plus * plus[r]) < 1e-12 * scale);
            CHECK(std::abs(hm - d.e_minus * minus[r]) < 1e-12 * scale);
        }
        // orthonormal by construction
        CHECK(std::abs(std::conj(plus[0]) * minus[0] + std::conj(plus[1]) * minus[1]) < 1e-15);
    }
}

TEST_CASE("dispersive shift: chi arithmetic and regime guard") {
    // g/2pi = 100 MHz, |detuning|/2pi = 2 GHz -> chi/2pi = 5 MHz
    JcmParams p{2.0 * kPi * 10e9, 2.0 * kPi * 8e9, 2.0 * kPi * 100e6, 5};
    CHECK(dispersive_shift(p) == doctest::Approx(2.0 * kPi * 5e6).epsilon(1e-12));
    CHECK(dispersive_ratio(p) == doctest::Approx(0.05).epsilon(1e-12));

    JcmParams comfortable = p;
    comfortable.g = 2.0 * kPi * 80e6;  // ratio 0.04
    CHECK_FALSE(dispersive_ratio_warning(comfortable));

    JcmParams warn = p;
    warn.g = 2.0 * kPi * 150e6;
    CHECK(dispersive_ratio_warning(warn));

    JcmParams res = p;
    res.omega_q = res.omega_r;
    CHECK_THROWS_AS(dispersive_shift(res), regime_error);
    JcmParams far = p;
    far.g = 2.0 * kPi * 400e6;
    CHECK_THROWS_AS(dispersive_energies(far, 0), regime_error);
}

TEST_CASE("dispersive energies: cavity pull and agreement with exact doublets") {
    JcmParams p{10.0, 9.0, 0.05, 5};  // g/detuning = 0.05, qubit below cavity
    const double chi = dispersive_shift(p);
    CHECK(chi == doctest::Approx(0.0025).epsilon(1e-14));

    // cavity pull: w_{g,n+1} - w_{g,n} = w~_r + chi
    for (int n : {0, 1, 2}) {
        const DispersiveEnergies a = dispersive_energies(p, n);
        const DispersiveEnergies b = dispersive_energies(p, n + 1);
        CHECK(b.omega_g_n - a.omega_g_n == doctest::Approx(p.omega_r + chi).epsilon(1e-13));
    }

    // transition frequencies against the exact doublet ladder: the expansion
    // remainder is the n^2 g^4/D^3 term of sqrt(D^2 + 4 g^2 n), so photon
    // addition errs by (2n+1)(g/D)^3 g and the qubit transition at fixed n
    // by (2n^2 + 2n + 1)(g/D)^3 g. The flat 5x bound covers the n <= 1
    // levels the polariton construction uses.
    const double detuning = p.omega_r - p.omega_q;  // D > 0
    const double tol3 = std::pow(p.g / detuning, 3) * p.g;
    const double delta_jc = p.omega_q - p.omega_r;
    auto exact_g = [&](int n) {  // |g,n> = |n-1,+> for w_q < w_r
        if (n == 0) return -0.5 * p.omega_q;
        return jc_doublet(n - 1, delta_jc, p.g, p.omega_r).e_plus;
    };
    auto exact_e = [&](int n) {  // |e,n> = |n,->
        return jc_doublet(n, delta_jc, p.g, p.omega_r).e_minus;
    };
    for (int n : {0, 1}) {
        const DispersiveEnergies a = dispersive_energies(p, n);
        const DispersiveEnergies b = dispersive_energies(p, n + 1);
        CHECK(std::abs((b.omega_g_n - a.omega_g_n) - (exact_g(n + 1) - exact_g(n))) < 5.0 * tol3);
        CHECK(std::abs((b.omega_e_n - a.omega_e_n) - (exact_e(n + 1) - exact_e(n))) < 5.0 * tol3);
    }
    {
        const DispersiveEnergies a = dispersive_energies(p, 0);
        CHECK(std::abs((a.omega_e_n - a.omega_g_n) - (exact_e(0) - exact_g(0))) < 5.0 * tol3);
    }
    for (int n : {2, 3}) {  // growth law, with a 2x allowance for higher orders
        const DispersiveEnergies a = dispersive_energies(p, n);
        const DispersiveEnergies b = dispersive_energies(p, n + 1);
        CHECK(std::abs((b.omega_g_n - a.omega_g_n) - (exact_g(n + 1) - exact_g(n))) <
              2.0 * (2 * n + 1) * tol3);
        CHECK(std::abs((a.omega_e_n - a.omega_g_n) - (exact_e(n) - exact_g(n))) <
              2.0 * (2 * n * n + 2 * n + 1) * tol3);
    }
}

TEST_CASE("driven_rotating_hamiltonian: frame shift and qubit-term removal") {
    JcmParams p{10.0, 9.0, 0.05, 6};
    const DriveSpec off{2.0, 0.0};
    // frame identity: H(w_d, 0) = H_jc - w_d N_exc + (w_d/2) I, i.e. shifted
    // by -w_d per excitation up to the sigma_z zero-point constant
    const Operator lhs = driven_rotating_hamiltonian(p, off);
    const Operator rhs = jc_hamiltonian(p) - off.omega_d * jc_excitation_number(p) +
                         (0.5 * off.omega_d) * Operator::identity(2 * p.n_cav);
    CHECK((lhs - rhs).max_abs() < 1e-13);

    // w_d = w_q kills the qubit diagonal
    const DriveSpec res{p.omega_q, 0.3};
    const Operator h = driven_rotating_hamiltonian(p, res);
    CHECK(std::abs(h(0, 0)) < 1e-15);                    // |g,0| entry: -w~_q/2 = 0
    CHECK(h.max_asymmetry() < 1e-15);                    // Hermitian by construction
}

TEST_CASE("polariton basis: degeneracy-point splittings equal 2 Omega_d") {
    JcmParams p{10.0, 9.0, 0.05, 5};
    const double chi = dispersive_shift(p);
    const double wd = 0.004;

    const PolaritonBasis at_low = polariton_basis(p, {p.omega_q - chi, wd});
    CHECK(at_low.omega_21 == doctest::Approx(2.0 * wd).epsilon(1e-14));

    const PolaritonBasis at_high = polariton_basis(p, {p.omega_q - 3.0 * chi, wd});
    CHECK(at_high.omega_43 == doctest::Approx(2.0 * wd).epsilon(1e-14));

    // midpoint with Omega_d = chi/2: both splittings chi*sqrt(2)
    const PolaritonBasis mid = polariton_basis(p, {p.omega_q - 2.0 * chi, 0.5 * chi});
    CHECK(mid.omega_21 == doctest::Approx(chi * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(mid.omega_43 == doctest::Approx(chi * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(mid.nested);

    // window edges and outside
    CHECK_FALSE(polariton_basis(p, {p.omega_q - 0.5 * chi, wd}).nested);
    CHECK_FALSE(polariton_basis(p, {p.omega_q - 4.0 * chi, wd}).nested);
}

TEST_CASE("polariton states: orthonormal, and bare in the weak-drive limit") {
    JcmParams p{10.0, 9.0, 0.05, 5};
    const double chi = dispersive_shift(p);

    const PolaritonBasis b = polariton_basis(p, {p.omega_q - 2.0 * chi, 0.7 * chi});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cxd ov{0.0, 0.0};
            for (int r = 0; r < 4; ++r) ov += std::conj(b.states[i][r]) * b.states[j][r];
            CHECK(std::abs(ov - (i == j ? cxd{1.0} : cxd{0.0})) < 1e-12);
        }

    // Omega_d -> 0 inside the window: |1> -> |g,0>, |2> -> |e,0>,
    // |3> -> |e,1>, |4> -> |g,1>  (subspace order g0, e0, g1, e1)
    const PolaritonBasis w = polariton_basis(p, {p.omega_q - 2.0 * chi, 1e-9 * chi});
    CHECK(std::abs(w.states[0][0]) >= 1.0 - 1e-10);
    CHECK(std::abs(w.states[1][1]) >= 1.0 - 1e-10);
    CHECK(std::abs(w.states[2][3]) >= 1.0 - 1e-10);
    CHECK(std::abs(w.states[3][2]) >= 1.0 - 1e-10);
}

TEST_CASE("polariton numeric cross-check matches the dispersive construction") {
    JcmParams p{10.0, 9.0, 0.05, 5};  // g/detuning = 0.05
    const double chi = dispersive_shift(p);
    const double tol = 5.0 * std::pow(0.05, 3) * p.g;

    // window midpoint, moderate drive: the flat 5 (g/D)^3 g bound holds
    // (omega_43 carries the intrinsic 3 (g/D)^3 g upper-gap error)
    for (double wd : {0.3 * chi, 0.5 * chi}) {
        const DriveSpec d{p.omega_q - 2.0 * chi, wd};
        const PolaritonBasis b = polariton_basis(p, d);
        const PolaritonNumeric num = polariton_numeric(p, d);
        CHECK(std::abs(num.omega_21 - b.omega_21) < tol);
        CHECK(std::abs(num.omega_43 - b.omega_43) < tol);
    }
    // across the window and up to Omega_d = chi the residual stays below 2x
    for (double frac : {1.2, 2.0, 2.8}) {
        for (double wd : {0.3 * chi, 0.5 * chi, 1.0 * chi}) {
            const DriveSpec d{p.omega_q - frac * chi, wd};
            const PolaritonBasis b = polariton_basis(p, d);
            const PolaritonNumeric num = polariton_numeric(p, d);
            CHECK(std::abs(num.omega_21 - b.omega_21) < 2.0 * tol);
            CHECK(std::abs(num.omega_43 - b.omega_43) < 2.0 * tol);
        }
    }
}
