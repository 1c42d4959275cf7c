// test_kernels.cpp — serial reference vs OpenMP kernels give identical bits

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cqed/kernels.hpp"

using cqed::kernels::cxd;

namespace {

std::vector<cxd> random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cxd> m(static_cast<std::size_t>(n) * n);
    for (auto& z : m) z = cxd{u(rng), u(rng)};
    return m;
}

}  // namespace

TEST_CASE("matmul: omp kernel is bit-identical to the serial reference") {
    std::mt19937 rng(42);
    for (int n : {1, 2, 7, 33, 64, 129}) {
        const auto a = random_matrix(n, rng);
        const auto b = random_matrix(n, rng);
        std::vector<cxd> cs(a.size()), cp(a.size());
        cqed::kernels::matmul_serial(a.data(), b.data(), cs.data(), n);
        cqed::kernels::matmul_omp(a.data(), b.data(), cp.data(), n);
        CHECK(cs == cp);
        std::vector<cxd> cd(a.size());
        cqed::kernels::matmul(a.data(), b.data(), cd.data(), n);
        CHECK(cs == cd);
    }
}

TEST_CASE("matmul matches a naive triple loop") {
    std::mt19937 rng(43);
    const int n = 17;
    const auto a = random_matrix(n, rng);
    const auto b = random_matrix(n, rng);
    std::vector<cxd> c(a.size());
    cqed::kernels::matmul(a.data(), b.data(), c.data(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cxd s{0.0, 0.0};
            for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
            CHECK(std::abs(c[i * n + j] - s) < 1e-12);
        }
}

TEST_CASE("kron: omp kernel is bit-identical to the serial reference") {
    std::mt19937 rng(44);
    for (auto [na, nb] : {std::pair{2, 3}, {5, 7}, {12, 11}}) {
        const auto a = random_matrix(na, rng);
        const auto b = random_matrix(nb, rng);
        std::vector<cxd> cs(static_cast<std::size_t>(na) * na * nb * nb);
        std::vector<cxd> cp(cs.size());
        cqed::kernels::kron_serial(a.data(), na, b.data(), nb, cs.data());
        cqed::kernels::kron_omp(a.data(), na, b.data(), nb, cp.data());
        CHECK(cs == cp);
    }
}

TEST_CASE("parallel_for fills every slot exactly once for any job count") {
    for (int jobs : {0, 1, 2, 5}) {
        std::vector<int> hits(1000, 0);
        cqed::kernels::parallel_for(1000, jobs, [&](int i) { hits[i] += i + 1; });
        for (int i = 0; i < 1000; ++i) CHECK(hits[i] == i + 1);
    }
}
