// bench_kernels.cpp — serial reference vs OpenMP kernels, and a sweep at
// different worker counts. Wall times only; correctness equivalence is
// covered by the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "cqed/kernels.hpp"
#include "cqed/lambda3.hpp"
#include "cqed/operator.hpp"

using cqed::kernels::cxd;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

std::vector<cxd> random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cxd> m(static_cast<std::size_t>(n) * n);
    for (auto& z : m) z = cxd{u(rng), u(rng)};
    return m;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        fn();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

}  // namespace

int main() {
    std::mt19937 rng(12345);
    std::printf("threads available: %d\n\n", cqed::kernels::max_threads());

    std::printf("matmul, serial vs omp (best of 3, ms)\n");
    std::printf("%6s %12s %12s %8s\n", "dim", "serial", "omp", "speedup");
    for (int n : {64, 128, 256, 384}) {
        const auto a = random_matrix(n, rng);
        const auto b = random_matrix(n, rng);
        std::vector<cxd> c(static_cast<std::size_t>(n) * n);
        const double ts = time_best_of(3, [&] {
            cqed::kernels::matmul_serial(a.data(), b.data(), c.data(), n);
        });
        const double tp = time_best_of(3, [&] {
            cqed::kernels::matmul_omp(a.data(), b.data(), c.data(), n);
        });
        std::printf("%6d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\neit numeric spectrum, 200 points (best of 3, ms)\n");
    const cqed::LambdaDecays d{0.5, 0.5, 1e-3};
    cqed::ProbeControlSpec s{};
    s.control_rabi = 2.0;
    s.probe_rabi = d.gamma3_total() / 100.0;
    std::vector<double> grid(200);
    for (int i = 0; i < 200; ++i) grid[i] = -5.0 + 10.0 * i / 199.0;

    std::printf("%6s %12s\n", "jobs", "time");
    for (int jobs : {1, 2, 4, cqed::kernels::max_threads()}) {
        const double t = time_best_of(3, [&] {
            (void)cqed::eit_numeric_spectrum(s, d, grid, jobs);
        });
        std::printf("%6d %12.3f\n", jobs, t);
    }
    return 0;
}
