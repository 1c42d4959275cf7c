// kernels.hpp — dense complex matrix kernels, serial reference + OpenMP
//
// Every OpenMP kernel partitions work so that each output element is
// accumulated in the same order as the serial reference, so results are
// bit-identical for any thread count. The serial versions stay exposed for
// tests and for the benchmark target.

#pragma once

#include <complex>

namespace cqed::kernels {

using cxd = std::complex<double>;

// C = A * B, all n-by-n row-major. C must not alias A or B.
void matmul_serial(const cxd* a, const cxd* b, cxd* c, int n);
void matmul_omp(const cxd* a, const cxd* b, cxd* c, int n);

// Dispatches to the OpenMP kernel above a size threshold when built with
// OpenMP, otherwise to the serial reference. Same bits either way.
void matmul(const cxd* a, const cxd* b, cxd* c, int n);

// Kronecker product: C (na*nb square) = A (na) ⊗ B (nb), left factor slow.
void kron_serial(const cxd* a, int na, const cxd* b, int nb, cxd* c);
void kron_omp(const cxd* a, int na, const cxd* b, int nb, cxd* c);
void kron(const cxd* a, int na, const cxd* b, int nb, cxd* c);

// Run fn(i) for i in [0, n) on a thread pool of `jobs` threads (0 = library
// default). fn must only write state owned by index i; iteration order is
// unspecified but the result layout is index-determined, so output does not
// depend on the schedule.
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn);

int max_threads();

}  // namespace cqed::kernels

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cqed::kernels {

template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
#if defined(_OPENMP)
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int i = 0; i < n; ++i) fn(i);
#else
    (void)jobs;
    for (int i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace cqed::kernels
