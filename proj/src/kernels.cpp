// kernels.cpp — serial and OpenMP implementations of the dense kernels

#include "cqed/kernels.hpp"

#include <algorithm>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cqed::kernels {

namespace {

// i-k-j loop order: row i of C is a fixed-order accumulation over k, which
// keeps the floating-point result independent of how rows are distributed.
inline void matmul_row(const cxd* a, const cxd* b, cxd* c, int n, int i) {
    cxd* ci = c + static_cast<std::size_t>(i) * n;
    std::fill(ci, ci + n, cxd{0.0, 0.0});
    const cxd* ai = a + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
        const cxd aik = ai[k];
        if (aik == cxd{0.0, 0.0}) continue;
        const cxd* bk = b + static_cast<std::size_t>(k) * n;
        for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
}

inline void kron_block(const cxd* a, int na, const cxd* b, int nb, cxd* c, int i) {
    const int n = na * nb;
    for (int k = 0; k < nb; ++k) {
        cxd* crow = c + static_cast<std::size_t>(i * nb + k) * n;
        for (int j = 0; j < na; ++j) {
            const cxd aij = a[static_cast<std::size_t>(i) * na + j];
            const cxd* brow = b + static_cast<std::size_t>(k) * nb;
            for (int l = 0; l < nb; ++l) crow[j * nb + l] = aij * brow[l];
        }
    }
}

constexpr int kParallelCutoff = 48;

}  // namespace

void matmul_serial(const cxd* a, const cxd* b, cxd* c, int n) {
    for (int i = 0; i < n; ++i) matmul_row(a, b, c, n, i);
}

void matmul_omp(const cxd* a, const cxd* b, cxd* c, int n) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) matmul_row(a, b, c, n, i);
#else
    matmul_serial(a, b, c, n);
#endif
}

void matmul(const cxd* a, const cxd* b, cxd* c, int n) {
#if defined(_OPENMP)
    if (n >= kParallelCutoff && omp_get_max_threads() > 1) {
        matmul_omp(a, b, c, n);
        return;
    }
#endif
    matmul_serial(a, b, c, n);
}

void kron_serial(const cxd* a, int na, const cxd* b, int nb, cxd* c) {
    for (int i = 0; i < na; ++i) kron_block(a, na, b, nb, c, i);
}

void kron_omp(const cxd* a, int na, const cxd* b, int nb, cxd* c) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (int i = 0; i < na; ++i) kron_block(a, na, b, nb, c, i);
#else
    kron_serial(a, na, b, nb, c);
#endif
}

void kron(const cxd* a, int na, const cxd* b, int nb, cxd* c) {
#if defined(_OPENMP)
    if (na * nb >= kParallelCutoff && omp_get_max_threads() > 1) {
        kron_omp(a, na, b, nb, c);
        return;
    }
#endif
    kron_serial(a, na, b, nb, c);
}

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace cqed::kernels
