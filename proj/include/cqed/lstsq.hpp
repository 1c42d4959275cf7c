// lstsq.hpp — complex least squares via column-pivoted Householder QR

#pragma once

#include <complex>
#include <vector>

namespace cqed {

struct LstsqResult {
    std::vector<std::complex<double>> x;  // minimizer of ||A x - b||_2
    int rank;                             // numerical rank at rank_tol
    std::vector<double> rdiag;            // |R_kk| in pivot order, for diagnostics
};

// A is m-by-n row-major, m >= n. Rank is the count of pivots with
// |R_kk| > rank_tol * |R_00|. When rank < n the trailing permuted variables
// are set to zero (a basic solution); callers that require full rank should
// check `rank` before trusting x.
LstsqResult lstsq(std::vector<std::complex<double>> a, int m, int n,
                  std::vector<std::complex<double>> b, double rank_tol = 1e-12);

}  // namespace cqed
