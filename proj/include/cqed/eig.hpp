// eig.hpp — Hermitian eigendecomposition for dense complex operators

#pragma once

#include <vector>

#include "cqed/operator.hpp"

namespace cqed {

// Eigenvalues ascending; vectors are the matching orthonormal columns.
// Each eigenvector's phase is fixed by making its largest-magnitude
// component real and positive, so repeated runs and golden files agree.
struct EigenSystem {
    std::vector<double> values;
    Operator vectors;
};

// Householder tridiagonalization followed by implicit-shift QL iteration.
// Requires ||h - h†||_max <= 1e-9 * ||h||_max, else throws hermiticity_error
// reporting the worst asymmetry. Reconstruction residual is at rounding
// level for the dimensions used here (<= a few hundred).
EigenSystem eig_hermitian(const Operator& h);

}  // namespace cqed
