// operator.hpp — dense complex operators: construction, tensor products,
// expectation values. The one matrix type everything downstream builds on.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cqed/errors.hpp"

namespace cqed {

using cxd = std::complex<double>;

// Square dense complex matrix with dimension metadata. Entries are
// dimensionless unless the caller attaches units. Immutable by convention
// once handed out of a builder; all free functions below are pure.
class Operator {
public:
    explicit Operator(int dim);

    // Row-major entries; throws dimension_error unless data.size() == dim*dim
    // and every entry is finite.
    Operator(int dim, std::vector<cxd> data);

    static Operator identity(int dim);
    static Operator zero(int dim) { return Operator(dim); }

    int dim() const { return dim_; }

    cxd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cxd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    const cxd* data() const { return a_.data(); }
    cxd* data() { return a_.data(); }

    Operator adjoint() const;
    Operator transpose() const;
    Operator conj() const;

    cxd trace() const;
    double max_abs() const;          // max |a_ij|
    double max_asymmetry() const;    // max |a_ij - conj(a_ji)|
    bool is_finite() const;

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(cxd s);

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(Operator a, cxd s) { return a *= s; }
    friend Operator operator*(cxd s, Operator a) { return a *= s; }
    friend Operator operator*(Operator a, double s) { return a *= cxd{s, 0.0}; }
    friend Operator operator*(double s, Operator a) { return a *= cxd{s, 0.0}; }

    // Matrix product (dispatches to the OpenMP kernel for large dims).
    friend Operator operator*(const Operator& a, const Operator& b);

private:
    int dim_;
    std::vector<cxd> a_;
};

// ---------------------------- constructors ----------------------------------

// Truncated bosonic annihilation operator: entries (k, k+1) = sqrt(k+1).
// The column leaving the truncated space is zeroed; the resulting commutator
// defect at the top level is a documented property of the truncation.
Operator destroy(int n_levels);

// destroy(n).adjoint(), provided for readability.
Operator create(int n_levels);

// diag(0, 1, ..., n-1).
Operator number_op(int n_levels);

// |i><j| in an n-dimensional space.
Operator ket_bra(int n, int i, int j);

// |i><i|.
Operator projector(int n, int i);

// Pauli matrices in the conventional 2x2 form (sigma_z = diag(1, -1)).
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

// ---------------------------- operations ------------------------------------

// Kronecker product, left factor slow index. Throws capacity_error if the
// product dimension exceeds max_dim.
inline constexpr int kKronMaxDim = 4096;
Operator kron(const Operator& a, const Operator& b, int max_dim = kKronMaxDim);

// Tr(op * rho). Throws dimension_error on mismatch. When rho is a density
// matrix and op is Hermitian the result is real to rounding.
cxd expect(const Operator& op, const Operator& rho);

// a*b - b*a.
Operator commutator(const Operator& a, const Operator& b);

// Column-stacked vectorization plumbing: vec(rho)[i + dim*j] = rho(i, j).
std::vector<cxd> vec(const Operator& rho);
Operator unvec(const std::vector<cxd>& v, int dim);

}  // namespace cqed
