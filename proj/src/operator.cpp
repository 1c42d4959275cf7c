// operator.cpp

#include "cqed/operator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cqed/kernels.hpp"

namespace cqed {

Operator::Operator(int dim) : dim_(dim) {
    if (dim < 1) throw dimension_error("Operator: dim must be >= 1, got " + std::to_string(dim));
    a_.assign(static_cast<std::size_t>(dim) * dim, cxd{0.0, 0.0});
}

Operator::Operator(int dim, std::vector<cxd> data) : dim_(dim), a_(std::move(data)) {
    if (dim < 1) throw dimension_error("Operator: dim must be >= 1, got " + std::to_string(dim));
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw dimension_error("Operator: data size does not match dim*dim");
    if (!is_finite()) throw dimension_error("Operator: entries must be finite");
}

Operator Operator::identity(int dim) {
    Operator id(dim);
    for (int i = 0; i < dim; ++i) id(i, i) = 1.0;
    return id;
}

Operator Operator::adjoint() const {
    Operator r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Operator Operator::transpose() const {
    Operator r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Operator Operator::conj() const {
    Operator r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
    return r;
}

cxd Operator::trace() const {
    cxd t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Operator::max_abs() const {
    double m = 0.0;
    for (const cxd& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double Operator::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool Operator::is_finite() const {
    for (const cxd& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Operator& Operator::operator+=(const Operator& o) {
    if (o.dim_ != dim_) throw dimension_error("Operator+: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    if (o.dim_ != dim_) throw dimension_error("Operator-: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Operator& Operator::operator*=(cxd s) {
    for (cxd& z : a_) z *= s;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    if (a.dim_ != b.dim_) throw dimension_error("Operator*: dimension mismatch");
    Operator c(a.dim_);
    kernels::matmul(a.data(), b.data(), c.data(), a.dim_);
    return c;
}

// ---------------------------- constructors ----------------------------------

Operator destroy(int n_levels) {
    if (n_levels < 2)
        throw dimension_error("destroy: n_levels must be >= 2, got " + std::to_string(n_levels));
    Operator a(n_levels);
    for (int k = 0; k + 1 < n_levels; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    return a;
}

Operator create(int n_levels) { return destroy(n_levels).adjoint(); }

Operator number_op(int n_levels) {
    if (n_levels < 1) throw dimension_error("number_op: n_levels must be >= 1");
    Operator n(n_levels);
    for (int k = 0; k < n_levels; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

Operator ket_bra(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw dimension_error("ket_bra: index out of range");
    Operator e(n);
    e(i, j) = 1.0;
    return e;
}

Operator projector(int n, int i) { return ket_bra(n, i, i); }

Operator pauli_x() {
    Operator s(2);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    return s;
}

Operator pauli_y() {
    Operator s(2);
    s(0, 1) = cxd{0.0, -1.0};
    s(1, 0) = cxd{0.0, 1.0};
    return s;
}

Operator pauli_z() {
    Operator s(2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

// ---------------------------- operations ------------------------------------

Operator kron(const Operator& a, const Operator& b, int max_dim) {
    const long prod = static_cast<long>(a.dim()) * b.dim();
    if (prod > max_dim)
        throw capacity_error("kron: product dimension " + std::to_string(prod) +
                             " exceeds maximum " + std::to_string(max_dim));
    Operator c(static_cast<int>(prod));
    kernels::kron(a.data(), a.dim(), b.data(), b.dim(), c.data());
    return c;
}

cxd expect(const Operator& op, const Operator& rho) {
    if (op.dim() != rho.dim()) throw dimension_error("expect: dimension mismatch");
    cxd t{0.0, 0.0};
    for (int i = 0; i < op.dim(); ++i)
        for (int j = 0; j < op.dim(); ++j) t += op(i, j) * rho(j, i);
    return t;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

std::vector<cxd> vec(const Operator& rho) {
    const int d = rho.dim();
    std::vector<cxd> v(static_cast<std::size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(j) * d + i] = rho(i, j);
    return v;
}

Operator unvec(const std::vector<cxd>& v, int dim) {
    if (v.size() != static_cast<std::size_t>(dim) * dim)
        throw dimension_error("unvec: size does not match dim*dim");
    Operator rho(dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) rho(i, j) = v[static_cast<std::size_t>(j) * dim + i];
    return rho;
}

}  // namespace cqed
