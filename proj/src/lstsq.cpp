// lstsq.cpp

#include "cqed/lstsq.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cqed {

namespace {
using cxd = std::complex<double>;

cxd phase(cxd z) {
    const double m = std::abs(z);
    return m == 0.0 ? cxd{1.0, 0.0} : z / m;
}
}  // namespace

LstsqResult lstsq(std::vector<cxd> a, int m, int n, std::vector<cxd> b, double rank_tol) {
    if (m < n || static_cast<int>(a.size()) != m * n || static_cast<int>(b.size()) != m)
        throw std::invalid_argument("lstsq: shape mismatch");

    auto at = [&](int i, int j) -> cxd& { return a[static_cast<std::size_t>(i) * n + j]; };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> rdiag;
    rdiag.reserve(n);

    std::vector<cxd> v(m);
    for (int k = 0; k < n; ++k) {
        // Column pivot: largest remaining column norm, ties to the lowest index.
        int jmax = k;
        double cmax = -1.0;
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < m; ++i) s += std::norm(at(i, j));
            if (s > cmax) {
                cmax = s;
                jmax = j;
            }
        }
        if (jmax != k) {
            for (int i = 0; i < m; ++i) std::swap(at(i, k), at(i, jmax));
            std::swap(perm[k], perm[jmax]);
        }

        const int len = m - k;
        double xnorm = std::sqrt(cmax);
        const cxd alpha = -phase(at(k, k)) * xnorm;
        rdiag.push_back(std::abs(alpha));
        if (xnorm == 0.0) continue;  // zero column, reflector is identity

        for (int i = 0; i < len; ++i) v[i] = at(k + i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (int i = 0; i < len; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) {
            at(k, k) = alpha;
            continue;
        }
        const double tau = 2.0 / vnorm2;

        at(k, k) = alpha;
        for (int i = 1; i < len; ++i) at(k + i, k) = 0.0;
        for (int j = k + 1; j < n; ++j) {
            cxd u{0.0, 0.0};
            for (int i = 0; i < len; ++i) u += std::conj(v[i]) * at(k + i, j);
            u *= tau;
            for (int i = 0; i < len; ++i) at(k + i, j) -= u * v[i];
        }
        cxd ub{0.0, 0.0};
        for (int i = 0; i < len; ++i) ub += std::conj(v[i]) * b[k + i];
        ub *= tau;
        for (int i = 0; i < len; ++i) b[k + i] -= ub * v[i];
    }

    int rank = 0;
    const double r0 = rdiag.empty() ? 0.0 : rdiag[0];
    for (int k = 0; k < n; ++k)
        if (rdiag[k] > rank_tol * r0 && rdiag[k] > 0.0) ++rank;

    // Back substitution on the leading rank-by-rank triangle.
    std::vector<cxd> y(n, cxd{0.0, 0.0});
    for (int i = rank - 1; i >= 0; --i) {
        cxd s = b[i];
        for (int j = i + 1; j < rank; ++j) s -= at(i, j) * y[j];
        y[i] = s / at(i, i);
    }

    LstsqResult res;
    res.x.assign(n, cxd{0.0, 0.0});
    for (int k = 0; k < n; ++k) res.x[perm[k]] = y[k];
    res.rank = rank;
    res.rdiag = std::move(rdiag);
    return res;
}

}  // namespace cqed
