// eig.cpp — complex Hermitian eigensolver
//
// Stage 1 reduces A to a complex Hermitian tridiagonal via Householder
// reflectors while accumulating the transform Q. Stage 2 rotates the
// subdiagonal phases away, leaving a real symmetric tridiagonal. Stage 3 is
// the classic implicit-shift QL iteration with the rotations folded into Q.

#include "cqed/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace cqed {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// phase(z) = z/|z|, with phase(0) = 1.
cxd phase(cxd z) {
    const double m = std::abs(z);
    return m == 0.0 ? cxd{1.0, 0.0} : z / m;
}

struct Tridiag {
    std::vector<double> d;  // diagonal
    std::vector<double> e;  // subdiagonal, e[i] couples i and i+1
    Operator q;             // accumulated unitary, A = q T q†
    explicit Tridiag(int n) : d(n), e(n > 0 ? n - 1 : 0, 0.0), q(Operator::identity(n)) {}
};

Tridiag householder_tridiagonalize(Operator a) {
    const int n = a.dim();
    Tridiag t(n);

    std::vector<cxd> v(n), p(n), w(n);
    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;  // length of the column below the diagonal
        double xnorm2 = 0.0;
        for (int i = 1; i < m; ++i) xnorm2 += std::norm(a(k + 1 + i, k));
        if (xnorm2 == 0.0) continue;  // already in tridiagonal form at this column
        const cxd x0 = a(k + 1, k);
        const double xnorm = std::sqrt(xnorm2 + std::norm(x0));
        const cxd alpha = -phase(x0) * xnorm;

        for (int i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (int i = 0; i < m; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;

        // Rank-2 update of the trailing block: A <- A - w v† - v w†,
        // w = tau (A v) - (tau²/2)(v† A v) v.
        for (int i = 0; i < m; ++i) {
            cxd s{0.0, 0.0};
            for (int j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
            p[i] = tau * s;
        }
        cxd vp{0.0, 0.0};
        for (int i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
        const cxd kappa = 0.5 * tau * vp;
        for (int i = 0; i < m; ++i) w[i] = p[i] - kappa * v[i];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                a(k + 1 + i, k + 1 + j) -= w[i] * std::conj(v[j]) + v[i] * std::conj(w[j]);

        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
        for (int i = 2; i < m + 1; ++i) {
            a(k + i, k) = 0.0;
            a(k, k + i) = 0.0;
        }

        // Q <- Q P, touching columns k+1..n-1 only.
        for (int r = 0; r < n; ++r) {
            cxd u{0.0, 0.0};
            for (int j = 0; j < m; ++j) u += t.q(r, k + 1 + j) * v[j];
            u *= tau;
            for (int j = 0; j < m; ++j) t.q(r, k + 1 + j) -= u * std::conj(v[j]);
        }
    }

    // Rotate the subdiagonal phases into Q so the tridiagonal is real:
    // with D = diag(d_i), d_0 = 1, d_i = d_{i-1} * phase(T[i,i-1]), the
    // matrix D† T D has subdiagonal |T[i,i-1]| and A = (Q D) T' (Q D)†.
    cxd dphase{1.0, 0.0};
    t.d[0] = a(0, 0).real();
    for (int i = 1; i < n; ++i) {
        const cxd f = a(i, i - 1);
        dphase *= phase(f);
        t.e[i - 1] = std::abs(f);
        for (int r = 0; r < n; ++r) t.q(r, i) *= dphase;
        t.d[i] = a(i, i).real();
    }
    return t;
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e), accumulating
// the rotations into the complex columns of q. Classic EISPACK tql2 scheme.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Operator& q) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);  // sentinel

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd || std::abs(e[m]) < 1e-300) break;
            }
            if (m != l) {
                if (iter++ == 60) throw solver_error("eig_hermitian: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflowed = false;  // rotation annihilated prematurely
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflowed = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < q.dim(); ++k) {
                        const cxd fk = q(k, i + 1);
                        q(k, i + 1) = s * q(k, i) + c * fk;
                        q(k, i) = c * q(k, i) - s * fk;
                    }
                }
                if (underflowed) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace

EigenSystem eig_hermitian(const Operator& h) {
    const double asym = h.max_asymmetry();
    const double scale = h.max_abs();
    if (asym > 1e-9 * scale) {
        std::ostringstream os;
        os << "eig_hermitian: input not Hermitian, max |h_ij - conj(h_ji)| = " << asym
           << " with ||h||_max = " << scale;
        throw hermiticity_error(os.str());
    }

    const int n = h.dim();
    // Work on the exactly Hermitian average; the input is Hermitian to
    // tolerance, and QL assumes a symmetric problem.
    Operator a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    Tridiag t = householder_tridiagonalize(std::move(a));
    ql_implicit(t.d, t.e, t.q);

    // Sort ascending, keeping vector columns paired with values.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return t.d[i] < t.d[j]; });

    EigenSystem es{std::vector<double>(n), Operator(n)};
    for (int c = 0; c < n; ++c) {
        const int src = order[c];
        es.values[c] = t.d[src];
        // Phase convention: largest-magnitude component real positive.
        int imax = 0;
        double vmax = -1.0;
        for (int r = 0; r < n; ++r) {
            const double m = std::abs(t.q(r, src));
            if (m > vmax) {
                vmax = m;
                imax = r;
            }
        }
        const cxd ph = std::conj(phase(t.q(imax, src)));
        for (int r = 0; r < n; ++r) es.vectors(r, c) = t.q(r, src) * ph;
    }
    return es;
}

}  // namespace cqed
