#pragma once

#include <map>
#include <string>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"

namespace ymick {

// A module over the degenerate affine Hecke algebra H_N, given by the
// matrices of the adjacent transpositions and of the commuting-up-to-sigma
// generators y_p. The x_p are derived: x_p = y_p + sum_{q<p} sigma_{qp}.
struct HeckeModule {
    int N = 0;
    int dim = 0;
    std::vector<QMatrix> sigma;
    std::vector<QMatrix> y;
};

// Image of a permutation under the module's S_N action, multiplied out
// along a reduced word.
inline QMatrix group_element(const HeckeModule& w, const Perm& sigma) {
    if (static_cast<int>(sigma.size()) != w.N)
        throw DimensionMismatch("group_element: permutation size is not N");
    QMatrix out = qm_identity(w.dim);
    for (int c : reduced_word(sigma)) out = qm_mul(out, w.sigma[c - 1]);
    return out;
}

inline QMatrix sigma_pq(const HeckeModule& w, int p, int q) {
    return group_element(w, transposition(w.N, p, q));
}

inline QMatrix x_op(const HeckeModule& w, int p) {
    if (p < 1 || p > w.N) throw IndexOutOfRange("x_op: index outside 1..N");
    QMatrix out = w.y[p - 1];
    for (int q = 1; q < p; ++q) out = qm_add(out, sigma_pq(w, q, p));
    return out;
}

namespace detail {

// The operator e acting on leg p of (C^m)^{(x) N}, legs indexed major first.
inline QMatrix leg_op(int m, int N, int p, const QMatrix& e) {
    int before = 1, after = 1;
    for (int i = 1; i < p; ++i) before *= m;
    for (int i = p + 1; i <= N; ++i) after *= m;
    return kron(qm_identity(before), kron(e, qm_identity(after)));
}

inline QMatrix unit_matrix(int m, int a, int b) {
    QMatrix e(m, m);
    e.set(a - 1, b - 1, Rational(1));
    return e;
}

// Permutation of the tensor legs: factor p moves to leg sigma(p).
inline QMatrix leg_permutation(int m, int N, const Perm& sigma) {
    int dim = 1;
    for (int i = 0; i < N; ++i) dim *= m;
    QMatrix out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        std::vector<int> in(N);
        int rest = col;
        for (int p = N - 1; p >= 0; --p) {
            in[p] = rest % m;
            rest /= m;
        }
        int row = 0;
        for (int p = 1; p <= N; ++p) row = row * m + in[perm_inverse(sigma)[p - 1] - 1];
        out.set(row, col, Rational(1));
    }
    return out;
}

}  // namespace detail

// The Hecke action on V (x) (C^m)^{(x) N}: adjacent transpositions permute
// the tensor legs and y_p = sum_{a,b} E_ba (x) E_ab acting on V and leg p.
inline HeckeModule cherednik(const GLRep& v, int m, int N) {
    if (v.k != m) throw DimensionMismatch("cherednik: module is not over gl_m");
    validate_glrep(v);
    int legs = 1;
    for (int i = 0; i < N; ++i) legs *= m;
    HeckeModule w;
    w.N = N;
    w.dim = v.dim * legs;
    for (int p = 1; p < N; ++p)
        w.sigma.push_back(kron(qm_identity(v.dim),
                               detail::leg_permutation(m, N, transposition(N, p, p + 1))));
    for (int p = 1; p <= N; ++p) {
        QMatrix yp(w.dim, w.dim);
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                yp = qm_add(yp, kron(v.E(b, a),
                                     detail::leg_op(m, N, p, detail::unit_matrix(m, a, b))));
        w.y.push_back(std::move(yp));
    }
    return w;
}

// The regular S_N-module with y_p = 0, so that x_p act by the
// Jucys-Murphy sums.
inline HeckeModule jm_evaluation(int N) {
    if (N < 1) throw DimensionMismatch("jm_evaluation: need N >= 1");
    auto perms = all_permutations(N);
    std::map<Perm, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
    HeckeModule w;
    w.N = N;
    w.dim = static_cast<int>(perms.size());
    for (int p = 1; p < N; ++p) {
        Perm sp = transposition(N, p, p + 1);
        QMatrix mat(w.dim, w.dim);
        for (int i = 0; i < w.dim; ++i)
            mat.set(index[perm_compose(sp, perms[i])], i, Rational(1));
        w.sigma.push_back(std::move(mat));
    }
    for (int p = 1; p <= N; ++p) w.y.push_back(QMatrix(w.dim, w.dim));
    return w;
}

inline HeckeModule sign_twist(const HeckeModule& w) {
    HeckeModule out;
    out.N = w.N;
    out.dim = w.dim;
    for (const auto& s : w.sigma) out.sigma.push_back(qm_neg(s));
    for (const auto& yp : w.y) out.y.push_back(qm_neg(yp));
    return out;
}

// Verifies every defining relation of H_N on the module.
inline CheckResult check_hecke_module(const HeckeModule& w) {
    int N = w.N;
    QMatrix one = qm_identity(w.dim);
    for (int p = 1; p < N; ++p)
        if (!(qm_mul(w.sigma[p - 1], w.sigma[p - 1]) == one))
            return check_fail("sigma_" + std::to_string(p) + " is not an involution");
    for (int p = 1; p + 1 < N; ++p) {
        QMatrix lhs = qm_mul(w.sigma[p - 1], qm_mul(w.sigma[p], w.sigma[p - 1]));
        QMatrix rhs = qm_mul(w.sigma[p], qm_mul(w.sigma[p - 1], w.sigma[p]));
        if (!(lhs == rhs))
            return check_fail("braid relation fails at p=" + std::to_string(p));
    }
    for (int p = 1; p < N; ++p)
        for (int q = p + 2; q < N; ++q)
            if (!(qm_mul(w.sigma[p - 1], w.sigma[q - 1]) ==
                  qm_mul(w.sigma[q - 1], w.sigma[p - 1])))
                return check_fail("distant sigma_" + std::to_string(p) + ", sigma_" +
                                  std::to_string(q) + " do not commute");
    for (int p = 1; p < N; ++p) {
        Perm sp = transposition(N, p, p + 1);
        for (int q = 1; q <= N; ++q) {
            QMatrix lhs = qm_mul(w.sigma[p - 1], qm_mul(w.y[q - 1], w.sigma[p - 1]));
            if (!(lhs == w.y[sp[q - 1] - 1]))
                return check_fail("conjugation of y_" + std::to_string(q) + " by sigma_" +
                                  std::to_string(p) + " fails");
        }
    }
    for (int p = 1; p <= N; ++p)
        for (int q = 1; q <= N; ++q) {
            if (p == q) continue;
            QMatrix lhs = qm_sub(qm_mul(w.y[p - 1], w.y[q - 1]),
                                 qm_mul(w.y[q - 1], w.y[p - 1]));
            QMatrix rhs = qm_mul(sigma_pq(w, std::min(p, q), std::max(p, q)),
                                 qm_sub(w.y[p - 1], w.y[q - 1]));
            if (!(lhs == rhs))
                return check_fail("[y_" + std::to_string(p) + ", y_" + std::to_string(q) +
                                  "] differs from sigma_pq(y_p - y_q)");
        }
    std::vector<QMatrix> x;
    for (int p = 1; p <= N; ++p) x.push_back(x_op(w, p));
    for (int p = 1; p < N; ++p) {
        QMatrix lhs = qm_mul(w.sigma[p - 1], x[p - 1]);
        QMatrix rhs = qm_sub(qm_mul(x[p], w.sigma[p - 1]), one);
        if (!(lhs == rhs))
            return check_fail("sigma_p x_p = x_{p+1} sigma_p - 1 fails at p=" +
                              std::to_string(p));
        for (int q = 1; q <= N; ++q) {
            if (q == p || q == p + 1) continue;
            if (!(qm_mul(w.sigma[p - 1], x[q - 1]) == qm_mul(x[q - 1], w.sigma[p - 1])))
                return check_fail("sigma_" + std::to_string(p) + " does not commute with x_" +
                                  std::to_string(q));
        }
    }
    return check_pass();
}

// The diagonal gl_m action on V (x) (C^m)^{(x) N}, which the Hecke action
// must commute with.
inline QMatrix cherednik_diagonal(const GLRep& v, int m, int N, int a, int b) {
    int legs = 1;
    for (int i = 0; i < N; ++i) legs *= m;
    QMatrix out = kron(v.E(a, b), qm_identity(legs));
    for (int p = 1; p <= N; ++p)
        out = qm_add(out, kron(qm_identity(v.dim),
                               detail::leg_op(m, N, p, detail::unit_matrix(m, a, b))));
    return out;
}

inline CheckResult check_cherednik_commutes(const GLRep& v, int m, int N) {
    HeckeModule w = cherednik(v, m, N);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            QMatrix diag = cherednik_diagonal(v, m, N, a, b);
            for (int p = 1; p < N; ++p)
                if (!(qm_mul(diag, w.sigma[p - 1]) == qm_mul(w.sigma[p - 1], diag)))
                    return check_fail("E_" + std::to_string(a) + std::to_string(b) +
                                      " does not commute with sigma_" + std::to_string(p));
            for (int p = 1; p <= N; ++p)
                if (!(qm_mul(diag, w.y[p - 1]) == qm_mul(w.y[p - 1], diag)))
                    return check_fail("E_" + std::to_string(a) + std::to_string(b) +
                                      " does not commute with y_" + std::to_string(p));
        }
    return check_pass();
}

}  // namespace ymick
