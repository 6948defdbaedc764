#pragma once

#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/hecke.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"
#include "ymick/series.hpp"

namespace ymick {

// A finite-dimensional module over the truncated Yangian of gl_n: the
// matrices of the coefficients T^{(s)}_ij of T_ij(u) = delta_ij +
// sum_{s=1}^{S} T^{(s)}_ij u^{-s}.
struct YangianModule {
    int n = 0;
    int dim = 0;
    int S = 0;
    std::vector<std::vector<QMatrix>> T;

    bool operator==(const YangianModule& other) const {
        return n == other.n && dim == other.dim && S == other.S && T == other.T;
    }
};

inline YangianModule yangian_zero(int n, int dim, int S) {
    if (n < 1 || dim < 1 || S < 1)
        throw DimensionMismatch("yangian_zero: need n, dim, S >= 1");
    YangianModule m;
    m.n = n;
    m.dim = dim;
    m.S = S;
    m.T.assign(S, std::vector<QMatrix>(n * n, QMatrix(dim, dim)));
    return m;
}

// T^{(s)}_ij with the convention T^{(0)}_ij = delta_ij.
inline QMatrix ym_T(const YangianModule& m, int s, int i, int j) {
    if (s < 0 || s > m.S) throw IndexOutOfRange("ym_T: order outside 0..S");
    if (i < 1 || i > m.n || j < 1 || j > m.n)
        throw IndexOutOfRange("ym_T: index outside 1..n");
    if (s == 0) return i == j ? qm_identity(m.dim) : QMatrix(m.dim, m.dim);
    return m.T[s - 1][(i - 1) * m.n + (j - 1)];
}

inline void ym_set(YangianModule& m, int s, int i, int j, QMatrix mat) {
    if (s < 1 || s > m.S) throw IndexOutOfRange("ym_set: order outside 1..S");
    if (mat.rows != m.dim || mat.cols != m.dim)
        throw DimensionMismatch("ym_set: matrix is not dim x dim");
    m.T[s - 1][(i - 1) * m.n + (j - 1)] = std::move(mat);
}

// Checks the defining relation (u-v)[T_ij(u), T_kl(v)] =
// T_kj(u)T_il(v) - T_kj(v)T_il(u) on every coefficient of u^{-r}v^{-s}
// with r+s <= S; these are exactly the coefficients determined by the
// stored truncation.
inline CheckResult check_yangian_relations(const YangianModule& m) {
    auto bracket = [&](int p, int q, int i, int j, int k, int l) {
        if (p == 0 || q == 0) return QMatrix(m.dim, m.dim);
        QMatrix a = ym_T(m, p, i, j);
        QMatrix b = ym_T(m, q, k, l);
        return qm_sub(qm_mul(a, b), qm_mul(b, a));
    };
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j)
            for (int k = 1; k <= m.n; ++k)
                for (int l = 1; l <= m.n; ++l)
                    for (int r = 0; r <= m.S; ++r)
                        for (int s = 0; r + s <= m.S; ++s) {
                            QMatrix lhs = qm_sub(bracket(r + 1, s, i, j, k, l),
                                                 bracket(r, s + 1, i, j, k, l));
                            QMatrix rhs = qm_sub(
                                qm_mul(ym_T(m, r, k, j), ym_T(m, s, i, l)),
                                qm_mul(ym_T(m, s, k, j), ym_T(m, r, i, l)));
                            if (!(lhs == rhs))
                                return check_fail(
                                    "defining relation fails at i=" + std::to_string(i) +
                                    " j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                    " l=" + std::to_string(l) + " u^-" + std::to_string(r) +
                                    " v^-" + std::to_string(s));
                        }
    return check_pass();
}

// The evaluation module on Lambda^N(C^n): T^{(s)}_ij = z^{s-1} E_ij.
inline YangianModule evaluation_module(int n, int N, const Rational& z, int S) {
    if (N < 0 || N > n) throw InvalidDegree("evaluation_module: need 0 <= N <= n");
    GAlg alg(1, n);
    std::vector<Mask> basis;
    for (Mask g = 0; g < alg.dim_mask(); ++g)
        if (std::popcount(g) == N) basis.push_back(g);
    int dim = static_cast<int>(basis.size());
    YangianModule m = yangian_zero(n, dim, S);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix full = operator_matrix(alg, gln_op(alg, i, j));
            QMatrix e(dim, dim);
            for (int col = 0; col < dim; ++col)
                for (int row = 0; row < dim; ++row)
                    e.set(row, col, full.get(static_cast<int>(basis[row]),
                                             static_cast<int>(basis[col])));
            Rational zp(1);
            for (int s = 1; s <= S; ++s) {
                ym_set(m, s, i, j, qm_scale(e, zp));
                zp *= z;
            }
        }
    return m;
}

// The same action on the whole exterior algebra of C^n.
inline YangianModule evaluation_module_full(int n, const Rational& z, int S) {
    GAlg alg(1, n);
    int dim = static_cast<int>(alg.dim_mask());
    YangianModule m = yangian_zero(n, dim, S);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix e = operator_matrix(alg, gln_op(alg, i, j));
            Rational zp(1);
            for (int s = 1; s <= S; ++s) {
                ym_set(m, s, i, j, qm_scale(e, zp));
                zp *= z;
            }
        }
    return m;
}

inline YangianModule trivial_module(int n, int S) { return yangian_zero(n, 1, S); }

// Comultiplication: T_ij(u) acts on the product space as
// sum_k T_ik(u) (x) T_kj(u), truncated at min(S1, S2).
inline YangianModule tensor(const YangianModule& m1, const YangianModule& m2) {
    if (m1.n != m2.n) throw RankMismatch("tensor: modules over different gl_n");
    int S = m1.S < m2.S ? m1.S : m2.S;
    YangianModule out = yangian_zero(m1.n, m1.dim * m2.dim, S);
    for (int i = 1; i <= m1.n; ++i)
        for (int j = 1; j <= m1.n; ++j)
            for (int s = 1; s <= S; ++s) {
                QMatrix acc(out.dim, out.dim);
                for (int k = 1; k <= m1.n; ++k)
                    for (int r = 0; r <= s; ++r)
                        acc = qm_add(acc, kron(ym_T(m1, r, i, k), ym_T(m2, s - r, k, j)));
                ym_set(out, s, i, j, std::move(acc));
            }
    return out;
}

// Pullback through the shift automorphism: the T-series re-expanded at u-z.
inline YangianModule tau_shift(const YangianModule& m, const Rational& z) {
    YangianModule out = yangian_zero(m.n, m.dim, m.S);
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j) {
            std::vector<QMatrix> c{ym_T(m, 0, i, j)};
            for (int s = 1; s <= m.S; ++s) c.push_back(ym_T(m, s, i, j));
            auto shifted = series_substitute_shift(TruncatedSeries<QMatrix>{m.S, c}, z);
            for (int s = 1; s <= m.S; ++s) ym_set(out, s, i, j, shifted.at(s));
        }
    return out;
}

// Pullback through the involution T(u) -> T(-u)^{-1}, computed on the big
// matrix over C^n (x) module with blocks (-1)^s T^{(s)}_ij.
inline YangianModule omega_pullback(const YangianModule& m) {
    int big = m.n * m.dim;
    std::vector<QMatrix> c;
    for (int s = 0; s <= m.S; ++s) {
        QMatrix blockmat(big, big);
        for (int i = 1; i <= m.n; ++i)
            for (int j = 1; j <= m.n; ++j) {
                QMatrix block = ym_T(m, s, i, j);
                if (s % 2 == 1) block = qm_neg(block);
                for (const auto& [pq, v] : block.entries)
                    blockmat.set((i - 1) * m.dim + pq.first, (j - 1) * m.dim + pq.second, v);
            }
        c.push_back(std::move(blockmat));
    }
    auto inv = series_inverse(TruncatedSeries<QMatrix>{m.S, std::move(c)});
    YangianModule out = yangian_zero(m.n, m.dim, m.S);
    for (int s = 1; s <= m.S; ++s)
        for (int i = 1; i <= m.n; ++i)
            for (int j = 1; j <= m.n; ++j)
                ym_set(out, s, i, j,
                       qm_submatrix(inv.at(s), (i - 1) * m.dim, i * m.dim,
                                    (j - 1) * m.dim, j * m.dim));
    return out;
}

// Pullback through the evaluation homomorphism: T^{(1)} from gl_n matrices,
// higher coefficients zero.
inline YangianModule pi_pullback(const GLRep& rep, int S) {
    validate_glrep(rep);
    YangianModule out = yangian_zero(rep.k, rep.dim, S);
    for (int i = 1; i <= rep.k; ++i)
        for (int j = 1; j <= rep.k; ++j) ym_set(out, 1, i, j, rep.E(i, j));
    return out;
}

namespace detail {

inline QMatrix drinfeld_projector(const HeckeModule& w, int n, bool skew) {
    int N = w.N;
    int legs = 1;
    for (int i = 0; i < N; ++i) legs *= n;
    QMatrix acc(w.dim * legs, w.dim * legs);
    Rational scale = rat(Integer(1), factorial(static_cast<unsigned>(N)));
    for (const auto& sigma : all_permutations(N)) {
        QMatrix term = kron(group_element(w, sigma), leg_permutation(n, N, sigma));
        if (skew && perm_sign(sigma) < 0) term = qm_neg(term);
        acc = qm_add(acc, term);
    }
    return qm_scale(acc, scale);
}

inline YangianModule drinfeld_functor(const HeckeModule& w, int n, int S, bool skew) {
    int N = w.N;
    int legs = 1;
    for (int i = 0; i < N; ++i) legs *= n;
    QMatrix basis = column_space_basis(drinfeld_projector(w, n, skew));
    if (basis.cols == 0)
        throw DimensionMismatch(
            "drinfeld functor: the invariant space is zero-dimensional; reduce N");
    YangianModule out = yangian_zero(n, basis.cols, S);
    for (int s = 1; s <= S; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                QMatrix raw(w.dim * legs, w.dim * legs);
                for (int p = 1; p <= N; ++p) {
                    QMatrix yp = skew ? w.y[p - 1] : qm_neg(w.y[p - 1]);
                    raw = qm_add(raw, kron(qm_pow(yp, s - 1),
                                           leg_op(n, N, p, unit_matrix(n, i, j))));
                }
                ym_set(out, s, i, j, restrict_to_span(raw, basis));
            }
    return out;
}

}  // namespace detail

// The functor from H_N-modules to Yangian modules through the skew
// invariants of the diagonal S_N action on W (x) (C^n)^{(x) N}:
// T^{(s+1)}_ij acts as sum_p y_p^s (x) E^{(p)}_ij.
inline YangianModule skew_drinfeld(const HeckeModule& w, int n, int S) {
    return detail::drinfeld_functor(w, n, S, true);
}

// The companion functor through the plain invariants, with y_p negated;
// composing it with sign_twist reproduces skew_drinfeld.
inline YangianModule invariant_drinfeld(const HeckeModule& w, int n, int S) {
    return detail::drinfeld_functor(w, n, S, false);
}

// Basis of {X : X M1^{(s)}_ij = M2^{(s)}_ij X for all s, i, j}, with
// optional extra pairs (D1, D2) that X must also intertwine. Extra pairs in
// which both operators are diagonal restrict the unknowns to matching
// eigenvalue sectors before the solver runs.
inline std::vector<QMatrix> intertwiner_space(
    const YangianModule& m1, const YangianModule& m2,
    const std::vector<std::pair<QMatrix, QMatrix>>& extras = {}) {
    if (m1.n != m2.n || m1.S != m2.S)
        throw RankMismatch("intertwiner_space: mixed shapes");
    int d1 = m1.dim, d2 = m2.dim;

    auto is_diagonal = [](const QMatrix& a) {
        for (const auto& [pq, v] : a.entries)
            if (pq.first != pq.second) return false;
        return true;
    };

    std::vector<int> unknown(d2 * d1, -1);
    int nunknowns = 0;
    for (int p = 0; p < d2; ++p)
        for (int q = 0; q < d1; ++q) {
            bool allowed = true;
            for (const auto& [da, db] : extras) {
                if (!is_diagonal(da) || !is_diagonal(db)) continue;
                if (db.get(p, p) != da.get(q, q)) {
                    allowed = false;
                    break;
                }
            }
            if (allowed) unknown[p * d1 + q] = nunknowns++;
        }

    RowReducer rr(nunknowns);
    auto add_equations = [&](const QMatrix& g1, const QMatrix& g2) {
        for (int pp = 0; pp < d2; ++pp)
            for (int qq = 0; qq < d1; ++qq) {
                RowReducer::SparseRow row;
                for (int q = 0; q < d1; ++q) {
                    int u = unknown[pp * d1 + q];
                    if (u < 0) continue;
                    Rational c = g1.get(q, qq);
                    if (c != 0) row[u] += c;
                }
                for (int p = 0; p < d2; ++p) {
                    int u = unknown[p * d1 + qq];
                    if (u < 0) continue;
                    Rational c = g2.get(pp, p);
                    if (c != 0) row[u] -= c;
                }
                for (auto it = row.begin(); it != row.end();)
                    it = it->second == 0 ? row.erase(it) : std::next(it);
                if (!row.empty()) rr.add_row(std::move(row));
            }
    };

    for (int s = 1; s <= m1.S; ++s)
        for (int i = 1; i <= m1.n; ++i)
            for (int j = 1; j <= m1.n; ++j)
                add_equations(ym_T(m1, s, i, j), ym_T(m2, s, i, j));
    for (const auto& [da, db] : extras)
        if (!(is_diagonal(da) && is_diagonal(db))) add_equations(da, db);

    std::vector<QMatrix> out;
    for (const auto& vec : rr.nullspace_basis()) {
        QMatrix x(d2, d1);
        for (int p = 0; p < d2; ++p)
            for (int q = 0; q < d1; ++q) {
                int u = unknown[p * d1 + q];
                if (u >= 0) x.set(p, q, vec.get(u, 0));
            }
        out.push_back(std::move(x));
    }
    return out;
}

inline int commutant_dimension(const YangianModule& m) {
    return static_cast<int>(intertwiner_space(m, m).size());
}

}  // namespace ymick
