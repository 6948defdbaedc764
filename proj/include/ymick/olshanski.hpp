#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/coinvariants.hpp"
#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"
#include "ymick/series.hpp"
#include "ymick/yangian.hpp"

namespace ymick {

// ---------------------------------------------------------------------------
// Block inversion of series with matrix coefficients.

template <class R>
struct SchurBlocks {
    TruncatedSeries<RMatrix<R>> at, bt, ct, dt;
};

namespace detail {

template <class R>
void block_shape_check(const TruncatedSeries<RMatrix<R>>& a,
                       const TruncatedSeries<RMatrix<R>>& b,
                       const TruncatedSeries<RMatrix<R>>& c,
                       const TruncatedSeries<RMatrix<R>>& d) {
    if (a.order != b.order || a.order != c.order || a.order != d.order)
        throw DimensionMismatch("block_inverse: mixed truncation orders");
    int n = a.c[0].rows, l = d.c[0].rows;
    if (a.c[0].cols != n || d.c[0].cols != l)
        throw DimensionMismatch("block_inverse: diagonal blocks are not square");
    if (b.c[0].rows != n || b.c[0].cols != l || c.c[0].rows != l || c.c[0].cols != n)
        throw DimensionMismatch("block_inverse: off-diagonal block shapes");
}

// Series of one rectangular block of a matrix-valued series, rows [r0, r1)
// and columns [c0, c1).
template <class R>
TruncatedSeries<RMatrix<R>> series_block(const TruncatedSeries<RMatrix<R>>& big,
                                         int r0, int r1, int c0, int c1) {
    std::vector<RMatrix<R>> coeffs;
    for (int s = 0; s <= big.order; ++s) {
        std::vector<R> e;
        for (int i = r0; i < r1; ++i)
            for (int j = c0; j < c1; ++j) e.push_back(big.at(s).at(i, j));
        coeffs.push_back(RMatrix<R>(r1 - r0, c1 - c0, std::move(e)));
    }
    return TruncatedSeries<RMatrix<R>>{big.order, std::move(coeffs)};
}

}  // namespace detail

// Inverse of the block matrix [[A, B], [C, D]] in Schur-complement form:
//   At = (A - B D^{-1} C)^{-1}            Bt = -A^{-1} B (D - C A^{-1} B)^{-1}
//   Ct = -D^{-1} C (A - B D^{-1} C)^{-1}  Dt = (D - C A^{-1} B)^{-1}
// The coefficient ring may be noncommutative; factors are never reordered.
// A leading term that fails to invert raises NonInvertibleLeadingTerm.
template <class R>
SchurBlocks<R> block_inverse(const TruncatedSeries<RMatrix<R>>& a,
                             const TruncatedSeries<RMatrix<R>>& b,
                             const TruncatedSeries<RMatrix<R>>& c,
                             const TruncatedSeries<RMatrix<R>>& d) {
    detail::block_shape_check(a, b, c, d);
    auto ainv = series_inverse(a);
    auto dinv = series_inverse(d);
    auto at = series_inverse(series_sub(a, series_mul(b, series_mul(dinv, c))));
    auto dt = series_inverse(series_sub(d, series_mul(c, series_mul(ainv, b))));
    auto bt = series_neg(series_mul(ainv, series_mul(b, dt)));
    auto ct = series_neg(series_mul(dinv, series_mul(c, at)));
    return {std::move(at), std::move(bt), std::move(ct), std::move(dt)};
}

// ---------------------------------------------------------------------------
// The centralizer construction on G(C^m (x) C^{n+l}): the Yangian of gl_n
// acts through the leading n x n block of the inverse of the matrix
// 1 + (u - l)^{-1} E, whose ij entry is the operator sum_c x_{ci} d_{cj}.

// Since (u - l)^{-1} = sum_{s >= 1} l^{s-1} u^{-s}, the matrix expands with
// constant coefficient 1 and u^{-s} coefficient l^{s-1} E. For l = 0 there
// is no complementary block and T(u) is the matrix itself; otherwise T(u) is
// the Schur complement A - B D^{-1} C, recovered by inverting the leading
// block of the block inverse.
inline YangianModule beta_via_schur(int m, int n, int l, int S) {
    if (m < 1 || n < 1 || l < 0 || S < 1)
        throw DimensionMismatch("beta_via_schur: need m, n, S >= 1 and l >= 0");
    GAlg alg(m, n + l);
    int big = n + l;
    std::vector<COperator> id_entries, e_entries;
    for (int i = 1; i <= big; ++i)
        for (int j = 1; j <= big; ++j) {
            id_entries.push_back(i == j ? c_identity(alg) : c_zero(alg));
            e_entries.push_back(gln_op(alg, i, j));
        }
    RMatrix<COperator> e(big, big, std::move(e_entries));
    std::vector<RMatrix<COperator>> coeffs;
    coeffs.push_back(RMatrix<COperator>(big, big, std::move(id_entries)));
    Rational lpow(1);
    for (int s = 1; s <= S; ++s) {
        coeffs.push_back(ring_scale(e, lpow));
        lpow *= rat(l);
    }
    TruncatedSeries<RMatrix<COperator>> mser{S, std::move(coeffs)};
    TruncatedSeries<RMatrix<COperator>> tser = mser;
    if (l > 0) {
        auto a = detail::series_block(mser, 0, n, 0, n);
        auto b = detail::series_block(mser, 0, n, n, big);
        auto c = detail::series_block(mser, n, big, 0, n);
        auto d = detail::series_block(mser, n, big, n, big);
        tser = series_inverse(block_inverse(a, b, c, d).at);
    }
    YangianModule out = yangian_zero(n, static_cast<int>(alg.dim_mask()), S);
    for (int s = 1; s <= S; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                ym_set(out, s, i, j, operator_matrix(alg, tser.at(s).at(i - 1, j - 1)));
    return out;
}

// Restriction to the leading corner: the coefficients T^{(s)}_ij with
// i, j <= n_small generate a copy of the smaller Yangian.
inline YangianModule corner_module(const YangianModule& m, int n_small) {
    if (n_small < 1 || n_small > m.n)
        throw DimensionMismatch("corner_module: need 1 <= n_small <= n");
    YangianModule out = yangian_zero(n_small, m.dim, m.S);
    for (int s = 1; s <= m.S; ++s)
        for (int i = 1; i <= n_small; ++i)
            for (int j = 1; j <= n_small; ++j) ym_set(out, s, i, j, ym_T(m, s, i, j));
    return out;
}

// The same module assembled from pullbacks: evaluate gl_{n+l} on the
// Grassmann algebra, pull back through the inversion T(u) -> T(-u)^{-1},
// restrict to the n x n corner, invert once more over gl_n, and shift by l.
inline YangianModule beta_via_composition(int m, int n, int l, int S) {
    if (m < 1 || n < 1 || l < 0 || S < 1)
        throw DimensionMismatch("beta_via_composition: need m, n, S >= 1 and l >= 0");
    YangianModule t = pi_pullback(gln_glrep(m, n + l), S);
    t = omega_pullback(t);
    t = corner_module(t, n);
    t = omega_pullback(t);
    return tau_shift(t, rat(l));
}

// The companion map without the second inversion, shifted the other way.
inline YangianModule alpha_via_composition(int m, int n, int l, int S) {
    if (m < 1 || n < 1 || l < 0 || S < 1)
        throw DimensionMismatch("alpha_via_composition: need m, n, S >= 1 and l >= 0");
    YangianModule t = pi_pullback(gln_glrep(m, n + l), S);
    t = omega_pullback(t);
    t = corner_module(t, n);
    return tau_shift(t, rat(-l));
}

// The image of the Yangian action commutes with the gl_l action on the last
// l columns.
inline CheckResult check_beta_centralizer(int m, int n, int l, int S) {
    YangianModule w = beta_via_schur(m, n, l, S);
    GAlg alg(m, n + l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            QMatrix g = operator_matrix(alg, gln_op(alg, n + i, n + j));
            for (int s = 1; s <= S; ++s)
                for (int p = 1; p <= n; ++p)
                    for (int q = 1; q <= n; ++q) {
                        QMatrix t = ym_T(w, s, p, q);
                        if (!(qm_mul(g, t) == qm_mul(t, g)))
                            return check_fail(
                                "centralizer: E_{" + std::to_string(n + i) + "," +
                                std::to_string(n + j) + "} fails to commute with T^{(" +
                                std::to_string(s) + ")}_{" + std::to_string(p) + "," +
                                std::to_string(q) + "}");
                    }
        }
    return check_pass();
}

// Full cross-check of the centralizer construction: the block route and the
// pullback route agree, the result satisfies the defining relations, and
// under the column-split isomorphism it matches the bimodule action with
// first factor G(C^m (x) C^l) carrying the row action of gl_m.
inline CheckResult check_arol(int m, int n, int l, int S) {
    YangianModule schur = beta_via_schur(m, n, l, S);
    YangianModule comp = beta_via_composition(m, n, l, S);
    if (!(schur == comp))
        return check_fail("block route and pullback route disagree at m=" +
                          std::to_string(m) + " n=" + std::to_string(n) + " l=" +
                          std::to_string(l));
    CheckResult rel = check_yangian_relations(schur);
    if (!rel.ok) return rel;
    YangianModule em = e_module(gamma_glrep(m, l), n, S);
    if (em.dim != schur.dim)
        return check_fail("transport: dimensions disagree");
    QMatrix phi = col_split_matrix(m, n, l);
    for (int s = 1; s <= S; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!(qm_mul(phi, ym_T(schur, s, i, j)) == qm_mul(ym_T(em, s, i, j), phi)))
                    return check_fail("transport: T^{(" + std::to_string(s) + ")}_{" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "} differs under the column split");
    return check_pass();
}

}  // namespace ymick
