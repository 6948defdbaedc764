#pragma once

#include <bit>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/enveloping.hpp"
#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"
#include "ymick/yangian.hpp"

namespace ymick {

// ---------------------------------------------------------------------------
// The bimodule E_m(V) = V (x) G(C^m (x) C^n) with its Yangian action.

// Matrix of T^{(s+1)}_ij on V (x) G(C^m (x) C^n): the sum over paths
// (c_0, ..., c_s) of E_{c_1 c_0} E_{c_2 c_1} ... E_{c_s c_{s-1}} acting on V
// tensored with x_{c_0 i} d_{c_s j}; for s = 0 the first factor is 1. The
// path sum is the (c_0, c_s) entry of the s-th power of the block matrix
// whose (a, b) block is the action of E_ba.
inline QMatrix e_action(const GLRep& v, int n, int s, int i, int j) {
    if (s < 0) throw IndexOutOfRange("e_action: negative order");
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRange("e_action: column index outside 1..n");
    int m = v.k;
    GAlg alg(m, n);
    QMatrix f(m * v.dim, m * v.dim);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            for (const auto& [pq, val] : v.E(b, a).entries)
                f.set((a - 1) * v.dim + pq.first, (b - 1) * v.dim + pq.second, val);
    QMatrix fs = qm_pow(f, s);
    QMatrix acc(v.dim * static_cast<int>(alg.dim_mask()),
                v.dim * static_cast<int>(alg.dim_mask()));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            QMatrix block = qm_submatrix(fs, (a - 1) * v.dim, a * v.dim,
                                         (b - 1) * v.dim, b * v.dim);
            if (block.entries.empty()) continue;
            COperator xd = c_compose(c_x(alg, a, i), c_d(alg, b, j));
            acc = qm_add(acc, kron(block, operator_matrix(alg, xd)));
        }
    return acc;
}

inline YangianModule e_module(const GLRep& v, int n, int S) {
    validate_glrep(v);
    GAlg alg(v.k, n);
    YangianModule out =
        yangian_zero(n, v.dim * static_cast<int>(alg.dim_mask()), S);
    for (int s = 1; s <= S; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) ym_set(out, s, i, j, e_action(v, n, s - 1, i, j));
    return out;
}

// The diagonal gl_m action on V (x) G(C^m (x) C^n).
inline QMatrix e_diag_action(const GLRep& v, int n, int a, int b) {
    GAlg alg(v.k, n);
    int dimg = static_cast<int>(alg.dim_mask());
    return qm_add(kron(v.E(a, b), qm_identity(dimg)),
                  kron(qm_identity(v.dim), operator_matrix(alg, gamma(alg, a, b))));
}

// ---------------------------------------------------------------------------
// Coinvariant reduction: canonical representatives in 1 (x) B (x) G.

// Ordered lowering sets. The Borel set follows the normal-form monomial
// order, so the leftmost factor of a stored monomial is the first list
// entry with a positive exponent.
inline std::vector<std::pair<int, int>> borel_lowering(int m) {
    std::vector<std::pair<int, int>> out;
    for (int pos = 0; pos < m * (m - 1) / 2; ++pos) out.push_back(pbw_gen(m, pos));
    return out;
}

inline std::vector<std::pair<int, int>> parabolic_lowering(int m, int l) {
    std::vector<std::pair<int, int>> out;
    for (int p = m + 1; p <= m + l; ++p)
        for (int q = 1; q <= m; ++q) out.emplace_back(p, q);
    return out;
}

struct CoinvContext {
    GAlg alg;
    std::vector<std::pair<int, int>> lowering;
    int base_dim;
};

// A lowering monomial (exponents in list order) times a base-module basis
// vector times a Grassmann monomial.
struct RawKey {
    std::vector<int> exps;
    int base = 0;
    Mask mask = 0;

    bool operator<(const RawKey& other) const {
        if (exps != other.exps) return exps < other.exps;
        if (base != other.base) return base < other.base;
        return mask < other.mask;
    }
};

using RawElement = std::map<RawKey, Rational>;

struct CoinvariantVector {
    std::map<std::pair<int, Mask>, Rational> terms;

    bool operator==(const CoinvariantVector& other) const { return terms == other.terms; }
};

inline void coinv_acc(CoinvariantVector& v, int base, Mask mask, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(base, mask);
    auto it = v.terms.find(key);
    if (it == v.terms.end()) {
        v.terms[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) v.terms.erase(it);
    }
}

// Peels lowering factors off every term, leftmost first, through the
// congruence X w (x) g = -w (x) gamma(X) g, until only canonical
// representatives remain.
inline CoinvariantVector reduce(const RawElement& raw, const CoinvContext& ctx) {
    CoinvariantVector out;
    for (const auto& [key, coeff] : raw) {
        if (key.exps.size() != ctx.lowering.size())
            throw DimensionMismatch("reduce: exponent vector length is wrong");
        GElement g{{key.mask, coeff}};
        for (std::size_t t = 0; t < ctx.lowering.size(); ++t) {
            auto [p, q] = ctx.lowering[t];
            COperator op = gamma(ctx.alg, p, q);
            for (int rep = 0; rep < key.exps[t]; ++rep)
                g = g_scale(c_apply(op, g), Rational(-1));
        }
        for (const auto& [mask, c] : g) coinv_acc(out, key.base, mask, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coinvariants of the Verma-induced bimodule.

struct VermaCoinvariants {
    YangianModule module;
    std::vector<QMatrix> h;
};

inline VermaCoinvariants verma_coinvariants_module(const Weight& mu, int m, int n, int S) {
    if (static_cast<int>(mu.size()) != m)
        throw DimensionMismatch("verma_coinvariants_module: weight length is not m");
    GAlg alg(m, n);
    int dim = static_cast<int>(alg.dim_mask());
    int nl = m * (m - 1) / 2;

    VermaCoinvariants out{yangian_zero(n, dim, S), {}};
    std::vector<COperator> gammas;
    for (int pos = 0; pos < nl; ++pos) {
        auto [p, q] = pbw_gen(m, pos);
        gammas.push_back(gamma(alg, p, q));
    }

    for (int s = 1; s <= S; ++s) {
        int power = s - 1;
        std::vector<int> path(power + 1, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                QMatrix t(dim, dim);
                std::fill(path.begin(), path.end(), 1);
                while (true) {
                    COperator xd = c_compose(c_x(alg, path[0], i),
                                             c_d(alg, path[power], j));
                    VermaVector wv = verma_unit(mu);
                    for (int step = power; step >= 1; --step)
                        wv = verma_apply(path[step], path[step - 1], wv);
                    if (!wv.is_zero() && !xd.is_zero())
                        for (Mask g0 = 0; g0 < alg.dim_mask(); ++g0) {
                            GElement gp = c_apply(xd, GElement{{g0, Rational(1)}});
                            if (gp.empty()) continue;
                            for (const auto& [mono, cv] : wv.terms)
                                for (const auto& [mask1, cg] : gp) {
                                    GElement g{{mask1, cv * cg}};
                                    for (int pos = 0; pos < nl; ++pos)
                                        for (int rep = 0; rep < mono[pos]; ++rep)
                                            g = g_scale(c_apply(gammas[pos], g), Rational(-1));
                                    for (const auto& [mask2, c] : g)
                                        t.set(static_cast<int>(mask2), static_cast<int>(g0),
                                              t.get(static_cast<int>(mask2),
                                                    static_cast<int>(g0)) + c);
                                }
                        }
                    int carry = power;
                    while (carry >= 0 && path[carry] == m) path[carry--] = 1;
                    if (carry < 0) break;
                    ++path[carry];
                }
                ym_set(out.module, s, i, j, std::move(t));
            }
    }

    for (int a = 1; a <= m; ++a) {
        QMatrix h(dim, dim);
        for (Mask g = 0; g < alg.dim_mask(); ++g) {
            int cnt = mask_row_counts(alg, g)[a - 1];
            h.set(static_cast<int>(g), static_cast<int>(g), mu[a - 1] + rat(cnt));
        }
        out.h.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coinvariants of the parabolically induced bimodule.

namespace detail {

struct InducedContext {
    const GLRep* v;
    const GLRep* u;
    int m;
    int l;
};

using InducedKey = std::pair<std::vector<int>, int>;
using InducedVector = std::map<InducedKey, Rational>;

inline void iv_acc(InducedVector& vec, InducedKey key, const Rational& c) {
    if (c == 0) return;
    auto it = vec.find(key);
    if (it == vec.end()) {
        vec[std::move(key)] = c;
    } else {
        it->second += c;
        if (it->second == 0) vec.erase(it);
    }
}

// E_pq applied to one induced-module term: abelian lowering factors absorb
// lowering generators directly; anything else commutes through the leftmost
// factor, picking up bracket terms, until it reaches the base vector.
inline void induced_gen_term(const InducedContext& ctx, int p, int q,
                             const std::vector<int>& exps, int base,
                             const Rational& coeff, InducedVector& out) {
    int m = ctx.m;
    if (p > m && q <= m) {
        std::vector<int> e = exps;
        ++e[(p - m - 1) * m + (q - 1)];
        iv_acc(out, {std::move(e), base}, coeff);
        return;
    }
    int lead = -1;
    for (std::size_t t = 0; t < exps.size(); ++t)
        if (exps[t] > 0) {
            lead = static_cast<int>(t);
            break;
        }
    if (lead < 0) {
        int du = ctx.u->dim;
        int vi = base / du, ui = base % du;
        if (p <= m && q <= m) {
            for (const auto& [rc, val] : ctx.v->E(p, q).entries)
                if (rc.second == vi) iv_acc(out, {exps, rc.first * du + ui}, coeff * val);
        } else if (p > m && q > m) {
            for (const auto& [rc, val] : ctx.u->E(p - m, q - m).entries)
                if (rc.second == ui) iv_acc(out, {exps, vi * du + rc.first}, coeff * val);
        }
        return;
    }
    int bp = lead / m + m + 1, bq = lead % m + 1;
    std::vector<int> e1 = exps;
    --e1[lead];
    InducedVector passed;
    induced_gen_term(ctx, p, q, e1, base, coeff, passed);
    for (const auto& [key, c] : passed) {
        std::vector<int> e2 = key.first;
        ++e2[lead];
        iv_acc(out, {std::move(e2), key.second}, c);
    }
    if (q == bp) induced_gen_term(ctx, p, bq, e1, base, coeff, out);
    if (bq == p) induced_gen_term(ctx, bp, q, e1, base, -coeff, out);
}

inline InducedVector induced_apply(const InducedContext& ctx, int p, int q,
                                   const InducedVector& vec) {
    InducedVector out;
    for (const auto& [key, c] : vec) induced_gen_term(ctx, p, q, key.first, key.second, c, out);
    return out;
}

}  // namespace detail

inline YangianModule parabolic_coinvariants_module(const GLRep& v, const GLRep& u,
                                                   int n, int S) {
    validate_glrep(v);
    validate_glrep(u);
    int m = v.k, l = u.k, k = m + l;
    GAlg alg(k, n);
    int dimg = static_cast<int>(alg.dim_mask());
    int dimb = v.dim * u.dim;
    int dim = dimb * dimg;
    detail::InducedContext ctx{&v, &u, m, l};
    CoinvContext cctx{alg, parabolic_lowering(m, l), dimb};

    YangianModule out = yangian_zero(n, dim, S);
    for (int s = 1; s <= S; ++s) {
        int power = s - 1;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                QMatrix t(dim, dim);
                std::vector<int> path(power + 1, 1);
                while (true) {
                    COperator xd = c_compose(c_x(alg, path[0], i),
                                             c_d(alg, path[power], j));
                    if (!xd.is_zero())
                        for (int b0 = 0; b0 < dimb; ++b0) {
                            detail::InducedVector wv{
                                {{std::vector<int>(m * l, 0), b0}, Rational(1)}};
                            for (int step = power; step >= 1 && !wv.empty(); --step)
                                wv = detail::induced_apply(ctx, path[step], path[step - 1], wv);
                            if (wv.empty()) continue;
                            for (Mask g0 = 0; g0 < alg.dim_mask(); ++g0) {
                                GElement gp = c_apply(xd, GElement{{g0, Rational(1)}});
                                if (gp.empty()) continue;
                                RawElement raw;
                                for (const auto& [key, cv] : wv)
                                    for (const auto& [mask1, cg] : gp)
                                        raw[RawKey{key.first, key.second, mask1}] += cv * cg;
                                CoinvariantVector red = reduce(raw, cctx);
                                int col = b0 * dimg + static_cast<int>(g0);
                                for (const auto& [bk, c] : red.terms) {
                                    int row = bk.first * dimg + static_cast<int>(bk.second);
                                    t.set(row, col, t.get(row, col) + c);
                                }
                            }
                        }
                    int carry = power;
                    while (carry >= 0 && path[carry] == k) path[carry--] = 1;
                    if (carry < 0) break;
                    ++path[carry];
                }
                ym_set(out, s, i, j, std::move(t));
            }
    }
    return out;
}

// The block-diagonal gl_m + gl_l action on the coinvariant space; (a, b)
// must lie in one of the two diagonal blocks.
inline QMatrix parabolic_diag_action(const GLRep& v, const GLRep& u, int n, int a, int b) {
    int m = v.k, l = u.k, k = m + l;
    bool top = a <= m && b <= m, bottom = a > m && b > m;
    if (!top && !bottom)
        throw IndexOutOfRange("parabolic_diag_action: generator leaves the Levi block");
    GAlg alg(k, n);
    int dimg = static_cast<int>(alg.dim_mask());
    QMatrix basepart = top ? kron(v.E(a, b), qm_identity(u.dim))
                           : kron(qm_identity(v.dim), u.E(a - m, b - m));
    return qm_add(kron(basepart, qm_identity(dimg)),
                  kron(qm_identity(v.dim * u.dim),
                       operator_matrix(alg, gamma(alg, a, b))));
}

// ---------------------------------------------------------------------------
// Equivalence checks.

// Parabolic coinvariants against the tensor product of the factors' E-spaces
// with the second one shifted by -m; the comparison map is the identity on
// canonical representatives composed with the row-split reindexing.
inline CheckResult check_parind(const GLRep& v, const GLRep& u, int n, int S) {
    int m = v.k, l = u.k;
    YangianModule lhs = parabolic_coinvariants_module(v, u, n, S);
    YangianModule rhs = tensor(e_module(v, n, S), tau_shift(e_module(u, n, S), rat(-m)));

    GAlg big(m + l, n);
    int dimg = static_cast<int>(big.dim_mask());
    int dg1 = 1 << (m * n), dg2 = 1 << (l * n);
    QMatrix split = row_split_matrix(m, l, n);
    QMatrix chi(lhs.dim, lhs.dim);
    for (int vi = 0; vi < v.dim; ++vi)
        for (int ui = 0; ui < u.dim; ++ui)
            for (const auto& [rc, val] : split.entries) {
                int g1 = rc.first / dg2, g2 = rc.first % dg2;
                int row = ((vi * dg1 + g1) * u.dim + ui) * dg2 + g2;
                int col = (vi * u.dim + ui) * dimg + rc.second;
                chi.set(row, col, val);
            }

    for (int s = 1; s <= S; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!(qm_mul(chi, ym_T(lhs, s, i, j)) == qm_mul(ym_T(rhs, s, i, j), chi)))
                    return check_fail("chi fails to intertwine T^(" + std::to_string(s) +
                                      ")_" + std::to_string(i) + std::to_string(j));
    return check_pass();
}

// Verma coinvariants against the tensor product of shifted full-exterior
// evaluation modules; finds an invertible h-equivariant intertwiner as a
// seeded random combination of the solution basis and verifies it.
inline CheckResult check_bimequiv(const Weight& mu, int m, int n, int S,
                                  unsigned long long seed = 42) {
    if (static_cast<int>(mu.size()) != m)
        throw DimensionMismatch("check_bimequiv: weight length is not m");
    VermaCoinvariants lhs = verma_coinvariants_module(mu, m, n, S);

    YangianModule rhs = tau_shift(evaluation_module_full(n, mu[0], S), rat(0));
    for (int a = 2; a <= m; ++a)
        rhs = tensor(rhs, tau_shift(evaluation_module_full(n, mu[a - 1], S), rat(-(a - 1))));

    int dg = 1 << n;
    std::vector<std::pair<QMatrix, QMatrix>> extras;
    for (int a = 1; a <= m; ++a) {
        QMatrix h(rhs.dim, rhs.dim);
        for (int idx = 0; idx < rhs.dim; ++idx) {
            int digit = idx;
            for (int b = m; b > a; --b) digit /= dg;
            digit %= dg;
            h.set(idx, idx, mu[a - 1] + rat(std::popcount(static_cast<unsigned>(digit))));
        }
        extras.emplace_back(lhs.h[a - 1], std::move(h));
    }

    auto basis = intertwiner_space(lhs.module, rhs, extras);
    if (basis.empty()) return check_fail("no h-equivariant intertwiner exists");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(0, 7);
    auto nonzero = [&] { int v = draw(rng); return v < 4 ? v - 4 : v - 3; };
    for (int attempt = 0; attempt < 6; ++attempt) {
        QMatrix x(rhs.dim, lhs.module.dim);
        for (const auto& b : basis)
            x = qm_add(x, qm_scale(b, rat(attempt == 0 ? 1 : nonzero())));
        if (qm_det(x) == 0) continue;
        for (int s = 1; s <= S; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (!(qm_mul(x, ym_T(lhs.module, s, i, j)) ==
                          qm_mul(ym_T(rhs, s, i, j), x)))
                        return check_fail("combination stopped intertwining T^(" +
                                          std::to_string(s) + ")_" + std::to_string(i) +
                                          std::to_string(j));
        return check_pass();
    }
    return check_fail("no invertible combination found in 6 draws");
}

// ---------------------------------------------------------------------------
// Polynomial gl_m-modules inside Grassmann algebras and Hom multiplicities.

inline void validate_partition(const std::vector<int>& mu) {
    for (std::size_t a = 0; a < mu.size(); ++a) {
        if (mu[a] < 0) throw NotPolynomial("partition entries must be non-negative");
        if (a > 0 && mu[a] > mu[a - 1])
            throw NotPolynomial("partition entries must be weakly decreasing");
    }
}

inline std::vector<int> conjugate_partition(const std::vector<int>& mu) {
    validate_partition(mu);
    std::vector<int> out;
    for (int b = 1; mu.empty() ? false : b <= mu[0]; ++b) {
        int count = 0;
        for (int x : mu)
            if (x >= b) ++count;
        out.push_back(count);
    }
    return out;
}

struct PolynomialIrrep {
    GLRep rep;
    std::vector<GElement> basis;
    int cols = 0;
};

// The irreducible polynomial module of highest weight mu, realized as the
// cyclic span of the column highest vector inside G(C^m (x) C^{mu_1}).
inline PolynomialIrrep construct_polynomial_irrep(std::vector<int> mu, int m) {
    validate_partition(mu);
    if (static_cast<int>(mu.size()) > m)
        throw NotPolynomial("partition has more parts than m");
    mu.resize(m, 0);
    if (mu[0] == 0) {
        PolynomialIrrep out{GLRep(m, 1), {g_unit()}, 0};
        return out;
    }

    int n = mu[0];
    GAlg alg(m, n);
    std::vector<int> conj = conjugate_partition(mu);
    Mask hv = 0;
    for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= conj[j - 1]; ++a) hv |= Mask(1) << alg.bit(a, j);

    auto to_row = [&](const GElement& g) {
        RowReducer::SparseRow row;
        for (const auto& [mask, c] : g) row[static_cast<int>(mask)] = c;
        return row;
    };

    std::vector<GElement> basis{GElement{{hv, Rational(1)}}};
    RowReducer rr(static_cast<int>(alg.dim_mask()));
    rr.add_row(to_row(basis[0]));
    for (std::size_t next = 0; next < basis.size(); ++next) {
        GElement current = basis[next];
        for (int b = 2; b <= m; ++b)
            for (int a = 1; a < b; ++a) {
                GElement w = c_apply(gamma(alg, b, a), current);
                if (w.empty()) continue;
                std::size_t before = rr.pivot_rows().size();
                rr.add_row(to_row(w));
                if (rr.pivot_rows().size() > before) basis.push_back(std::move(w));
            }
    }

    QMatrix span(static_cast<int>(alg.dim_mask()), static_cast<int>(basis.size()));
    for (std::size_t cidx = 0; cidx < basis.size(); ++cidx)
        for (const auto& [mask, c] : basis[cidx])
            span.set(static_cast<int>(mask), static_cast<int>(cidx), c);

    PolynomialIrrep out{GLRep(m, static_cast<int>(basis.size())), std::move(basis), n};
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            out.rep.set_E(a, b,
                          restrict_to_span(operator_matrix(alg, gamma(alg, a, b)), span));
    return out;
}

inline Rational weyl_dimension(std::vector<int> mu, int m) {
    validate_partition(mu);
    mu.resize(m, 0);
    Rational out(1);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            out *= rat(mu[a - 1] - mu[b - 1] + b - a, b - a);
    return out;
}

// gl_m-weight of a homogeneous element of G(C^m (x) C^n): the per-row bit
// counts of any of its monomials.
inline std::vector<int> gelement_weight(const GAlg& alg, const GElement& g) {
    if (g.empty()) throw IndexOutOfRange("gelement_weight: zero element");
    return mask_row_counts(alg, g.begin()->first);
}

// Multiplicity of the highest weight lambda in L_mu (x) G(C^m (x) C^n):
// the joint kernel of the raising operators on the lambda-weight space.
inline int hom_multiplicity(std::vector<int> lambda, std::vector<int> mu, int m, int n) {
    validate_partition(lambda);
    validate_partition(mu);
    if (static_cast<int>(lambda.size()) > m || static_cast<int>(mu.size()) > m)
        throw NotPolynomial("partition has more parts than m");
    lambda.resize(m, 0);
    mu.resize(m, 0);

    PolynomialIrrep L = construct_polynomial_irrep(mu, m);
    GAlg lalg(m, L.cols == 0 ? 1 : L.cols);
    GAlg alg(m, n);
    int dimg = static_cast<int>(alg.dim_mask());

    std::vector<std::vector<int>> lweights;
    for (const auto& b : L.basis)
        lweights.push_back(L.cols == 0 ? std::vector<int>(m, 0) : gelement_weight(lalg, b));

    std::vector<int> sector;
    std::vector<int> unknown(L.rep.dim * dimg, -1);
    for (int li = 0; li < L.rep.dim; ++li)
        for (Mask g = 0; g < alg.dim_mask(); ++g) {
            std::vector<int> wt = mask_row_counts(alg, g);
            bool match = true;
            for (int a = 0; a < m; ++a)
                if (lweights[li][a] + wt[a] != lambda[a]) {
                    match = false;
                    break;
                }
            if (match) {
                unknown[li * dimg + static_cast<int>(g)] =
                    static_cast<int>(sector.size());
                sector.push_back(li * dimg + static_cast<int>(g));
            }
        }
    if (sector.empty()) return 0;

    RowReducer rr(static_cast<int>(sector.size()));
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            QMatrix raise = qm_add(kron(L.rep.E(a, b), qm_identity(dimg)),
                                   kron(qm_identity(L.rep.dim),
                                        operator_matrix(alg, gamma(alg, a, b))));
            std::map<int, RowReducer::SparseRow> rows;
            for (const auto& [rc, val] : raise.entries) {
                int u = unknown[rc.second];
                if (u >= 0) rows[rc.first][u] = val;
            }
            for (auto& [row, data] : rows) rr.add_row(std::move(data));
        }
    return static_cast<int>(sector.size() - rr.pivot_rows().size());
}

// Wedge embedding of the degree-N block of V (x) G(C^m (x) C^n) into
// V (x) (C^m)^{(x)N} (x) (C^n)^{(x)N}: a monomial with bits z_1 < ... < z_N
// maps to the signed sum over orderings of its (row, column) pairs.
inline QMatrix wedge_embedding(const GLRep& v, int n, int N,
                               const std::vector<Mask>& masks) {
    int m = v.k;
    GAlg alg(m, n);
    int mlegs = 1, nlegs = 1;
    for (int t = 0; t < N; ++t) {
        mlegs *= m;
        nlegs *= n;
    }
    QMatrix u(v.dim * mlegs * nlegs, v.dim * static_cast<int>(masks.size()));
    for (int vi = 0; vi < v.dim; ++vi)
        for (std::size_t c = 0; c < masks.size(); ++c) {
            std::vector<int> bits = mask_bits(masks[c]);
            int col = vi * static_cast<int>(masks.size()) + static_cast<int>(c);
            for (const auto& sigma : all_permutations(N)) {
                int adig = 0, idig = 0;
                for (int t = 1; t <= N; ++t) {
                    int z = bits[sigma[t - 1] - 1];
                    adig = adig * m + (alg.row_of(z) - 1);
                    idig = idig * n + (alg.col_of(z) - 1);
                }
                int row = (vi * mlegs + adig) * nlegs + idig;
                u.set(row, col, u.get(row, col) + rat(perm_sign(sigma)));
            }
        }
    return u;
}

// The degree-N block of V (x) G(C^m (x) C^n) carries two actions: e_action
// restricted to the block, and the raw skew functor operators on the wedge
// embedding's image. The embedding must be projector-fixed, injective, and
// intertwine the two for every coefficient up to smax.
inline CheckResult check_dast(const GLRep& v, int n, int N, int smax) {
    int m = v.k;
    GAlg alg(m, n);
    if (N < 1 || N > m * n)
        throw InvalidDegree("check_dast: need 1 <= N <= m*n");
    int dimg = static_cast<int>(alg.dim_mask());
    std::vector<Mask> masks;
    for (Mask g = 0; g < alg.dim_mask(); ++g)
        if (std::popcount(g) == N) masks.push_back(g);

    HeckeModule w = cherednik(v, m, N);
    QMatrix u = wedge_embedding(v, n, N, masks);
    if (!(qm_mul(detail::drinfeld_projector(w, n, true), u) == u))
        return check_fail("embedding is not fixed by the skew projector at N=" +
                          std::to_string(N));
    if (column_space_basis(u).cols != u.cols)
        return check_fail("embedding columns are dependent at N=" + std::to_string(N));
    if (skew_drinfeld(w, n, 1).dim != u.cols)
        return check_fail("block dimension differs from the skew invariants at N=" +
                          std::to_string(N));

    int nlegs = 1;
    for (int t = 0; t < N; ++t) nlegs *= n;
    auto block_of = [&](const QMatrix& full) {
        int d = v.dim * static_cast<int>(masks.size());
        QMatrix out(d, d);
        for (int vr = 0; vr < v.dim; ++vr)
            for (int vc = 0; vc < v.dim; ++vc)
                for (std::size_t r = 0; r < masks.size(); ++r)
                    for (std::size_t c = 0; c < masks.size(); ++c) {
                        Rational val = full.get(vr * dimg + static_cast<int>(masks[r]),
                                                vc * dimg + static_cast<int>(masks[c]));
                        if (val != 0)
                            out.set(vr * static_cast<int>(masks.size()) +
                                        static_cast<int>(r),
                                    vc * static_cast<int>(masks.size()) +
                                        static_cast<int>(c),
                                    val);
                    }
        return out;
    };
    for (int s = 0; s <= smax; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                QMatrix raw(w.dim * nlegs, w.dim * nlegs);
                for (int p = 1; p <= N; ++p)
                    raw = qm_add(raw, kron(qm_pow(w.y[p - 1], s),
                                           detail::leg_op(n, N, p,
                                                          detail::unit_matrix(n, i, j))));
                QMatrix block = block_of(e_action(v, n, s, i, j));
                if (!(qm_mul(raw, u) == qm_mul(u, block)))
                    return check_fail("actions differ at N=" + std::to_string(N) +
                                      " s=" + std::to_string(s) + " i=" +
                                      std::to_string(i) + " j=" + std::to_string(j));
            }
    return check_pass();
}

namespace detail {

inline void all_partitions_into(int length, int cap, std::vector<int>& prefix,
                                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    int high = prefix.empty() ? cap : prefix.back();
    for (int v = high; v >= 0; --v) {
        prefix.push_back(v);
        all_partitions_into(length, cap, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int length, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    all_partitions_into(length, cap, prefix, out);
    return out;
}

}  // namespace detail

// The multiplicity of L_lambda in L_mu (x) G(C^m (x) C^n) is nonzero exactly
// when every label gap lambda_a - mu_a lies in [0, n].
inline CheckResult check_hom_criterion(int m, int n, int label_cap) {
    auto parts = detail::all_partitions(m, label_cap);
    for (const auto& mu : parts)
        for (const auto& lambda : parts) {
            bool expect = true;
            for (int a = 0; a < m; ++a) {
                int gap = lambda[a] - mu[a];
                if (gap < 0 || gap > n) {
                    expect = false;
                    break;
                }
            }
            int got = hom_multiplicity(lambda, mu, m, n);
            if ((got != 0) != expect) {
                std::string diag = "multiplicity ";
                diag += expect ? "vanishes" : "is nonzero";
                diag += " unexpectedly at lambda=(";
                for (int a = 0; a < m; ++a)
                    diag += (a ? "," : "") + std::to_string(lambda[a]);
                diag += ") mu=(";
                for (int a = 0; a < m; ++a) diag += (a ? "," : "") + std::to_string(mu[a]);
                diag += ")";
                return check_fail(diag);
            }
        }
    return check_pass();
}

// For m = 1 the multiplicity is the binomial coefficient C(n, lambda - mu).
inline CheckResult check_hom_binomial(int n, int label_cap) {
    for (int mu = 0; mu <= label_cap; ++mu)
        for (int lambda = 0; lambda <= label_cap + n + 1; ++lambda) {
            Rational expect(0);
            if (lambda >= mu && lambda - mu <= n)
                expect = Rational(binom(n, lambda - mu));
            if (Rational(hom_multiplicity({lambda}, {mu}, 1, n)) != expect)
                return check_fail("multiplicity differs from C(" + std::to_string(n) +
                                  ", " + std::to_string(lambda - mu) + ") at lambda=" +
                                  std::to_string(lambda) + " mu=" + std::to_string(mu));
        }
    return check_pass();
}

}  // namespace ymick
