#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/error.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"
#include "ymick/series.hpp"

namespace ymick {

using Mask = std::uint64_t;

// The Grassmann algebra on generators x_{ai}, 1 <= a <= m, 1 <= i <= n.
// Generator x_{ai} occupies bit (a-1)*n + (i-1); a monomial is the product
// of its generators in increasing bit order, which fixes all signs.
struct GAlg {
    int m = 0;
    int n = 0;

    GAlg(int m_, int n_) : m(m_), n(n_) {
        if (m < 0 || n < 0 || m * n > 62)
            throw DimensionMismatch("GAlg: need 0 <= m*n <= 62");
    }

    int bits() const { return m * n; }
    Mask dim_mask() const { return Mask(1) << bits(); }

    int bit(int a, int i) const {
        if (a < 1 || a > m || i < 1 || i > n)
            throw IndexOutOfRange("GAlg: generator (" + std::to_string(a) + "," +
                                  std::to_string(i) + ") outside " +
                                  std::to_string(m) + "x" + std::to_string(n));
        return (a - 1) * n + (i - 1);
    }

    int row_of(int bit) const { return bit / n + 1; }
    int col_of(int bit) const { return bit % n + 1; }
};

using GElement = std::map<Mask, Rational>;

inline void g_acc(GElement& g, Mask mask, const Rational& v) {
    if (v == 0) return;
    auto it = g.find(mask);
    if (it == g.end()) {
        g[mask] = v;
    } else {
        it->second += v;
        if (it->second == 0) g.erase(it);
    }
}

inline GElement g_unit() { return GElement{{Mask(0), Rational(1)}}; }

inline GElement g_add(const GElement& a, const GElement& b) {
    GElement out = a;
    for (const auto& [mask, v] : b) g_acc(out, mask, v);
    return out;
}

inline GElement g_scale(const GElement& a, const Rational& s) {
    GElement out;
    if (s == 0) return out;
    for (const auto& [mask, v] : a) out[mask] = v * s;
    return out;
}

inline int sign_below(Mask mask, int bit) {
    Mask lower = mask & ((Mask(1) << bit) - 1);
    return (std::popcount(lower) % 2 == 0) ? 1 : -1;
}

// Left multiplication by the generator at the given bit.
inline GElement g_mul_bit(int bit, const GElement& g) {
    GElement out;
    for (const auto& [mask, v] : g) {
        if (mask & (Mask(1) << bit)) continue;
        g_acc(out, mask | (Mask(1) << bit), v * sign_below(mask, bit));
    }
    return out;
}

// Left derivation with respect to the generator at the given bit.
inline GElement g_der_bit(int bit, const GElement& g) {
    GElement out;
    for (const auto& [mask, v] : g) {
        if (!(mask & (Mask(1) << bit))) continue;
        g_acc(out, mask & ~(Mask(1) << bit), v * sign_below(mask, bit));
    }
    return out;
}

inline GElement g_multiply(const GAlg& alg, int a, int i, const GElement& g) {
    return g_mul_bit(alg.bit(a, i), g);
}

inline GElement g_derive(const GAlg& alg, int a, int i, const GElement& g) {
    return g_der_bit(alg.bit(a, i), g);
}

inline std::vector<int> mask_bits(Mask mask) {
    std::vector<int> bits;
    for (int b = 0; mask; ++b, mask >>= 1)
        if (mask & 1) bits.push_back(b);
    return bits;
}

// Number of generators in each row of a monomial (its gl_m-weight).
inline std::vector<int> mask_row_counts(const GAlg& alg, Mask mask) {
    std::vector<int> counts(alg.m, 0);
    for (int b : mask_bits(mask)) ++counts[alg.row_of(b) - 1];
    return counts;
}

// Normal-ordered operator on the Grassmann algebra: the term (A, B) is
// x_A d_B with creation bits of A ascending on the left and annihilation
// bits of B ascending on the right.
struct COperator {
    int m = 0;
    int n = 0;
    std::map<std::pair<Mask, Mask>, Rational> terms;

    COperator(int m_, int n_) : m(m_), n(n_) {
        GAlg(m_, n_);
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const COperator& other) const {
        return m == other.m && n == other.n && terms == other.terms;
    }
};

inline void c_acc(COperator& p, Mask a, Mask b, const Rational& v) {
    if (v == 0) return;
    auto it = p.terms.find({a, b});
    if (it == p.terms.end()) {
        p.terms[{a, b}] = v;
    } else {
        it->second += v;
        if (it->second == 0) p.terms.erase(it);
    }
}

inline COperator c_zero(const GAlg& alg) { return COperator(alg.m, alg.n); }

inline COperator c_identity(const GAlg& alg) {
    COperator p(alg.m, alg.n);
    p.terms[{Mask(0), Mask(0)}] = 1;
    return p;
}

inline COperator c_x(const GAlg& alg, int a, int i) {
    COperator p(alg.m, alg.n);
    p.terms[{Mask(1) << alg.bit(a, i), Mask(0)}] = 1;
    return p;
}

inline COperator c_d(const GAlg& alg, int a, int i) {
    COperator p(alg.m, alg.n);
    p.terms[{Mask(0), Mask(1) << alg.bit(a, i)}] = 1;
    return p;
}

inline COperator c_add(const COperator& p, const COperator& q) {
    if (p.m != q.m || p.n != q.n) throw DimensionMismatch("c_add: mixed algebras");
    COperator out = p;
    for (const auto& [ab, v] : q.terms) c_acc(out, ab.first, ab.second, v);
    return out;
}

inline COperator c_scale(const COperator& p, const Rational& s) {
    COperator out(p.m, p.n);
    if (s == 0) return out;
    for (const auto& [ab, v] : p.terms) out.terms[ab] = v * s;
    return out;
}

inline COperator c_sub(const COperator& p, const COperator& q) {
    return c_add(p, c_scale(q, Rational(-1)));
}

inline GElement c_apply(const COperator& p, const GElement& g) {
    GElement out;
    for (const auto& [ab, coeff] : p.terms) {
        auto abits = mask_bits(ab.first);
        auto bbits = mask_bits(ab.second);
        for (const auto& [mask, v] : g) {
            Mask cur = mask;
            Rational c = v * coeff;
            bool dead = false;
            for (auto it = bbits.rbegin(); it != bbits.rend(); ++it) {
                if (!(cur & (Mask(1) << *it))) {
                    dead = true;
                    break;
                }
                c *= sign_below(cur, *it);
                cur &= ~(Mask(1) << *it);
            }
            if (dead) continue;
            for (auto it = abits.rbegin(); it != abits.rend(); ++it) {
                if (cur & (Mask(1) << *it)) {
                    dead = true;
                    break;
                }
                c *= sign_below(cur, *it);
                cur |= Mask(1) << *it;
            }
            if (!dead) g_acc(out, cur, c);
        }
    }
    return out;
}

namespace detail {

// A Clifford word letter: creation (is_x) or annihilation at a bit.
using CLetter = std::pair<bool, int>;
using CWord = std::vector<CLetter>;

inline void normal_order(CWord word, Rational coeff, COperator& out) {
    std::vector<std::pair<CWord, Rational>> stack;
    stack.emplace_back(std::move(word), std::move(coeff));
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const auto& [lx, lb] = w[i];
            const auto& [rx, rb] = w[i + 1];
            if (lx == rx) {
                if (lb < rb) continue;
                rewritten = true;
                if (lb == rb) break;
                std::swap(w[i], w[i + 1]);
                stack.emplace_back(std::move(w), -c);
                break;
            }
            if (lx) continue;
            rewritten = true;
            if (lb == rb) {
                CWord dropped;
                dropped.reserve(w.size() - 2);
                dropped.insert(dropped.end(), w.begin(), w.begin() + i);
                dropped.insert(dropped.end(), w.begin() + i + 2, w.end());
                stack.emplace_back(std::move(dropped), c);
            }
            std::swap(w[i], w[i + 1]);
            stack.emplace_back(std::move(w), -c);
            break;
        }
        if (rewritten) continue;
        Mask a = 0, b = 0;
        for (const auto& [isx, bit] : w)
            (isx ? a : b) |= Mask(1) << bit;
        c_acc(out, a, b, c);
    }
}

inline CWord term_word(Mask a, Mask b) {
    CWord w;
    for (int bit : mask_bits(a)) w.emplace_back(true, bit);
    for (int bit : mask_bits(b)) w.emplace_back(false, bit);
    return w;
}

}  // namespace detail

inline COperator c_compose(const COperator& p, const COperator& q) {
    if (p.m != q.m || p.n != q.n)
        throw DimensionMismatch("c_compose: mixed algebras");
    COperator out(p.m, p.n);
    for (const auto& [pab, pv] : p.terms) {
        auto pw = detail::term_word(pab.first, pab.second);
        for (const auto& [qab, qv] : q.terms) {
            auto w = pw;
            auto qw = detail::term_word(qab.first, qab.second);
            w.insert(w.end(), qw.begin(), qw.end());
            detail::normal_order(std::move(w), pv * qv, out);
        }
    }
    return out;
}

inline COperator c_commutator(const COperator& p, const COperator& q) {
    return c_sub(c_compose(p, q), c_compose(q, p));
}

// The gl_m action: gamma(E_ab) = sum_k x_{ak} d_{bk}.
inline COperator gamma(const GAlg& alg, int a, int b) {
    if (a < 1 || a > alg.m || b < 1 || b > alg.m)
        throw IndexOutOfRange("gamma: row index outside 1..m");
    COperator p(alg.m, alg.n);
    for (int k = 1; k <= alg.n; ++k) {
        detail::CWord w{{true, alg.bit(a, k)}, {false, alg.bit(b, k)}};
        detail::normal_order(std::move(w), Rational(1), p);
    }
    return p;
}

// The gl_n action: gln_op(E_ij) = sum_c x_{ci} d_{cj}.
inline COperator gln_op(const GAlg& alg, int i, int j) {
    if (i < 1 || i > alg.n || j < 1 || j > alg.n)
        throw IndexOutOfRange("gln_op: column index outside 1..n");
    COperator p(alg.m, alg.n);
    for (int c = 1; c <= alg.m; ++c) {
        detail::CWord w{{true, alg.bit(c, i)}, {false, alg.bit(c, j)}};
        detail::normal_order(std::move(w), Rational(1), p);
    }
    return p;
}

namespace detail {

// Sorts bits ascending, returning the permutation sign; zero on repeats.
inline int sort_sign(std::vector<int>& bits) {
    int sign = 1;
    for (std::size_t i = 1; i < bits.size(); ++i)
        for (std::size_t j = i; j > 0 && bits[j - 1] >= bits[j]; --j) {
            if (bits[j - 1] == bits[j]) return 0;
            std::swap(bits[j - 1], bits[j]);
            sign = -sign;
        }
    return sign;
}

inline std::pair<Mask, int> relabel_mask(const GAlg& alg, const Perm& sigma, Mask mask) {
    std::vector<int> bits;
    for (int b : mask_bits(mask))
        bits.push_back(alg.bit(sigma[alg.row_of(b) - 1], alg.col_of(b)));
    int sign = sort_sign(bits);
    Mask out = 0;
    for (int b : bits) out |= Mask(1) << b;
    return {out, sign};
}

}  // namespace detail

// Row relabeling x_{ak} -> x_{sigma(a)k}, an algebra automorphism.
inline GElement sym_act(const GAlg& alg, const Perm& sigma, const GElement& g) {
    if (static_cast<int>(sigma.size()) != alg.m)
        throw DimensionMismatch("sym_act: permutation size is not m");
    GElement out;
    for (const auto& [mask, v] : g) {
        auto [nm, sign] = detail::relabel_mask(alg, sigma, mask);
        g_acc(out, nm, v * sign);
    }
    return out;
}

inline COperator sym_act(const GAlg& alg, const Perm& sigma, const COperator& p) {
    if (static_cast<int>(sigma.size()) != alg.m)
        throw DimensionMismatch("sym_act: permutation size is not m");
    COperator out(p.m, p.n);
    for (const auto& [ab, v] : p.terms) {
        auto [na, sa] = detail::relabel_mask(alg, sigma, ab.first);
        auto [nb, sb] = detail::relabel_mask(alg, sigma, ab.second);
        c_acc(out, na, nb, v * sa * sb);
    }
    return out;
}

inline QMatrix operator_matrix(const GAlg& alg, const COperator& p) {
    if (p.m != alg.m || p.n != alg.n)
        throw DimensionMismatch("operator_matrix: mixed algebras");
    int dim = static_cast<int>(alg.dim_mask());
    QMatrix out(dim, dim);
    for (Mask g = 0; g < alg.dim_mask(); ++g) {
        GElement image = c_apply(p, GElement{{g, Rational(1)}});
        for (const auto& [mask, v] : image)
            out.entries[{static_cast<int>(mask), static_cast<int>(g)}] = v;
    }
    return out;
}

struct SplitTerm {
    Mask first = 0;
    Mask second = 0;
    int sign = 1;
};

// Row split of G(C^{m+l} x C^n) into G(C^m x C^n) (x) G(C^l x C^n): rows
// 1..m versus rows m+1..m+l. Row-major bit order keeps both blocks'
// generators in their original relative order, so the sign is always +1.
inline SplitTerm split_reindex_rows(int m, int l, int n, Mask mask) {
    GAlg big(m + l, n);
    Mask topbits = (Mask(1) << (m * n)) - 1;
    SplitTerm t;
    t.first = mask & topbits;
    t.second = mask >> (m * n);
    t.sign = 1;
    return t;
}

// Column split of G(C^m x C^{n+l}) into G(C^m x C^l) (x) G(C^m x C^n): the
// last l columns form the first factor. The sign counts the crossings of
// n-block generators past l-block generators.
inline SplitTerm split_reindex_cols(int m, int n, int l, Mask mask) {
    GAlg big(m, n + l);
    GAlg lalg(m, l), nalg(m, n);
    SplitTerm t;
    int n_seen = 0;
    for (int b : mask_bits(mask)) {
        int a = big.row_of(b), col = big.col_of(b);
        if (col <= n) {
            t.second |= Mask(1) << nalg.bit(a, col);
            ++n_seen;
        } else {
            t.first |= Mask(1) << lalg.bit(a, col - n);
            if (n_seen % 2) t.sign = -t.sign;
        }
    }
    return t;
}

// Matrix of the row-split isomorphism: column index is the big mask, row
// index is firstMask * 2^{ln} + secondMask.
inline QMatrix row_split_matrix(int m, int l, int n) {
    GAlg big(m + l, n);
    int dim = static_cast<int>(big.dim_mask());
    int second_dim = 1 << (l * n);
    QMatrix out(dim, dim);
    for (Mask g = 0; g < big.dim_mask(); ++g) {
        auto t = split_reindex_rows(m, l, n, g);
        out.entries[{static_cast<int>(t.first) * second_dim + static_cast<int>(t.second),
                     static_cast<int>(g)}] = t.sign;
    }
    return out;
}

// Matrix of the column-split isomorphism: column index is the big mask, row
// index is lBlockMask * 2^{mn} + nBlockMask.
inline QMatrix col_split_matrix(int m, int n, int l) {
    GAlg big(m, n + l);
    int dim = static_cast<int>(big.dim_mask());
    int second_dim = 1 << (m * n);
    QMatrix out(dim, dim);
    for (Mask g = 0; g < big.dim_mask(); ++g) {
        auto t = split_reindex_cols(m, n, l, g);
        out.entries[{static_cast<int>(t.first) * second_dim + static_cast<int>(t.second),
                     static_cast<int>(g)}] = t.sign;
    }
    return out;
}

inline COperator ring_one(const COperator& a) {
    COperator out(a.m, a.n);
    out.terms[{Mask(0), Mask(0)}] = 1;
    return out;
}
inline COperator ring_add(const COperator& a, const COperator& b) { return c_add(a, b); }
inline COperator ring_mul(const COperator& a, const COperator& b) { return c_compose(a, b); }
inline COperator ring_neg(const COperator& a) { return c_scale(a, Rational(-1)); }
inline COperator ring_scale(const COperator& a, const Rational& s) { return c_scale(a, s); }
inline COperator ring_inverse(const COperator& a) {
    if (a.terms.size() == 1) {
        auto it = a.terms.begin();
        if (it->first == std::make_pair(Mask(0), Mask(0))) {
            COperator out(a.m, a.n);
            out.terms[{Mask(0), Mask(0)}] = Rational(1) / it->second;
            return out;
        }
    }
    throw NonInvertibleLeadingTerm("ring_inverse: COperator is not a nonzero scalar");
}

// Anticommutators of the generator operators: multiplications pairwise
// anticommute, derivations pairwise anticommute, and a mixed pair
// anticommutes to the unit exactly when the labels agree. Each identity is
// checked in the normal-ordered ring and again on the matrix realization.
inline CheckResult check_clifford(int m, int n) {
    GAlg alg(m, n);
    auto anti = [](const COperator& p, const COperator& q) {
        return c_add(c_compose(p, q), c_compose(q, p));
    };
    auto label = [](int a, int i, int b, int j) {
        return "(" + std::to_string(a) + "," + std::to_string(i) + "), (" +
               std::to_string(b) + "," + std::to_string(j) + ")";
    };
    for (int a = 1; a <= m; ++a)
        for (int i = 1; i <= n; ++i)
            for (int b = 1; b <= m; ++b)
                for (int j = 1; j <= n; ++j) {
                    COperator xa = c_x(alg, a, i), xb = c_x(alg, b, j);
                    COperator da = c_d(alg, a, i), db = c_d(alg, b, j);
                    if (!anti(xa, xb).is_zero())
                        return check_fail("x x anticommutator is nonzero at " +
                                          label(a, i, b, j));
                    if (!anti(da, db).is_zero())
                        return check_fail("d d anticommutator is nonzero at " +
                                          label(a, i, b, j));
                    COperator expect =
                        (a == b && i == j) ? c_identity(alg) : c_zero(alg);
                    if (!(anti(xa, db) == expect))
                        return check_fail("x d anticommutator is wrong at " +
                                          label(a, i, b, j));
                    QMatrix mx = operator_matrix(alg, xa);
                    QMatrix md = operator_matrix(alg, db);
                    if (!(qm_add(qm_mul(mx, md), qm_mul(md, mx)) ==
                          operator_matrix(alg, expect)))
                        return check_fail("matrix realization differs at " +
                                          label(a, i, b, j));
                }
    return check_pass();
}

}  // namespace ymick
