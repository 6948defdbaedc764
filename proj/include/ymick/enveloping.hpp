#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/error.hpp"
#include "ymick/permutation.hpp"
#include "ymick/rational.hpp"
#include "ymick/series.hpp"

namespace ymick {

// PBW position of E_ab inside U(gl_k): lowering generators (a > b) come
// first, ordered lexicographically by (a, b), then the Cartan generators
// E_11..E_kk, then the raising generators (a < b) lexicographically.
inline int pbw_pos(int k, int a, int b) {
    if (a < 1 || a > k || b < 1 || b > k)
        throw IndexOutOfRange("pbw_pos: generator outside 1..k");
    if (a > b) return (a - 1) * (a - 2) / 2 + (b - 1);
    int nl = k * (k - 1) / 2;
    if (a == b) return nl + (a - 1);
    return nl + k + (a - 1) * k - a * (a - 1) / 2 + (b - a - 1);
}

inline std::pair<int, int> pbw_gen(int k, int pos) {
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            if (pbw_pos(k, a, b) == pos) return {a, b};
    throw IndexOutOfRange("pbw_gen: position outside 0..k*k-1");
}

// Exponent vector over all k*k generators, indexed by PBW position.
using UMonomial = std::vector<unsigned char>;

struct UElement {
    int k = 0;
    std::map<UMonomial, Rational> terms;

    explicit UElement(int k_) : k(k_) {
        if (k_ < 1) throw DimensionMismatch("UElement: need k >= 1");
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const UElement& other) const {
        return k == other.k && terms == other.terms;
    }
};

inline void u_acc(UElement& u, const UMonomial& mono, const Rational& v) {
    if (v == 0) return;
    auto it = u.terms.find(mono);
    if (it == u.terms.end()) {
        u.terms[mono] = v;
    } else {
        it->second += v;
        if (it->second == 0) u.terms.erase(it);
    }
}

inline UElement u_zero(int k) { return UElement(k); }

inline UElement u_one(int k) {
    UElement u(k);
    u.terms[UMonomial(k * k, 0)] = 1;
    return u;
}

inline UElement u_gen(int k, int a, int b) {
    UElement u(k);
    UMonomial mono(k * k, 0);
    mono[pbw_pos(k, a, b)] = 1;
    u.terms[std::move(mono)] = 1;
    return u;
}

inline UElement u_add(const UElement& x, const UElement& y) {
    if (x.k != y.k) throw DimensionMismatch("u_add: mixed algebras");
    UElement out = x;
    for (const auto& [mono, v] : y.terms) u_acc(out, mono, v);
    return out;
}

inline UElement u_scale(const UElement& x, const Rational& s) {
    UElement out(x.k);
    if (s == 0) return out;
    for (const auto& [mono, v] : x.terms) out.terms[mono] = v * s;
    return out;
}

inline UElement u_sub(const UElement& x, const UElement& y) {
    return u_add(x, u_scale(y, Rational(-1)));
}

// A word is a product of generators read left to right.
using UWord = std::vector<std::pair<int, int>>;

namespace detail {

inline void nf_word_into(int k, UWord word, Rational coeff, UElement& out) {
    std::vector<std::pair<UWord, Rational>> stack;
    stack.emplace_back(std::move(word), std::move(coeff));
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            auto [a, b] = w[i];
            auto [cc, d] = w[i + 1];
            if (pbw_pos(k, a, b) <= pbw_pos(k, cc, d)) continue;
            rewritten = true;
            // E_ab E_cd = E_cd E_ab + delta_bc E_ad - delta_da E_cb
            if (b == cc) {
                UWord t(w.begin(), w.begin() + i);
                t.emplace_back(a, d);
                t.insert(t.end(), w.begin() + i + 2, w.end());
                stack.emplace_back(std::move(t), c);
            }
            if (d == a) {
                UWord t(w.begin(), w.begin() + i);
                t.emplace_back(cc, b);
                t.insert(t.end(), w.begin() + i + 2, w.end());
                stack.emplace_back(std::move(t), -c);
            }
            std::swap(w[i], w[i + 1]);
            stack.emplace_back(std::move(w), c);
            break;
        }
        if (rewritten) continue;
        UMonomial mono(k * k, 0);
        for (const auto& [a, b] : w) ++mono[pbw_pos(k, a, b)];
        u_acc(out, mono, c);
    }
}

inline UWord word_of_monomial(int k, const UMonomial& mono) {
    UWord w;
    for (int pos = 0; pos < k * k; ++pos)
        if (mono[pos] > 0) {
            auto [a, b] = pbw_gen(k, pos);
            for (int e = 0; e < mono[pos]; ++e) w.emplace_back(a, b);
        }
    return w;
}

// Products of basis monomials recur constantly in series work, so they are
// cached; the cache is per-thread and append-only.
inline const UElement& monomial_product(int k, const UMonomial& ea, const UMonomial& eb) {
    thread_local std::map<std::tuple<int, UMonomial, UMonomial>, UElement> memo;
    auto key = std::make_tuple(k, ea, eb);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    UWord w = word_of_monomial(k, ea);
    UWord wb = word_of_monomial(k, eb);
    w.insert(w.end(), wb.begin(), wb.end());
    UElement prod(k);
    nf_word_into(k, std::move(w), Rational(1), prod);
    return memo.emplace(std::move(key), std::move(prod)).first->second;
}

}  // namespace detail

inline UElement u_normal_form(int k, const UWord& word, const Rational& coeff) {
    UElement out(k);
    detail::nf_word_into(k, word, coeff, out);
    return out;
}

inline UElement u_mul(const UElement& x, const UElement& y) {
    if (x.k != y.k) throw DimensionMismatch("u_mul: mixed algebras");
    UElement out(x.k);
    for (const auto& [ma, ca] : x.terms)
        for (const auto& [mb, cb] : y.terms) {
            const UElement& prod = detail::monomial_product(x.k, ma, mb);
            Rational f = ca * cb;
            for (const auto& [mono, v] : prod.terms) u_acc(out, mono, v * f);
        }
    return out;
}

inline UElement u_commutator(const UElement& x, const UElement& y) {
    return u_sub(u_mul(x, y), u_mul(y, x));
}

inline UElement ring_add(const UElement& a, const UElement& b) { return u_add(a, b); }
inline UElement ring_mul(const UElement& a, const UElement& b) { return u_mul(a, b); }
inline UElement ring_neg(const UElement& a) { return u_scale(a, Rational(-1)); }
inline UElement ring_scale(const UElement& a, const Rational& s) { return u_scale(a, s); }
inline UElement ring_one(const UElement& a) { return u_one(a.k); }
inline UElement ring_inverse(const UElement& a) {
    if (a.terms.size() == 1) {
        auto it = a.terms.begin();
        if (it->first == UMonomial(a.k * a.k, 0)) {
            UElement out(a.k);
            out.terms[it->first] = Rational(1) / it->second;
            return out;
        }
    }
    throw NonInvertibleLeadingTerm("ring_inverse: UElement is not a nonzero scalar");
}

// Highest-weight cyclic module M_mu: terms are exponent vectors over the
// lowering generators only, each standing for that monomial applied to 1_mu.
struct VermaVector {
    Weight mu;
    std::map<UMonomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    bool operator==(const VermaVector& other) const {
        return mu == other.mu && terms == other.terms;
    }
};

inline void v_acc(VermaVector& v, const UMonomial& mono, const Rational& c) {
    if (c == 0) return;
    auto it = v.terms.find(mono);
    if (it == v.terms.end()) {
        v.terms[mono] = c;
    } else {
        it->second += c;
        if (it->second == 0) v.terms.erase(it);
    }
}

inline VermaVector verma_unit(const Weight& mu) {
    int k = static_cast<int>(mu.size());
    VermaVector v{mu, {}};
    v.terms[UMonomial(k * (k - 1) / 2, 0)] = 1;
    return v;
}

// Projects a normal-form element applied to 1_mu: raising generators kill,
// Cartan generators evaluate at mu, lowering monomials index the basis.
inline VermaVector verma_evaluate(const Weight& mu, const UElement& u) {
    int k = static_cast<int>(mu.size());
    if (u.k != k) throw DimensionMismatch("verma_evaluate: weight length is not k");
    int nl = k * (k - 1) / 2;
    VermaVector out{mu, {}};
    for (const auto& [mono, c] : u.terms) {
        bool killed = false;
        for (int pos = nl + k; pos < k * k; ++pos)
            if (mono[pos] > 0) {
                killed = true;
                break;
            }
        if (killed) continue;
        Rational f = c;
        for (int a = 1; a <= k; ++a)
            for (int e = 0; e < mono[nl + a - 1]; ++e) f *= mu[a - 1];
        v_acc(out, UMonomial(mono.begin(), mono.begin() + nl), f);
    }
    return out;
}

inline VermaVector verma_apply_element(const UElement& u, const VermaVector& v) {
    int k = static_cast<int>(v.mu.size());
    if (u.k != k) throw DimensionMismatch("verma_apply_element: mixed algebras");
    int nl = k * (k - 1) / 2;
    VermaVector out{v.mu, {}};
    for (const auto& [low, cv] : v.terms) {
        UMonomial lifted(k * k, 0);
        for (int pos = 0; pos < nl; ++pos) lifted[pos] = low[pos];
        for (const auto& [mu_mono, cu] : u.terms) {
            const UElement& prod = detail::monomial_product(k, mu_mono, lifted);
            VermaVector piece = verma_evaluate(v.mu, prod);
            Rational f = cu * cv;
            for (const auto& [mono, c] : piece.terms) v_acc(out, mono, c * f);
        }
    }
    return out;
}

inline VermaVector verma_apply(int a, int b, const VermaVector& v) {
    int k = static_cast<int>(v.mu.size());
    return verma_apply_element(u_gen(k, a, b), v);
}

// The shifted Weyl action sigma o mu = sigma(mu + rho) - rho with
// rho = (0, -1, ..., 1-m).
inline Weight shifted_action(const Perm& sigma, const Weight& mu) {
    int m = static_cast<int>(mu.size());
    if (static_cast<int>(sigma.size()) != m)
        throw DimensionMismatch("shifted_action: lengths differ");
    Weight shifted(m);
    for (int a = 1; a <= m; ++a) shifted[a - 1] = mu[a - 1] - rat(a - 1);
    Weight permuted = perm_apply_labels(sigma, shifted);
    for (int a = 1; a <= m; ++a) permuted[a - 1] += rat(a - 1);
    return permuted;
}

inline bool is_generic(const Weight& mu) {
    for (std::size_t a = 0; a < mu.size(); ++a)
        for (std::size_t b = a + 1; b < mu.size(); ++b)
            if (is_integer(mu[a] - mu[b])) return false;
    return true;
}

// X(u) = (u - E')^{-1} as a truncated series with coefficients in U(gl_k),
// where E' is the m x m matrix with (a,b) entry E_ba. The top-left corner
// m = k is the usual case; k > m embeds the corner into a larger algebra.
inline TruncatedSeries<RMatrix<UElement>> x_series_in(int k, int m, int S) {
    if (S < 1) throw IndexOutOfRange("x_series: need S >= 1");
    if (m < 1 || m > k) throw DimensionMismatch("x_series: need 1 <= m <= k");
    std::vector<UElement> id_entries, ep_entries;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            id_entries.push_back(a == b ? u_one(k) : u_zero(k));
            ep_entries.push_back(u_gen(k, b, a));
        }
    RMatrix<UElement> one(m, m, std::move(id_entries));
    RMatrix<UElement> eprime(m, m, std::move(ep_entries));
    auto g = series_inverse(series_make<RMatrix<UElement>>(S - 1, {one, ring_neg(eprime)}));
    std::vector<RMatrix<UElement>> c{ring_scale(one, Rational(0))};
    for (int s = 1; s <= S; ++s) c.push_back(g.at(s - 1));
    return TruncatedSeries<RMatrix<UElement>>{S, std::move(c)};
}

inline TruncatedSeries<RMatrix<UElement>> x_series(int m, int S) {
    return x_series_in(m, m, S);
}

inline TruncatedSeries<UElement> z_series_in(int k, int m, int S) {
    auto x = x_series_in(k, m, S);
    std::vector<UElement> c;
    for (int s = 0; s <= S; ++s) {
        UElement t = u_zero(k);
        for (int a = 0; a < m; ++a) t = u_add(t, x.at(s).at(a, a));
        c.push_back(std::move(t));
    }
    return TruncatedSeries<UElement>{S, std::move(c)};
}

inline TruncatedSeries<UElement> z_series(int m, int S) {
    return z_series_in(m, m, S);
}

// Sum over b of E_{m+d,b} X_ab(u) equals sum over b of X_ab(u) E_{m+d,b}
// times (1 + Z(u)), inside U(gl_{m+l}) coefficient by coefficient.
inline CheckResult check_lemma2_entry(int m, int l, int a, int d, int S) {
    int k = m + l;
    auto x = x_series_in(k, m, S);
    auto z = z_series_in(k, m, S);
    auto one_plus_z = series_add(series_make<UElement>(S, {u_one(k)}), z);
    TruncatedSeries<UElement> lhs = series_make<UElement>(S, {u_zero(k)});
    TruncatedSeries<UElement> rhs_sum = series_make<UElement>(S, {u_zero(k)});
    for (int b = 1; b <= m; ++b) {
        auto xab = series_entry(x, a - 1, b - 1);
        auto e = series_make<UElement>(S, {u_gen(k, m + d, b)});
        lhs = series_add(lhs, series_mul(e, xab));
        rhs_sum = series_add(rhs_sum, series_mul(xab, e));
    }
    auto rhs = series_mul(rhs_sum, one_plus_z);
    for (int s = 0; s <= S; ++s)
        if (!(lhs.at(s) == rhs.at(s)))
            return check_fail("coefficient of u^-" + std::to_string(s) + " differs at a=" +
                              std::to_string(a) + " d=" + std::to_string(d));
    return check_pass();
}

inline CheckResult check_lemma2(int m, int l, int S) {
    for (int a = 1; a <= m; ++a)
        for (int d = 1; d <= l; ++d) {
            CheckResult r = check_lemma2_entry(m, l, a, d, S);
            if (!r.ok) return r;
        }
    return check_pass();
}

// The straightening rules reproduce the bracket table
// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on all generator pairs.
inline CheckResult check_pbw_commutators(int k) {
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int c = 1; c <= k; ++c)
                for (int d = 1; d <= k; ++d) {
                    UElement lhs = u_commutator(u_gen(k, a, b), u_gen(k, c, d));
                    UElement rhs = u_zero(k);
                    if (b == c) rhs = u_add(rhs, u_gen(k, a, d));
                    if (d == a) rhs = u_sub(rhs, u_gen(k, c, b));
                    if (!(lhs == rhs))
                        return check_fail("[E_" + std::to_string(a) + std::to_string(b) +
                                          ", E_" + std::to_string(c) + std::to_string(d) +
                                          "] straightens incorrectly");
                }
    return check_pass();
}

// Associativity of normal-form multiplication on generator triples.
inline CheckResult check_pbw_associativity(int k) {
    std::vector<UElement> gens;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) gens.push_back(u_gen(k, a, b));
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = 0; y < gens.size(); ++y)
            for (std::size_t z = 0; z < gens.size(); ++z)
                if (!(u_mul(u_mul(gens[x], gens[y]), gens[z]) ==
                      u_mul(gens[x], u_mul(gens[y], gens[z]))))
                    return check_fail("associativity fails on generator triple " +
                                      std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(z));
    return check_pass();
}

// The highest-weight module really is a representation: commutators of
// generators act as the bracket on the unit vector and on each once-lowered
// vector.
inline CheckResult check_verma_representation(const Weight& mu) {
    int k = static_cast<int>(mu.size());
    std::vector<VermaVector> probes{verma_unit(mu)};
    for (int a = 2; a <= k; ++a)
        for (int b = 1; b < a; ++b) probes.push_back(verma_apply(a, b, verma_unit(mu)));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int c = 1; c <= k; ++c)
                for (int d = 1; d <= k; ++d) {
                    UElement ab = u_gen(k, a, b), cd = u_gen(k, c, d);
                    for (const auto& v : probes) {
                        VermaVector lhs = verma_apply_element(ab, verma_apply_element(cd, v));
                        VermaVector swapped =
                            verma_apply_element(cd, verma_apply_element(ab, v));
                        for (const auto& [mono, val] : swapped.terms)
                            v_acc(lhs, mono, -val);
                        VermaVector rhs = verma_apply_element(u_commutator(ab, cd), v);
                        if (!(lhs == rhs))
                            return check_fail("bracket action differs at E_" +
                                              std::to_string(a) + std::to_string(b) +
                                              ", E_" + std::to_string(c) +
                                              std::to_string(d));
                    }
                }
    return check_pass();
}

}  // namespace ymick
