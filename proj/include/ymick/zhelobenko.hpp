#pragma once

#include <string>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/coinvariants.hpp"
#include "ymick/enveloping.hpp"
#include "ymick/error.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"

namespace ymick {

// Weight data for the coinvariant space of M_mu (x) G(C^m (x) C^n).
struct ZContext {
    int m;
    int n;
    Weight mu;

    ZContext(int m_, int n_, Weight mu_) : m(m_), n(n_), mu(std::move(mu_)) {
        if (static_cast<int>(mu.size()) != m)
            throw DimensionMismatch("ZContext: weight length is not m");
        if (!is_generic(mu))
            throw NonGenericWeight("ZContext: weight differences must avoid integers");
    }
};

namespace detail {

// Image of the class of 1_mu (x) monomial under the c-th operator: relabel
// the rows through sigma_c, then sum E_c^s F_c^s over s with the inverted
// Cartan falling factorial evaluated on the component's weight.
inline GElement xi_monomial(const ZContext& ctx, int c, Mask mask) {
    GAlg alg(ctx.m, ctx.n);
    Perm sc = transposition(ctx.m, c, c + 1);
    GElement h = sym_act(alg, sc, GElement{{mask, Rational(1)}});
    Weight mup = shifted_action(sc, ctx.mu);

    Mask hm = h.begin()->first;
    std::vector<int> counts = mask_row_counts(alg, hm);
    Rational kappa =
        mup[c - 1] + rat(counts[c - 1]) - mup[c] - rat(counts[c]);

    COperator ge = gamma(alg, c, c + 1);
    COperator gf = gamma(alg, c + 1, c);
    GElement acc = h;
    GElement fcur = h;
    Rational denom(1);
    for (int s = 1;; ++s) {
        fcur = c_apply(gf, fcur);
        if (fcur.empty()) break;
        Rational factor = kappa - rat(s - 1);
        if (factor == 0)
            throw NonGenericWeight("xi: falling factorial vanishes at step " +
                                   std::to_string(s));
        denom *= rat(s) * factor;
        GElement term = fcur;
        for (int r = 0; r < s && !term.empty(); ++r) term = c_apply(ge, term);
        if (term.empty()) continue;
        acc = g_add(acc, g_scale(term, Rational(1) / denom));
    }
    return acc;
}

}  // namespace detail

// Matrix of the operator from the mu-coinvariants to the (sigma_c o mu)-
// coinvariants, in the canonical monomial bases.
inline QMatrix xi_matrix(const ZContext& ctx, int c) {
    if (c < 1 || c >= ctx.m) throw IndexOutOfRange("xi_matrix: c outside 1..m-1");
    GAlg alg(ctx.m, ctx.n);
    int dim = static_cast<int>(alg.dim_mask());
    QMatrix out(dim, dim);
    for (Mask g = 0; g < alg.dim_mask(); ++g)
        for (const auto& [mask, coeff] : detail::xi_monomial(ctx, c, g))
            out.set(static_cast<int>(mask), static_cast<int>(g), coeff);
    return out;
}

inline CoinvariantVector xi_check(int c, const ZContext& ctx, const CoinvariantVector& v) {
    if (c < 1 || c >= ctx.m) throw IndexOutOfRange("xi_check: c outside 1..m-1");
    CoinvariantVector out;
    for (const auto& [key, coeff] : v.terms)
        for (const auto& [mask, val] : detail::xi_monomial(ctx, c, key.second))
            coinv_acc(out, key.first, mask, coeff * val);
    return out;
}

// Composite operator along a reduced word, rightmost letter first; the
// weight advances through the shifted action after each factor.
inline QMatrix i_sigma_matrix_word(const ZContext& ctx, const std::vector<int>& word) {
    GAlg alg(ctx.m, ctx.n);
    QMatrix out = qm_identity(static_cast<int>(alg.dim_mask()));
    Weight w = ctx.mu;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        ZContext step(ctx.m, ctx.n, w);
        out = qm_mul(xi_matrix(step, *it), out);
        w = shifted_action(transposition(ctx.m, *it, *it + 1), w);
    }
    return out;
}

inline QMatrix i_sigma_matrix(const ZContext& ctx, const Perm& sigma) {
    if (static_cast<int>(sigma.size()) != ctx.m)
        throw DimensionMismatch("i_sigma_matrix: permutation size is not m");
    return i_sigma_matrix_word(ctx, reduced_word(sigma));
}

inline CoinvariantVector i_sigma(const Perm& sigma, const ZContext& ctx,
                                 const CoinvariantVector& v) {
    QMatrix mat = i_sigma_matrix(ctx, sigma);
    CoinvariantVector out;
    for (const auto& [key, coeff] : v.terms)
        for (int row = 0; row < mat.rows; ++row) {
            Rational val = mat.get(row, static_cast<int>(key.second));
            if (val != 0) coinv_acc(out, key.first, Mask(row), coeff * val);
        }
    return out;
}

// The class of 1_mu (x) w_nu with w_nu = prod_a x_{a1} ... x_{a nu_a}.
inline CoinvariantVector v_mu_lambda(const ZContext& ctx, const std::vector<int>& nu) {
    if (static_cast<int>(nu.size()) != ctx.m)
        throw InvalidDegreeSequence("v_mu_lambda: label count is not m");
    GAlg alg(ctx.m, ctx.n);
    Mask mask = 0;
    for (int a = 1; a <= ctx.m; ++a) {
        if (nu[a - 1] < 0 || nu[a - 1] > ctx.n)
            throw InvalidDegreeSequence("v_mu_lambda: label outside 0..n");
        for (int j = 1; j <= nu[a - 1]; ++j) mask |= Mask(1) << alg.bit(a, j);
    }
    CoinvariantVector out;
    coinv_acc(out, 0, mask, Rational(1));
    return out;
}

// The product over inversions of sigma from the closed scalar formula:
// (-1)^{nu_a nu_b} times (lambda_a - lambda_b - a + b)/(mu_a - mu_b - a + b)
// when nu_a < nu_b and 1 otherwise, with lambda = mu + nu.
inline Rational scalar_formula(const Perm& sigma, const Weight& mu,
                               const std::vector<int>& nu) {
    int m = static_cast<int>(mu.size());
    if (static_cast<int>(sigma.size()) != m || static_cast<int>(nu.size()) != m)
        throw DimensionMismatch("scalar_formula: mixed lengths");
    Rational out(1);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (sigma[a - 1] <= sigma[b - 1]) continue;
            if ((nu[a - 1] * nu[b - 1]) % 2 == 1) out = -out;
            if (nu[a - 1] < nu[b - 1]) {
                Rational den = mu[a - 1] - mu[b - 1] - rat(a) + rat(b);
                if (den == 0)
                    throw NonGenericWeight("scalar_formula: weight difference is integral");
                out *= (mu[a - 1] + rat(nu[a - 1]) - mu[b - 1] - rat(nu[b - 1]) -
                        rat(a) + rat(b)) /
                       den;
            }
        }
    return out;
}

// Both sides of sum_{s=0}^{d} prod_{r=1}^{s} (d-r+1)/(-t-r-1) = (t+1)/(t+d+1).
inline Rational falling_factorial_sum(int d, const Rational& t) {
    if (d < 0) throw IndexOutOfRange("falling_factorial_sum: negative depth");
    Rational acc(1);
    Rational term(1);
    for (int s = 1; s <= d; ++s) {
        Rational den = -t - rat(s) - rat(1);
        if (den == 0) throw PoleEncountered("falling_factorial_sum: zero denominator");
        term *= rat(d - s + 1) / den;
        acc += term;
    }
    return acc;
}

inline CheckResult check_falling_factorial(int d, const Rational& t) {
    if (t + rat(d) + rat(1) == 0)
        throw PoleEncountered("check_falling_factorial: right side has a pole");
    Rational lhs = falling_factorial_sum(d, t);
    Rational rhs = (t + rat(1)) / (t + rat(d) + rat(1));
    if (lhs != rhs)
        return check_fail("sum " + rat_str(lhs) + " differs from " + rat_str(rhs) +
                          " at d=" + std::to_string(d) + " t=" + rat_str(t));
    return check_pass();
}

// ---------------------------------------------------------------------------
// Relation checks used by the harness.

inline CheckResult check_zhelobenko_braid(int m, int n, const Weight& mu) {
    auto chain = [&](const std::vector<int>& word) {
        return i_sigma_matrix_word(ZContext(m, n, mu), word);
    };
    for (int c = 1; c + 1 < m; ++c)
        if (!(chain({c, c + 1, c}) == chain({c + 1, c, c + 1})))
            return check_fail("braid relation fails at c=" + std::to_string(c));
    for (int b = 1; b < m; ++b)
        for (int c = b + 2; c < m; ++c)
            if (!(chain({b, c}) == chain({c, b})))
                return check_fail("distant factors fail to commute at b=" +
                                  std::to_string(b) + " c=" + std::to_string(c));
    return check_pass();
}

inline CheckResult check_zhelobenko_words(int m, int n, const Weight& mu,
                                          const Perm& sigma) {
    ZContext ctx(m, n, mu);
    auto words = all_reduced_words(sigma);
    QMatrix first = i_sigma_matrix_word(ctx, words.front());
    for (std::size_t w = 1; w < words.size(); ++w)
        if (!(i_sigma_matrix_word(ctx, words[w]) == first))
            return check_fail("reduced word " + std::to_string(w) +
                              " gives a different composite");
    return check_pass();
}

inline CheckResult check_zhelobenko_intertwine(const Weight& mu, int m, int n, int S) {
    VermaCoinvariants source = verma_coinvariants_module(mu, m, n, S);
    GAlg alg(m, n);
    for (int c = 1; c < m; ++c) {
        ZContext ctx(m, n, mu);
        QMatrix x = xi_matrix(ctx, c);
        Weight mup = shifted_action(transposition(m, c, c + 1), mu);
        VermaCoinvariants target = verma_coinvariants_module(mup, m, n, S);
        for (int s = 1; s <= S; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (!(qm_mul(x, ym_T(source.module, s, i, j)) ==
                          qm_mul(ym_T(target.module, s, i, j), x)))
                        return check_fail("operator fails to intertwine T^(" +
                                          std::to_string(s) + ")_" + std::to_string(i) +
                                          std::to_string(j) + " at c=" + std::to_string(c));
        for (const auto& [rc, val] : x.entries) {
            Weight in(m), outw(m);
            std::vector<int> cin = mask_row_counts(alg, Mask(rc.second));
            std::vector<int> cout = mask_row_counts(alg, Mask(rc.first));
            for (int a = 0; a < m; ++a) {
                in[a] = mu[a] + rat(cin[a]);
                outw[a] = mup[a] + rat(cout[a]);
            }
            if (outw != shifted_action(transposition(m, c, c + 1), in))
                return check_fail("weight sector moves off target at c=" +
                                  std::to_string(c));
        }
    }
    return check_pass();
}

inline CheckResult check_zhelobenko_scalars(const Weight& mu, int m, int n) {
    ZContext ctx(m, n, mu);
    std::vector<int> nu(m, 0);
    for (const Perm& sigma : all_permutations(m)) {
        std::fill(nu.begin(), nu.end(), 0);
        while (true) {
            CoinvariantVector got = i_sigma(sigma, ctx, v_mu_lambda(ctx, nu));
            Rational scalar = scalar_formula(sigma, mu, nu);
            ZContext tctx(m, n, shifted_action(sigma, mu));
            CoinvariantVector expect = v_mu_lambda(tctx, perm_apply_labels(sigma, nu));
            for (auto& [key, val] : expect.terms) val *= scalar;
            if (!(got == expect)) {
                std::string nus;
                for (int x : nu) nus += std::to_string(x);
                return check_fail("scalar mismatch at nu=" + nus);
            }
            int carry = m - 1;
            while (carry >= 0 && nu[carry] == n) nu[carry--] = 0;
            if (carry < 0) break;
            ++nu[carry];
        }
    }
    return check_pass();
}

}  // namespace ymick
