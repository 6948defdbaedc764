#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"

using namespace ymick;

namespace {

GElement monomial(Mask mask) { return GElement{{mask, rat(1)}}; }

GElement random_gelement(std::mt19937_64& rng, const GAlg& alg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    GElement g;
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t)
        g_acc(g, rng() % alg.dim_mask(), rat(coeff(rng)));
    return g;
}

COperator random_coperator(std::mt19937_64& rng, const GAlg& alg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    COperator p(alg.m, alg.n);
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t)
        c_acc(p, rng() % alg.dim_mask(), rng() % alg.dim_mask(), rat(coeff(rng)));
    return p;
}

// Independent crossing-sign oracle for the column split: tag the generators
// of the big monomial in ascending bit order and bubble every l-block tag in
// front of every n-block tag, counting the swaps.
int col_split_sign_oracle(const GAlg& big, int n, Mask mask) {
    std::vector<int> tags;
    for (int b : mask_bits(mask)) tags.push_back(big.col_of(b) <= n ? 1 : 0);
    int sign = 1;
    for (std::size_t i = 1; i < tags.size(); ++i)
        for (std::size_t j = i; j > 0 && tags[j - 1] > tags[j]; --j) {
            std::swap(tags[j - 1], tags[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

TEST_CASE("generator multiplication and derivation") {
    GAlg alg(2, 2);
    Mask x11 = Mask(1) << alg.bit(1, 1);
    Mask x12 = Mask(1) << alg.bit(1, 2);

    REQUIRE(g_multiply(alg, 1, 1, g_unit()) == monomial(x11));
    REQUIRE(g_multiply(alg, 1, 1, monomial(x11)).empty());
    REQUIRE(g_multiply(alg, 1, 2, monomial(x11)) == g_scale(monomial(x11 | x12), rat(-1)));
    REQUIRE(g_multiply(alg, 1, 1, monomial(x12)) == monomial(x11 | x12));

    REQUIRE(g_derive(alg, 1, 1, monomial(x11)) == g_unit());
    REQUIRE(g_derive(alg, 1, 2, monomial(x11 | x12)) == g_scale(monomial(x11), rat(-1)));
    REQUIRE(g_derive(alg, 1, 1, monomial(x11 | x12)) == monomial(x12));
    REQUIRE(g_derive(alg, 1, 1, monomial(x12)).empty());
    REQUIRE(g_derive(alg, 1, 1, g_unit()).empty());

    // Leibniz rule for the left derivation on a product of generators.
    Mask x21 = Mask(1) << alg.bit(2, 1);
    GElement prod = g_multiply(alg, 1, 1, g_multiply(alg, 2, 1, g_unit()));
    REQUIRE(prod == monomial(x11 | x21));
    REQUIRE(g_derive(alg, 2, 1, prod) == g_scale(monomial(x11), rat(-1)));

    REQUIRE_THROWS_AS(alg.bit(3, 1), IndexOutOfRange);
    REQUIRE_THROWS_AS(GAlg(8, 8), DimensionMismatch);
}

TEST_CASE("normal ordering") {
    GAlg alg(2, 2);

    // d x = 1 - x d at a single site.
    COperator dx = c_compose(c_d(alg, 1, 1), c_x(alg, 1, 1));
    COperator expect = c_sub(c_identity(alg), c_compose(c_x(alg, 1, 1), c_d(alg, 1, 1)));
    REQUIRE(dx == expect);

    // x d is already normal ordered.
    COperator xd = c_compose(c_x(alg, 1, 1), c_d(alg, 1, 1));
    REQUIRE(xd.terms.size() == 1);
    REQUIRE(c_compose(xd, xd) == xd);

    // Out-of-order creations pick up the swap sign.
    COperator xx = c_compose(c_x(alg, 1, 2), c_x(alg, 1, 1));
    COperator xx_sorted = c_compose(c_x(alg, 1, 1), c_x(alg, 1, 2));
    REQUIRE(xx == c_scale(xx_sorted, rat(-1)));

    REQUIRE(c_compose(c_x(alg, 1, 1), c_x(alg, 1, 1)).is_zero());
    REQUIRE(c_compose(c_d(alg, 1, 1), c_d(alg, 1, 1)).is_zero());

    REQUIRE_THROWS_AS(c_add(c_identity(alg), c_identity(GAlg(1, 2))), DimensionMismatch);
}

TEST_CASE("clifford anticommutators") {
    GAlg alg(2, 2);
    for (int p = 0; p < alg.bits(); ++p)
        for (int q = 0; q < alg.bits(); ++q) {
            COperator xp = c_x(alg, alg.row_of(p), alg.col_of(p));
            COperator xq = c_x(alg, alg.row_of(q), alg.col_of(q));
            COperator dp = c_d(alg, alg.row_of(p), alg.col_of(p));
            COperator dq = c_d(alg, alg.row_of(q), alg.col_of(q));
            REQUIRE(c_add(c_compose(xp, xq), c_compose(xq, xp)).is_zero());
            REQUIRE(c_add(c_compose(dp, dq), c_compose(dq, dp)).is_zero());
            COperator anti = c_add(c_compose(dp, xq), c_compose(xq, dp));
            if (p == q)
                REQUIRE(anti == c_identity(alg));
            else
                REQUIRE(anti.is_zero());
        }
}

TEST_CASE("composition agrees with application") {
    GAlg alg(2, 2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        COperator p = random_coperator(rng, alg);
        COperator q = random_coperator(rng, alg);
        COperator pq = c_compose(p, q);
        for (Mask g = 0; g < alg.dim_mask(); ++g) {
            GElement via_compose = c_apply(pq, monomial(g));
            GElement via_apply = c_apply(p, c_apply(q, monomial(g)));
            REQUIRE(via_compose == via_apply);
        }
    }

    // Matrices multiply the same way operators compose.
    COperator p = random_coperator(rng, alg);
    COperator q = random_coperator(rng, alg);
    REQUIRE(operator_matrix(alg, c_compose(p, q)) ==
            qm_mul(operator_matrix(alg, p), operator_matrix(alg, q)));
}

TEST_CASE("row action gamma") {
    GAlg alg(2, 2);
    Mask x11 = Mask(1) << alg.bit(1, 1);
    Mask x12 = Mask(1) << alg.bit(1, 2);
    Mask x21 = Mask(1) << alg.bit(2, 1);

    // gamma(E_11) counts the generators in row one.
    REQUIRE(c_apply(gamma(alg, 1, 1), monomial(x11 | x12)) ==
            g_scale(monomial(x11 | x12), rat(2)));
    REQUIRE(c_apply(gamma(alg, 1, 1), monomial(x21)).empty());

    // gamma(E_12) moves a row-two generator up to row one.
    REQUIRE(c_apply(gamma(alg, 1, 2), monomial(x21)) == monomial(x11));

    REQUIRE(c_commutator(gamma(alg, 1, 2), gamma(alg, 2, 1)) ==
            c_sub(gamma(alg, 1, 1), gamma(alg, 2, 2)));

    REQUIRE_THROWS_AS(gamma(alg, 3, 1), IndexOutOfRange);
}

TEST_CASE("column action gln_op") {
    GAlg alg(2, 2);
    Mask x11 = Mask(1) << alg.bit(1, 1);
    Mask x12 = Mask(1) << alg.bit(1, 2);

    REQUIRE(c_apply(gln_op(alg, 1, 2), monomial(x12)) == monomial(x11));
    REQUIRE(c_apply(gln_op(alg, 1, 1), monomial(x11 | x12)) == monomial(x11 | x12));

    // Total number operator is diagonal with the monomial degree.
    COperator number = c_add(gln_op(alg, 1, 1), gln_op(alg, 2, 2));
    QMatrix nm = operator_matrix(alg, number);
    for (Mask g = 0; g < alg.dim_mask(); ++g)
        REQUIRE(nm.get(static_cast<int>(g), static_cast<int>(g)) ==
                rat(std::popcount(g)));

    REQUIRE_THROWS_AS(gln_op(alg, 0, 1), IndexOutOfRange);
}

TEST_CASE("gamma and gln_op are commuting representations") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            GAlg alg(m, n);
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= m; ++b)
                    for (int c = 1; c <= m; ++c)
                        for (int d = 1; d <= m; ++d) {
                            COperator lhs = c_commutator(gamma(alg, a, b), gamma(alg, c, d));
                            COperator rhs = c_zero(alg);
                            if (b == c) rhs = c_add(rhs, gamma(alg, a, d));
                            if (d == a) rhs = c_sub(rhs, gamma(alg, c, b));
                            REQUIRE(lhs == rhs);
                        }
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            COperator lhs = c_commutator(gln_op(alg, i, j), gln_op(alg, k, l));
                            COperator rhs = c_zero(alg);
                            if (j == k) rhs = c_add(rhs, gln_op(alg, i, l));
                            if (l == i) rhs = c_sub(rhs, gln_op(alg, k, j));
                            REQUIRE(lhs == rhs);
                        }
            if (m == 2 && n == 2)
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b)
                        for (int i = 1; i <= n; ++i)
                            for (int j = 1; j <= n; ++j)
                                REQUIRE(c_commutator(gamma(alg, a, b),
                                                     gln_op(alg, i, j)).is_zero());
        }
}

TEST_CASE("row relabeling") {
    GAlg alg(2, 2);
    Mask x11 = Mask(1) << alg.bit(1, 1);
    Mask x21 = Mask(1) << alg.bit(2, 1);
    Perm swap{2, 1};

    REQUIRE(sym_act(alg, swap, monomial(x11)) == monomial(x21));
    REQUIRE(sym_act(alg, swap, monomial(x11 | x21)) ==
            g_scale(monomial(x11 | x21), rat(-1)));
    REQUIRE(sym_act(alg, perm_identity(2), monomial(x11 | x21)) == monomial(x11 | x21));
    REQUIRE(sym_act(alg, swap, sym_act(alg, swap, monomial(x11 | x21))) ==
            monomial(x11 | x21));

    REQUIRE(sym_act(alg, swap, gamma(alg, 1, 1)) == gamma(alg, 2, 2));
    REQUIRE(sym_act(alg, swap, gamma(alg, 1, 2)) == gamma(alg, 2, 1));

    REQUIRE_THROWS_AS(sym_act(alg, perm_identity(3), monomial(x11)), DimensionMismatch);

    GAlg alg32(3, 2);
    std::mt19937_64 rng(29);
    for (const auto& sigma : all_permutations(3)) {
        // Conjugation sends gamma(E_ab) to gamma(E_{sigma(a) sigma(b)}).
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                REQUIRE(sym_act(alg32, sigma, gamma(alg32, a, b)) ==
                        gamma(alg32, sigma[a - 1], sigma[b - 1]));

        // Automorphism property on random elements.
        GElement g = random_gelement(rng, alg32);
        COperator p = random_coperator(rng, alg32);
        REQUIRE(sym_act(alg32, sigma, c_apply(p, g)) ==
                c_apply(sym_act(alg32, sigma, p), sym_act(alg32, sigma, g)));

        // Group law: acting by tau then sigma equals acting by sigma o tau.
        for (const auto& tau : all_permutations(3))
            REQUIRE(sym_act(alg32, sigma, sym_act(alg32, tau, g)) ==
                    sym_act(alg32, perm_compose(sigma, tau), g));
    }
}

TEST_CASE("operator matrices") {
    GAlg alg(1, 2);
    QMatrix m = operator_matrix(alg, gamma(alg, 1, 1));
    REQUIRE(m.rows == 4);
    std::vector<int> expected{0, 1, 1, 2};
    for (int g = 0; g < 4; ++g) {
        REQUIRE(m.get(g, g) == rat(expected[g]));
        for (int h = 0; h < 4; ++h)
            if (h != g) REQUIRE(m.get(g, h) == rat(0));
    }

    auto counts = mask_row_counts(GAlg(2, 2), Mask(0b0111));
    REQUIRE(counts == std::vector<int>{2, 1});
}

TEST_CASE("row split") {
    int m = 1, l = 1, n = 2;
    GAlg big(m + l, n);
    Mask mask = (Mask(1) << big.bit(1, 1)) | (Mask(1) << big.bit(2, 1));
    auto t = split_reindex_rows(m, l, n, mask);
    REQUIRE(t.first == Mask(0b01));
    REQUIRE(t.second == Mask(0b01));
    REQUIRE(t.sign == 1);

    QMatrix phi = row_split_matrix(m, l, n);
    REQUIRE(qm_mul(qm_transpose(phi), phi) == qm_identity(phi.rows));

    // The split intertwines the row actions block by block.
    GAlg top(m, n), bottom(l, n);
    int top_dim = static_cast<int>(top.dim_mask());
    int bottom_dim = static_cast<int>(bottom.dim_mask());
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            QMatrix lhs = qm_mul(phi, operator_matrix(big, gamma(big, a, b)));
            QMatrix rhs = qm_mul(kron(operator_matrix(top, gamma(top, a, b)),
                                      qm_identity(bottom_dim)),
                                 phi);
            REQUIRE(lhs == rhs);
        }
    for (int a = 1; a <= l; ++a)
        for (int b = 1; b <= l; ++b) {
            QMatrix lhs = qm_mul(phi, operator_matrix(big, gamma(big, m + a, m + b)));
            QMatrix rhs = qm_mul(kron(qm_identity(top_dim),
                                      operator_matrix(bottom, gamma(bottom, a, b))),
                                 phi);
            REQUIRE(lhs == rhs);
        }

    // The column action becomes the sum of the two block actions.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix lhs = qm_mul(phi, operator_matrix(big, gln_op(big, i, j)));
            QMatrix rhs = qm_mul(
                qm_add(kron(operator_matrix(top, gln_op(top, i, j)),
                            qm_identity(bottom_dim)),
                       kron(qm_identity(top_dim),
                            operator_matrix(bottom, gln_op(bottom, i, j)))),
                phi);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("column split") {
    {
        int m = 1, n = 1, l = 1;
        GAlg big(m, n + l);
        Mask mask = (Mask(1) << big.bit(1, 1)) | (Mask(1) << big.bit(1, 2));
        auto t = split_reindex_cols(m, n, l, mask);
        REQUIRE(t.first == Mask(0b1));
        REQUIRE(t.second == Mask(0b1));
        REQUIRE(t.sign == -1);
    }

    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (int l = 1; l <= 2; ++l) {
                GAlg big(m, n + l);
                for (Mask g = 0; g < big.dim_mask(); ++g) {
                    auto t = split_reindex_cols(m, n, l, g);
                    REQUIRE(t.sign == col_split_sign_oracle(big, n, g));
                    REQUIRE(std::popcount(t.first) + std::popcount(t.second) ==
                            std::popcount(g));
                }

                QMatrix phi = col_split_matrix(m, n, l);
                REQUIRE(qm_mul(qm_transpose(phi), phi) == qm_identity(phi.rows));

                // Column actions inside one block pass through the split.
                GAlg lalg(m, l), nalg(m, n);
                int l_dim = static_cast<int>(lalg.dim_mask());
                int n_dim = static_cast<int>(nalg.dim_mask());
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        QMatrix lhs = qm_mul(phi, operator_matrix(big, gln_op(big, i, j)));
                        QMatrix rhs = qm_mul(kron(qm_identity(l_dim),
                                                  operator_matrix(nalg, gln_op(nalg, i, j))),
                                             phi);
                        REQUIRE(lhs == rhs);
                    }
                for (int i = 1; i <= l; ++i)
                    for (int j = 1; j <= l; ++j) {
                        QMatrix lhs =
                            qm_mul(phi, operator_matrix(big, gln_op(big, n + i, n + j)));
                        QMatrix rhs = qm_mul(kron(operator_matrix(lalg, gln_op(lalg, i, j)),
                                                  qm_identity(n_dim)),
                                             phi);
                        REQUIRE(lhs == rhs);
                    }
            }
}

TEST_CASE("operator ring interface") {
    GAlg alg(1, 2);
    COperator two = c_scale(c_identity(alg), rat(2));
    REQUIRE(ring_inverse(two) == c_scale(c_identity(alg), rat(1, 2)));
    REQUIRE_THROWS_AS(ring_inverse(c_x(alg, 1, 1)), NonInvertibleLeadingTerm);
    REQUIRE(ring_one(c_x(alg, 1, 1)) == c_identity(alg));
}

TEST_CASE("gl representations") {
    REQUIRE_NOTHROW(validate_glrep(natural_glrep(3)));
    REQUIRE_NOTHROW(validate_glrep(scalar_gl1_rep(rat(1, 3))));
    REQUIRE_NOTHROW(validate_glrep(jordan_gl1_rep(rat(2))));
    REQUIRE_NOTHROW(validate_glrep(gamma_glrep(2, 2)));
    REQUIRE_NOTHROW(validate_glrep(gln_glrep(2, 2)));

    GLRep bad = natural_glrep(2);
    QMatrix wrong(2, 2);
    wrong.set(0, 0, rat(1));
    wrong.set(1, 1, rat(1));
    bad.set_E(1, 2, wrong);
    REQUIRE_THROWS_AS(validate_glrep(bad), NotARepresentation);

    GLRep nat = natural_glrep(2);
    REQUIRE(nat.E(1, 2).get(0, 1) == rat(1));
    REQUIRE(nat.E(1, 2).get(1, 0) == rat(0));
    REQUIRE_THROWS_AS(nat.E(0, 1), IndexOutOfRange);
}
