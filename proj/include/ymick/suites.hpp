#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ymick/check.hpp"
#include "ymick/coinvariants.hpp"
#include "ymick/enveloping.hpp"
#include "ymick/error.hpp"
#include "ymick/glrep.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/hecke.hpp"
#include "ymick/olshanski.hpp"
#include "ymick/permutation.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"
#include "ymick/yangian.hpp"
#include "ymick/zhelobenko.hpp"

namespace ymick {

// Parameters of a named verification suite. Weight and permutation fall back
// to canonical defaults derived from m when left unset; cap bounds the
// largest space any suite is allowed to materialize.
struct SuiteParams {
    std::string suite;
    int m = 2;
    int n = 2;
    int l = 1;
    int N = 2;
    int S = 4;
    std::optional<Weight> mu;
    std::optional<Perm> sigma;
    unsigned long long seed = 42;
    long long cap = 4096;
};

struct NamedCheck {
    std::string name;
    bool ok = true;
    std::string diagnostic;
};

struct Report {
    SuiteParams params;
    std::vector<NamedCheck> checks;
    long long elapsed_ms = 0;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "clifford",   "enveloping",      "lemma2",      "hecke",
        "yangian-defrel", "dast-oracle", "parind",      "bimequiv",
        "zhel-braid", "zhel-intertwine", "zhel-scalar", "olshanski",
        "howe-hom",   "all"};
    return names;
}

inline int smallest_prime_above(int m) {
    for (int p = m < 1 ? 2 : m + 1;; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) return p;
    }
}

// Default weight (1/p, 2/p, ..., m/p) with p the smallest prime above m.
// No two labels differ by an integer, so the weight is generic.
inline Weight default_mu(int m) {
    int p = smallest_prime_above(m);
    Weight mu;
    for (int a = 1; a <= m; ++a) mu.push_back(rat(a, p));
    return mu;
}

namespace detail {

constexpr long long kDimSaturated = 1LL << 60;

inline void guard_space(long long dim, const SuiteParams& p, const std::string& what) {
    if (dim > p.cap) {
        std::string size = dim >= kDimSaturated ? "more than " + std::to_string(p.cap)
                                                : std::to_string(dim);
        throw DimensionCapExceeded(
            what + " would span a space of dimension " + size + " > cap " +
            std::to_string(p.cap) +
            "; lower m, n, l or N, or raise cap in the config file");
    }
}

inline long long mul_ll(long long a, long long b) {
    if (a > 0 && b > 0 && a >= kDimSaturated / b) return kDimSaturated;
    return a * b;
}

inline long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out = mul_ll(out, base);
    return out;
}

inline void add(std::vector<NamedCheck>& out, std::string name, CheckResult r) {
    out.push_back({std::move(name), r.ok, std::move(r.detail)});
}

inline Weight suite_mu(const SuiteParams& p) {
    Weight mu = p.mu ? *p.mu : default_mu(p.m);
    if (static_cast<int>(mu.size()) != p.m)
        throw DimensionMismatch("mu has " + std::to_string(mu.size()) +
                                " labels but m = " + std::to_string(p.m) +
                                "; pass --mu with m entries");
    return mu;
}

inline Weight generic_suite_mu(const SuiteParams& p) {
    Weight mu = suite_mu(p);
    if (!is_generic(mu))
        throw NonGenericWeight(
            "this suite needs pairwise non-integer label differences; pass a "
            "generic --mu or omit it to use the default");
    return mu;
}

inline Perm suite_sigma(const SuiteParams& p) {
    if (!p.sigma) return longest_element(p.m);
    const Perm& s = *p.sigma;
    if (static_cast<int>(s.size()) != p.m)
        throw DimensionMismatch("sigma has " + std::to_string(s.size()) +
                                " entries but m = " + std::to_string(p.m));
    std::vector<bool> seen(p.m, false);
    for (int v : s) {
        if (v < 1 || v > p.m || seen[v - 1])
            throw DimensionMismatch("sigma is not a permutation of 1.." +
                                    std::to_string(p.m));
        seen[v - 1] = true;
    }
    return s;
}

inline std::vector<NamedCheck> run_clifford(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the Grassmann algebra");
    std::vector<NamedCheck> out;
    add(out, "anticommutators", check_clifford(p.m, p.n));
    return out;
}

inline std::vector<NamedCheck> run_enveloping(const SuiteParams& p) {
    std::vector<NamedCheck> out;
    add(out, "commutator-table", check_pbw_commutators(p.m));
    add(out, "associativity", check_pbw_associativity(p.m));
    add(out, "verma-representation", check_verma_representation(suite_mu(p)));
    return out;
}

inline std::vector<NamedCheck> run_lemma2(const SuiteParams& p) {
    std::vector<NamedCheck> out;
    for (int a = 1; a <= p.m; ++a)
        for (int d = 1; d <= p.l; ++d)
            add(out, "entry-" + std::to_string(a) + "-" + std::to_string(d),
                check_lemma2_entry(p.m, p.l, a, d, p.S));
    return out;
}

inline std::vector<NamedCheck> run_hecke(const SuiteParams& p) {
    guard_space(pow_ll(p.m, p.N + 1), p, "the Cherednik module");
    GLRep v = natural_glrep(p.m);
    std::vector<NamedCheck> out;
    add(out, "relations", check_hecke_module(cherednik(v, p.m, p.N)));
    add(out, "diagonal-commutes", check_cherednik_commutes(v, p.m, p.N));
    return out;
}

inline std::vector<NamedCheck> run_yangian_defrel(const SuiteParams& p) {
    guard_space(pow_ll(2, 2 * p.n), p, "the tensor module");
    guard_space(mul_ll(pow_ll(p.m, p.N + 1), pow_ll(p.n, p.N)), p, "the skew functor");
    guard_space(pow_ll(2, p.m * p.n), p, "the Verma coinvariants");
    guard_space(mul_ll(mul_ll(p.m, p.l), pow_ll(2, (p.m + p.l) * p.n)), p,
                "the parabolic coinvariants");
    guard_space(pow_ll(2, p.m * (p.n + p.l)), p, "the centralizer module");
    std::vector<NamedCheck> out;
    auto eva = evaluation_module_full(p.n, rat(1, 2), p.S);
    add(out, "evaluation", check_yangian_relations(eva));
    add(out, "tensor",
        check_yangian_relations(
            tensor(eva, evaluation_module_full(p.n, rat(-1, 3), p.S))));
    add(out, "skew-drinfeld",
        check_yangian_relations(
            skew_drinfeld(cherednik(natural_glrep(p.m), p.m, p.N), p.n, p.S)));
    add(out, "verma-coinvariants",
        check_yangian_relations(
            verma_coinvariants_module(suite_mu(p), p.m, p.n, p.S).module));
    if (p.l >= 1)
        add(out, "parabolic-coinvariants",
            check_yangian_relations(parabolic_coinvariants_module(
                natural_glrep(p.m), natural_glrep(p.l), p.n, p.S)));
    add(out, "beta-schur",
        check_yangian_relations(beta_via_schur(p.m, p.n, p.l, p.S)));
    add(out, "beta-composition",
        check_yangian_relations(beta_via_composition(p.m, p.n, p.l, p.S)));
    return out;
}

inline std::vector<NamedCheck> run_dast(const SuiteParams& p) {
    if (p.N < 1 || p.N > p.m * p.n)
        throw DimensionMismatch("dast-oracle needs 1 <= N <= m*n");
    guard_space(mul_ll(pow_ll(p.m, p.N + 1), pow_ll(p.n, p.N)), p, "the skew functor");
    guard_space(mul_ll(p.m, pow_ll(2, p.m * p.n)), p, "the bimodule");
    std::vector<NamedCheck> out;
    add(out, "wedge-transport",
        check_dast(natural_glrep(p.m), p.n, p.N, std::min(p.S, 3)));
    return out;
}

inline std::vector<NamedCheck> run_parind(const SuiteParams& p) {
    guard_space(mul_ll(2, pow_ll(2, 2 * p.n)), p, "the scalar coinvariants");
    guard_space(mul_ll(p.m, pow_ll(2, (p.m + 1) * p.n)), p, "the natural coinvariants");
    std::vector<NamedCheck> out;
    add(out, "scalar-scalar",
        check_parind(scalar_gl1_rep(rat(1, 2)), scalar_gl1_rep(rat(-1, 3)), p.n, p.S));
    add(out, "jordan-scalar",
        check_parind(jordan_gl1_rep(rat(2, 3)), scalar_gl1_rep(rat(1, 5)), p.n, p.S));
    add(out, "natural-scalar",
        check_parind(natural_glrep(p.m), scalar_gl1_rep(rat(1, 2)), p.n,
                     std::min(p.S, 3)));
    return out;
}

inline std::vector<NamedCheck> run_bimequiv(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the Verma coinvariants");
    Weight mu = generic_suite_mu(p);
    std::vector<NamedCheck> out;
    add(out, "intertwiner", check_bimequiv(mu, p.m, p.n, p.S, p.seed));
    return out;
}

inline std::vector<NamedCheck> run_zhel_braid(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the coinvariant space");
    Weight mu = generic_suite_mu(p);
    std::vector<NamedCheck> out;
    add(out, "braid-chains", check_zhelobenko_braid(p.m, p.n, mu));
    add(out, "word-independence",
        check_zhelobenko_words(p.m, p.n, mu, suite_sigma(p)));
    return out;
}

inline std::vector<NamedCheck> run_zhel_intertwine(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the coinvariant space");
    Weight mu = generic_suite_mu(p);
    std::vector<NamedCheck> out;
    add(out, "intertwine", check_zhelobenko_intertwine(mu, p.m, p.n, p.S));
    return out;
}

inline std::vector<NamedCheck> run_zhel_scalar(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the coinvariant space");
    Weight mu = generic_suite_mu(p);
    std::vector<NamedCheck> out;
    add(out, "scalars", check_zhelobenko_scalars(mu, p.m, p.n));
    return out;
}

inline std::vector<NamedCheck> run_olshanski(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * (p.n + p.l)), p, "the centralizer module");
    std::vector<NamedCheck> out;
    add(out, "transport", check_arol(p.m, p.n, p.l, p.S));
    add(out, "centralizer", check_beta_centralizer(p.m, p.n, p.l, p.S));
    return out;
}

inline std::vector<NamedCheck> run_howe_hom(const SuiteParams& p) {
    guard_space(pow_ll(2, p.m * p.n), p, "the Grassmann factor");
    std::vector<NamedCheck> out;
    add(out, "criterion", check_hom_criterion(p.m, p.n, 2));
    add(out, "binomial", check_hom_binomial(p.n, 2));
    return out;
}

inline std::vector<NamedCheck> run_named(const std::string& name, const SuiteParams& p) {
    if (name == "clifford") return run_clifford(p);
    if (name == "enveloping") return run_enveloping(p);
    if (name == "lemma2") return run_lemma2(p);
    if (name == "hecke") return run_hecke(p);
    if (name == "yangian-defrel") return run_yangian_defrel(p);
    if (name == "dast-oracle") return run_dast(p);
    if (name == "parind") return run_parind(p);
    if (name == "bimequiv") return run_bimequiv(p);
    if (name == "zhel-braid") return run_zhel_braid(p);
    if (name == "zhel-intertwine") return run_zhel_intertwine(p);
    if (name == "zhel-scalar") return run_zhel_scalar(p);
    if (name == "olshanski") return run_olshanski(p);
    if (name == "howe-hom") return run_howe_hom(p);
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw UnknownSuite("no suite named '" + name + "'; choose one of " + known);
}

}  // namespace detail

// Runs the named suite and collects its checks, sorted by name so report
// assembly does not depend on execution order. Deterministic given the seed.
inline Report run_suite(const SuiteParams& params) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.params = params;
    if (params.m < 1 || params.n < 1 || params.l < 0 || params.N < 0 || params.S < 1)
        throw DimensionMismatch("need m, n, S >= 1 and l, N >= 0");
    if (params.suite == "all") {
        for (const auto& name : suite_names()) {
            if (name == "all") continue;
            for (auto& c : detail::run_named(name, params))
                report.checks.push_back({name + "/" + c.name, c.ok, c.diagnostic});
        }
    } else {
        report.checks = detail::run_named(params.suite, params);
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const NamedCheck& a, const NamedCheck& b) { return a.name < b.name; });
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace ymick
