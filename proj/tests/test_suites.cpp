#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "ymick/suites.hpp"

using namespace ymick;

namespace {

SuiteParams tiny(const std::string& suite) {
    SuiteParams p;
    p.suite = suite;
    p.m = 1;
    p.n = 1;
    p.l = 1;
    p.N = 1;
    p.S = 2;
    return p;
}

std::vector<std::string> names_of(const Report& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks) out.push_back(c.name);
    return out;
}

}  // namespace

TEST_CASE("smallest prime above") {
    CHECK(smallest_prime_above(1) == 2);
    CHECK(smallest_prime_above(2) == 3);
    CHECK(smallest_prime_above(3) == 5);
    CHECK(smallest_prime_above(4) == 5);
    CHECK(smallest_prime_above(5) == 7);
    CHECK(smallest_prime_above(6) == 7);
}

TEST_CASE("default weight is generic") {
    CHECK(default_mu(2) == Weight{rat(1, 3), rat(2, 3)});
    CHECK(default_mu(3) == Weight{rat(1, 5), rat(2, 5), rat(3, 5)});
    for (int m = 1; m <= 5; ++m) {
        Weight mu = default_mu(m);
        REQUIRE(static_cast<int>(mu.size()) == m);
        CHECK(is_generic(mu));
    }
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 14);
    CHECK(std::find(names.begin(), names.end(), "clifford") != names.end());
    CHECK(std::find(names.begin(), names.end(), "yangian-defrel") != names.end());
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
}

TEST_CASE("clifford suite passes") {
    SuiteParams p;
    p.suite = "clifford";
    Report r = run_suite(p);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].name == "anticommutators");
    CHECK(r.checks[0].ok);
    CHECK(r.checks[0].diagnostic.empty());
    CHECK(r.all_ok());
    CHECK(r.elapsed_ms >= 0);
    CHECK(r.params.suite == "clifford");
}

TEST_CASE("lemma2 suite enumerates entries in sorted order") {
    SuiteParams p;
    p.suite = "lemma2";
    p.m = 2;
    p.l = 2;
    p.S = 3;
    Report r = run_suite(p);
    CHECK(names_of(r) == std::vector<std::string>{"entry-1-1", "entry-1-2",
                                                  "entry-2-1", "entry-2-2"});
    CHECK(r.all_ok());
}

TEST_CASE("unknown suite is rejected with the known names") {
    SuiteParams p;
    p.suite = "no-such-suite";
    CHECK_THROWS_AS(run_suite(p), UnknownSuite);
    try {
        run_suite(p);
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("no-such-suite") != std::string::npos);
        CHECK(msg.find("clifford") != std::string::npos);
    }
}

TEST_CASE("dimension cap guards the space size") {
    SuiteParams p;
    p.suite = "clifford";
    p.cap = 1;
    CHECK_THROWS_AS(run_suite(p), DimensionCapExceeded);
    try {
        run_suite(p);
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("raise cap") != std::string::npos);
    }
}

TEST_CASE("parameter validation") {
    SuiteParams p;
    p.suite = "clifford";
    p.m = 0;
    CHECK_THROWS_AS(run_suite(p), DimensionMismatch);

    SuiteParams q;
    q.suite = "enveloping";
    q.m = 2;
    q.mu = Weight{rat(1, 3)};
    CHECK_THROWS_AS(run_suite(q), DimensionMismatch);
}

TEST_CASE("weight genericity is enforced where scalars demand it") {
    SuiteParams p;
    p.suite = "zhel-scalar";
    p.m = 2;
    p.n = 1;
    p.mu = Weight{rat(1), rat(0)};
    CHECK_THROWS_AS(run_suite(p), NonGenericWeight);
}

TEST_CASE("sigma validation") {
    SuiteParams p;
    p.suite = "zhel-braid";
    p.m = 2;
    p.n = 1;
    p.sigma = Perm{1, 1};
    CHECK_THROWS_AS(run_suite(p), DimensionMismatch);
    p.sigma = Perm{3, 1};
    CHECK_THROWS_AS(run_suite(p), DimensionMismatch);
    p.sigma = Perm{2, 1};
    CHECK(run_suite(p).all_ok());
}

TEST_CASE("degree bound on the wedge suite") {
    SuiteParams p = tiny("dast-oracle");
    p.N = 2;
    CHECK_THROWS_AS(run_suite(p), DimensionMismatch);
}

TEST_CASE("repeated runs agree check for check") {
    SuiteParams p;
    p.suite = "bimequiv";
    p.m = 2;
    p.n = 1;
    p.S = 3;
    Report a = run_suite(p);
    Report b = run_suite(p);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].ok == b.checks[i].ok);
        CHECK(a.checks[i].diagnostic == b.checks[i].diagnostic);
    }
    CHECK(a.all_ok());
}

TEST_CASE("every suite passes on a small instance") {
    Report r = run_suite(tiny("all"));
    CHECK(r.all_ok());
    auto names = names_of(r);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        bool found = false;
        for (const auto& n : names)
            if (n.rfind(name + "/", 0) == 0) found = true;
        CHECK(found);
    }
    for (const auto& n : names) CHECK(n.find('/') != std::string::npos);
}

TEST_CASE("suites stay quiet when every check passes") {
    Report r = run_suite(tiny("howe-hom"));
    REQUIRE(r.checks.size() == 2);
    for (const auto& c : r.checks) {
        CHECK(c.ok);
        CHECK(c.diagnostic.empty());
    }
}
