#include "doctest.h"

#include "onegen/cert.hpp"
#include "onegen/matrix_io.hpp"

using namespace onegen;

namespace {

LinearMatrix from_rows(const std::string &rows, const std::string &vars)
{
    return parse_matrix_text("field: QQ\nvars: " + vars + "\nmatrix:\n" + rows).matrix;
}

const CheckRecord &find(const CertificateReport &r, const std::string &name)
{
    for (const auto &c : r.checks)
        if (c.name == name)
            return c;
    FAIL("no check " << name);
    throw 0;
}

} // namespace

TEST_CASE("statement table covers the suite in order")
{
    const auto &names = suite_check_names();
    REQUIRE(names.size() == 14);
    CHECK(names.front() == "one_generic");
    CHECK(names[5] == "en_exactness");
    CHECK(names.back() == "submaximal_height");
    for (const auto &n : names)
        CHECK_FALSE(check_statement(n).empty());
    CHECK_THROWS_AS(check_statement("nope"), DomainError);
}

TEST_CASE("hankel(2,3) with defaults passes every check")
{
    auto r = run_suite(make_hankel(2, 3), {});
    REQUIRE(r.checks.size() == 14);
    for (const auto &c : r.checks)
        CHECK_MESSAGE(c.status == CheckStatus::pass, c.name << ": " << c.reason);
    CHECK(r.exit_code() == 0);
    CHECK(find(r, "height_check").details["computed"] == 2);
    CHECK(find(r, "rank_ab_exhaustive").details["points_checked"] == 102);
    CHECK(find(r, "a_invariant_negative").details["computed"] == -1);
    CHECK(find(r, "en_exactness").details["degree_bound"] == 5);
}

TEST_CASE("hankel(3,4) at D = 6 reports the predicted Betti numbers")
{
    SuiteConfig cfg;
    cfg.degree_bound = 6;
    auto r = run_suite(make_hankel(3, 4), cfg);
    CHECK(r.exit_code() == 0);
    const auto &b = find(r, "betti_match");
    CHECK(b.status == CheckStatus::pass);
    Json expected = Json::array({Json{{"i", 0}, {"twist", 0}, {"rank", 1}}, Json{{"i", 1}, {"twist", -3}, {"rank", 4}},
                                 Json{{"i", 2}, {"twist", -4}, {"rank", 3}}});
    CHECK(b.details["computed"] == expected);
}

TEST_CASE("non-1-generic input fails with a witness and skips dependent checks")
{
    auto M = from_rows("x1, x2\nx3, 0\n", "x1, x2, x3");
    auto r = run_suite(M, {});
    const auto &g = find(r, "one_generic");
    CHECK(g.status == CheckStatus::fail);
    CHECK(g.details["symbolic"]["witness"]["verified"] == true);
    for (const auto &c : r.checks) {
        if (c.name == "one_generic" || c.name == "en_build" || c.name == "rank_ab_exhaustive")
            continue;
        CHECK(c.status == CheckStatus::skipped);
        CHECK(c.reason == "hypothesis not met");
    }
    CHECK(find(r, "rank_ab_exhaustive").status == CheckStatus::fail);
    CHECK(r.exit_code() == 1);
    CHECK(r.to_text().find("witness (symbolic): lambda=") != std::string::npos);
}

TEST_CASE("m > n skips the maximal-minor checks")
{
    auto parsed = parse_matrix_text("field: QQ\nvars: a, b, c, d, e, f\nmatrix:\na, b\nc, d\ne, f\n");
    REQUIRE(parsed.warnings.size() == 1);
    auto r = run_suite(parsed.matrix, {}, parsed.warnings);
    CHECK(find(r, "one_generic").status == CheckStatus::pass);
    CHECK(find(r, "height_check").reason == "m > n: maximal-minor check");
    CHECK(find(r, "en_build").status == CheckStatus::skipped);
    CHECK(r.to_json()["matrix"]["warnings"].size() == 1);
}

TEST_CASE("check selection, exit codes and config errors")
{
    SuiteConfig cfg;
    cfg.checks = {"submaximal_height", "height_check"};
    auto r = run_suite(make_hankel(3, 3), cfg);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].name == "height_check");
    CHECK(r.checks[1].details["computed"] == 2);

    cfg.checks = {"bogus"};
    CHECK_THROWS_AS(run_suite(make_hankel(2, 3), cfg), DomainError);
    cfg = {};
    cfg.prime = 91;
    CHECK_THROWS_AS(run_suite(make_hankel(2, 3), cfg), DomainError);

    // The enumeration guard turns into an inconclusive check, exit code 2.
    cfg = {};
    cfg.checks = {"rank_ab_exhaustive"};
    auto big = run_suite(make_hankel(4, 4), cfg);
    CHECK(big.checks[0].status == CheckStatus::inconclusive);
    CHECK(big.exit_code() == 2);

    // A Groebner cap is inconclusive too, never a wrong verdict.
    cfg.checks = {"height_check"};
    cfg.limits.max_pairs = 1;
    auto capped = run_suite(make_hankel(3, 4), cfg);
    CHECK(capped.checks[0].status == CheckStatus::inconclusive);
}

TEST_CASE("redundant variables are annotated, not rejected")
{
    auto M = parse_matrix_text("field: QQ\nvars: a, b, c, d\nmatrix:\na, b\nb, a\n").matrix;
    SuiteConfig cfg;
    cfg.checks = {"one_generic"};
    auto r = run_suite(M, cfg);
    CHECK(r.matrix["entry_span_rank"] == 2);
    REQUIRE(r.matrix["warnings"].size() == 1);
    CHECK(r.matrix["warnings"][0] == "entries span 2 of 4 variables");
}

TEST_CASE("fiber_stats needs r+1 > n")
{
    SuiteConfig cfg;
    cfg.checks = {"fiber_stats"};
    auto r = run_suite(make_hankel(1, 3), cfg);
    CHECK(r.checks[0].status == CheckStatus::skipped);
}

TEST_CASE("GF(q) matrices are checked over GF(q)")
{
    auto M = parse_matrix_text("field: 7\nvars: a, b, c, d\nmatrix:\na, b, c\nb, c, d\n").matrix;
    auto r = run_suite(M, {});
    CHECK(r.matrix["check_prime"] == 7);
    CHECK(find(r, "rank_ab_exhaustive").details["points_checked"] == 8);
    CHECK(r.exit_code() == 0);
}

TEST_CASE("exact mode agrees with the modular shadow")
{
    SuiteConfig cfg;
    cfg.exact = true;
    auto r = run_suite(make_hankel(2, 4), cfg);
    CHECK(r.matrix["groebner_field"] == "QQ");
    CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are byte-identical across runs")
{
    SuiteConfig cfg;
    cfg.seed = 12345;
    cfg.samples = 200;
    auto a = run_suite(make_generic_symmetric(3), cfg).to_json().dump(2);
    auto b = run_suite(make_generic_symmetric(3), cfg).to_json().dump(2);
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);

    auto j = run_suite(make_hankel(2, 2), cfg).to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"matrix", "checks", "summary", "version", "seed"});
    CHECK(j["seed"] == 12345);

    cfg.timings = true;
    CHECK(run_suite(make_hankel(2, 2), cfg).to_json()["checks"][0].contains("elapsed_ms"));
}
