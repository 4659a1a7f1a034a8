#include "doctest.h"

#include <random>

#include "onegen/polynomial.hpp"

using namespace onegen;

namespace {

auto ring3(MonomialOrder order = MonomialOrder::grevlex())
{
    return make_ring(PrimeField(101), VariableSet::numbered("x", 3), order);
}

std::vector<Monomial> all_monomials(std::size_t nvars, std::uint32_t max_degree)
{
    std::vector<Monomial> out;
    for (std::uint32_t d = 0; d <= max_degree; ++d)
        for (const auto &m : monomials_of_degree(nvars, d))
            out.push_back(m);
    return out;
}

} // namespace

TEST_CASE("parse examples")
{
    auto R = ring3();
    auto f = parse_polynomial("x1*x3 - x2^2", R);
    CHECK(f.size() == 2);
    CHECK(f.degree() == 2);
    auto g = parse_polynomial("x2 + x2", R);
    REQUIRE(g.size() == 1);
    CHECK(g.leading_coeff() == 2);
    CHECK(g.to_string() == "2*x2");
    CHECK(parse_polynomial("x1 - x1", R).is_zero());
    CHECK(parse_polynomial("-x1 + 3*x2*x3^2 + 7", R).to_string() == "3*x2*x3^2 - x1 + 7");
    CHECK(parse_polynomial("0", R).is_zero());
    CHECK(parse_polynomial("x2*x1", R) == parse_polynomial("x1*x2", R));
}

TEST_CASE("parse errors carry positions")
{
    auto R = ring3();
    try {
        parse_polynomial("x1 + y2", R);
        FAIL("expected parse error");
    } catch (const ParseError &e) {
        CHECK(e.column() == 6);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_polynomial("", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 +", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 x2", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1^", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2*", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 ** x2", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/101*x1", R), ParseError);
}

TEST_CASE("arithmetic examples")
{
    auto R = ring3();
    auto x1 = Polynomial<PrimeField>::variable(R, 0);
    auto x2 = Polynomial<PrimeField>::variable(R, 1);
    auto one = Polynomial<PrimeField>::constant(R, 1);
    CHECK((x1 + x2) * (x1 - x2) == parse_polynomial("x1^2 - x2^2", R));
    auto f = parse_polynomial("x1*x3 - x2^2", R);
    CHECK(f * one == f);
    CHECK(f + parse_polynomial("x2^2", R) == parse_polynomial("x1*x3", R));
    CHECK((f - f).is_zero());
    CHECK(f.scale(0).is_zero());

    auto other = make_ring(PrimeField(101), VariableSet::numbered("y", 3));
    CHECK_THROWS_AS(f + Polynomial<PrimeField>::variable(other, 0), DomainError);

    auto Q = make_ring(RationalField{}, VariableSet::numbered("x", 2));
    auto h = parse_polynomial("1/2*x1 + 1/3*x1", Q);
    CHECK(h.leading_coeff() == Rational(5, 6));
}

TEST_CASE("leading terms")
{
    auto lex = ring3(MonomialOrder::lex());
    auto f = parse_polynomial("x1*x3 - x2^2", lex);
    CHECK(f.leading_monomial() == Monomial{1, 0, 1});

    auto grevlex = ring3();
    auto g = parse_polynomial("x1*x3 - x2^2", grevlex);
    CHECK(g.leading_monomial() == Monomial{0, 2, 0});
    CHECK(grevlex->field.signed_value(g.leading_coeff()) == -1);

    auto c = parse_polynomial("5", grevlex);
    CHECK(c.leading_monomial().is_one());
    CHECK_THROWS_AS(Polynomial<PrimeField>(grevlex).leading_term(), DomainError);
}

TEST_CASE("orders are multiplicative total orders (degree <= 4, 3 variables)")
{
    auto mons = all_monomials(3, 4);
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1),
                       MonomialOrder::elimination(2)}) {
        CAPTURE(order.name());
        for (const auto &u : mons)
            for (const auto &v : mons) {
                int c = order.compare(u, v);
                CHECK(c == -order.compare(v, u));
                CHECK((c == 0) == (u == v));
                if (c < 0)
                    for (const auto &w : mons)
                        CHECK(order.compare(u * w, v * w) < 0);
            }
        // Well-order on these: 1 is the minimum.
        for (const auto &u : mons)
            CHECK(order.compare(Monomial(3), u) <= 0);
    }
}

TEST_CASE("block elimination order dominates the first block")
{
    auto mons = all_monomials(4, 3);
    for (std::size_t block : {1u, 2u}) {
        auto order = MonomialOrder::elimination(block);
        for (const auto &u : mons)
            for (const auto &v : mons) {
                bool u_hits = false, v_hits = false;
                for (std::size_t i = 0; i < block; ++i) {
                    u_hits = u_hits || u[i] > 0;
                    v_hits = v_hits || v[i] > 0;
                }
                if (u_hits && !v_hits)
                    CHECK(order.compare(u, v) > 0);
            }
    }
}

TEST_CASE("parse of print is the identity")
{
    std::mt19937_64 rng(11);
    auto R = ring3();
    auto Q = make_ring(RationalField{}, VariableSet::numbered("x", 3));
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Term<PrimeField>> terms;
        std::vector<Term<RationalField>> qterms;
        int count = static_cast<int>(rng() % 6);
        for (int t = 0; t < count; ++t) {
            Monomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
            terms.push_back({m, static_cast<std::uint32_t>(rng() % 101)});
            qterms.push_back({m, Rational(static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 4) + 1)});
        }
        auto f = Polynomial<PrimeField>::from_terms(R, terms);
        CHECK(parse_polynomial(f.to_string(), R) == f);
        auto g = Polynomial<RationalField>::from_terms(Q, qterms);
        CHECK(parse_polynomial(g.to_string(), Q) == g);
    }
}

TEST_CASE("monomial helpers")
{
    Monomial a{2, 0, 1}, b{1, 1, 0};
    CHECK(a.lcm(b) == Monomial{2, 1, 1});
    CHECK(a.gcd(b) == Monomial{1, 0, 0});
    CHECK(Monomial{1, 0, 0}.divides(a));
    CHECK(!b.divides(a));
    CHECK(a.quotient(Monomial{1, 0, 1}) == Monomial{1, 0, 0});
    CHECK(a.bidegree(2) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 2).front() == Monomial{2, 0, 0});
    CHECK_THROWS_AS(Monomial{-1}, DomainError);
    CHECK_THROWS_AS(VariableSet({"a", "a"}), DomainError);
}
