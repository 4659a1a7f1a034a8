#include "doctest.h"

#include <random>

#include "onegen/linear_matrix.hpp"

using namespace onegen;

namespace {

const PrimeField F101(101);

std::vector<std::uint32_t> v(std::initializer_list<std::uint32_t> xs)
{
    return xs;
}

} // namespace

TEST_CASE("hankel constructor")
{
    auto H = make_hankel(2, 3);
    CHECK(H.nvars() == 4);
    CHECK(H.to_string() == "[x1, x2, x3]\n[x2, x3, x4]\n");
    CHECK(make_hankel(1, 1).to_string() == "[x1]\n");
    auto H33 = make_hankel(3, 3);
    CHECK(H33.nvars() == 5);
    CHECK(H33.entry_string(2, 2) == "x5");
    CHECK_THROWS_AS(make_hankel(3, 2), DomainError);
}

TEST_CASE("generic and symmetric constructors")
{
    auto G = make_generic(2, 2);
    CHECK(G.nvars() == 4);
    CHECK(G.to_string() == "[x1, x2]\n[x3, x4]\n");
    CHECK(make_generic(1, 3).nvars() == 3);
    auto S = make_generic_symmetric(2);
    CHECK(S.nvars() == 3);
    CHECK(S.to_string() == "[x1, x2]\n[x2, x3]\n");
    auto S3 = make_generic_symmetric(3);
    CHECK(S3.nvars() == 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(S3.entry_string(i, j) == S3.entry_string(j, i));
}

TEST_CASE("a_matrix")
{
    auto H = make_hankel(2, 3);
    auto b10 = v({1, 0});
    auto A = a_matrix(H, F101, std::span<const std::uint32_t>(b10));
    CHECK(A == ScalarMatrix<PrimeField>(F101, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(scalar_rank(A) == 3);
    auto b01 = v({0, 1});
    auto B = a_matrix(H, F101, std::span<const std::uint32_t>(b01));
    CHECK(B == ScalarMatrix<PrimeField>(F101, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(scalar_rank(B) == 3);
    auto zero = v({0, 0});
    CHECK_THROWS_AS(a_matrix(H, F101, std::span<const std::uint32_t>(zero)), DomainError);

    // b = e_i: rows are the coefficient vectors of row i of M.
    auto G = make_generic(2, 3);
    auto e2 = v({0, 1});
    auto E = a_matrix(G, F101, std::span<const std::uint32_t>(e2));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(E(j, k) == F101.from_rational(G.coeff(k, 1, j)));
}

TEST_CASE("a_matrix is linear in b")
{
    std::mt19937_64 rng(3);
    auto M = make_generic_symmetric(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> b(3), c(3), comb(3);
        std::uint32_t alpha = rng() % 101, beta = rng() % 101;
        for (std::size_t i = 0; i < 3; ++i) {
            b[i] = rng() % 101;
            c[i] = rng() % 101;
            comb[i] = F101.add(F101.mul(alpha, b[i]), F101.mul(beta, c[i]));
        }
        b[0] = b[0] ? b[0] : 1;
        c[1] = c[1] ? c[1] : 1;
        if (std::all_of(comb.begin(), comb.end(), [](auto x) { return x == 0; }))
            continue;
        auto Ab = a_matrix(M, F101, std::span<const std::uint32_t>(b));
        auto Ac = a_matrix(M, F101, std::span<const std::uint32_t>(c));
        auto Acomb = a_matrix(M, F101, std::span<const std::uint32_t>(comb));
        for (std::size_t j = 0; j < Ab.rows(); ++j)
            for (std::size_t k = 0; k < Ab.cols(); ++k)
                CHECK(Acomb(j, k) == F101.add(F101.mul(alpha, Ab(j, k)), F101.mul(beta, Ac(j, k))));
    }
}

TEST_CASE("specialize")
{
    auto H = make_hankel(2, 3);
    auto ones = v({1, 1, 1, 1});
    auto S = specialize(H, F101, std::span<const std::uint32_t>(ones));
    CHECK(S == ScalarMatrix<PrimeField>(F101, {{1, 1, 1}, {1, 1, 1}}));
    CHECK(scalar_rank(S) == 1);
    auto geo = v({1, 2, 4, 8});
    auto T = specialize(H, F101, std::span<const std::uint32_t>(geo));
    CHECK(T == ScalarMatrix<PrimeField>(F101, {{1, 2, 4}, {2, 4, 8}}));
    CHECK(scalar_rank(T) == 1);
    auto zero = v({0, 0, 0, 0});
    CHECK(specialize(H, F101, std::span<const std::uint32_t>(zero)).is_zero());
    auto short_point = v({1, 2});
    CHECK_THROWS_AS(specialize(H, F101, std::span<const std::uint32_t>(short_point)), DomainError);
}

TEST_CASE("minor ideals")
{
    auto R22 = x_ring(make_hankel(2, 2), F101);
    auto m22 = minor_ideal(make_hankel(2, 2), 2, R22);
    REQUIRE(m22.size() == 1);
    CHECK(m22[0] == parse_polynomial("x1*x3 - x2^2", R22));

    auto H = make_hankel(2, 3);
    auto R = x_ring(H, F101);
    auto m = minor_ideal(H, 2, R);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == parse_polynomial("x1*x3 - x2^2", R));
    CHECK(m[1] == parse_polynomial("x1*x4 - x2*x3", R));
    CHECK(m[2] == parse_polynomial("x2*x4 - x3^2", R));

    auto t1 = minor_ideal(H, 1, R);
    CHECK(t1.size() == 6);
    CHECK(t1[0] == parse_polynomial("x1", R));

    LinearMatrix Z(2, 2, VariableSet::numbered("x", 3));
    Z.set_coeff(0, 0, 0, 1);
    Z.set_coeff(1, 0, 1, 1);
    Z.set_coeff(2, 1, 0, 1);
    auto RZ = x_ring(Z, F101);
    CHECK(minor_ideal(Z, 1, RZ).size() == 3);

    CHECK_THROWS_AS(minor_ideal(H, 0, R), DomainError);
    CHECK_THROWS_AS(minor_ideal(H, 3, R), DomainError);

    for (auto M : {make_hankel(3, 4), make_generic(3, 3), make_generic_symmetric(3)}) {
        auto RM = x_ring(M, F101);
        for (std::size_t t = 1; t <= M.m(); ++t)
            for (const auto &f : minor_ideal(M, t, RM)) {
                CHECK(f.is_homogeneous());
                CHECK(f.degree() == static_cast<int>(t));
            }
    }
    CHECK(minor_ideal(make_generic(3, 4), 3, x_ring(make_generic(3, 4), F101)).size() == 4);
    CHECK(minor_ideal(make_generic(3, 4), 2, x_ring(make_generic(3, 4), F101)).size() == 18);
}

TEST_CASE("determinant by expansion matches a hand-expanded 3x3")
{
    auto M = make_generic(3, 3);
    auto R = x_ring(M, RationalField{});
    auto det = minor_ideal(M, 3, R);
    REQUIRE(det.size() == 1);
    CHECK(det[0] == parse_polynomial("x1*x5*x9 - x1*x6*x8 - x2*x4*x9 + x2*x6*x7 + x3*x4*x8 - x3*x5*x7", R));
}

TEST_CASE("bilinear forms")
{
    auto H = make_hankel(2, 3);
    auto R = xy_ring(H, F101);
    auto forms = bilinear_forms(H, R);
    REQUIRE(forms.size() == 3);
    CHECK(forms[0] == parse_polynomial("y1*x1 + y2*x2", R));
    CHECK(forms[1] == parse_polynomial("y1*x2 + y2*x3", R));
    CHECK(forms[2] == parse_polynomial("y1*x3 + y2*x4", R));
    for (const auto &f : forms)
        CHECK(f.has_bidegree({1, 1}));

    auto G = make_generic(1, 2);
    auto RG = xy_ring(G, F101);
    auto g = bilinear_forms(G, RG);
    CHECK(g[0] == parse_polynomial("y1*x1", RG));
    CHECK(g[1] == parse_polynomial("y1*x2", RG));

    auto H22 = make_hankel(2, 2);
    auto R22 = xy_ring(H22, F101);
    auto h = bilinear_forms(H22, R22);
    CHECK(h[0] == parse_polynomial("y1*x1 + y2*x2", R22));
    CHECK(h[1] == parse_polynomial("y1*x2 + y2*x3", R22));

    CHECK_THROWS_AS(bilinear_forms(H, x_ring(H, F101)), DomainError);
}

TEST_CASE("scalar rank and kernels")
{
    auto I = ScalarMatrix<PrimeField>::identity(F101, 3);
    CHECK(scalar_rank(I) == 3);
    CHECK(scalar_kernel(I).empty());

    ScalarMatrix<PrimeField> A(F101, {{1, 2, 4}, {2, 4, 8}});
    CHECK(scalar_rank(A) == 1);
    auto left = scalar_left_kernel(A);
    REQUIRE(left.size() == 1);
    // Spanned by (2, -1): proportional with ratio left[0] / 2.
    CHECK(F101.mul(left[0][0], F101.neg(1)) == F101.mul(left[0][1], 2));
    auto right = scalar_kernel(A);
    CHECK(right.size() == 2);
    for (const auto &x : right)
        CHECK(F101.add(F101.add(x[0], F101.mul(2, x[1])), F101.mul(4, x[2])) == 0);

    CHECK(scalar_rank(ScalarMatrix<PrimeField>(F101, 2, 5)) == 0);
    CHECK(scalar_kernel(ScalarMatrix<PrimeField>(F101, 2, 5)).size() == 5);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        ScalarMatrix<PrimeField> B(PrimeField(7), r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                B(i, j) = rng() % 3 == 0 ? static_cast<std::uint32_t>(rng() % 7) : 0;
        auto ker = scalar_kernel(B);
        CHECK(scalar_rank(B) + ker.size() == c);
        for (const auto &x : ker) {
            ScalarMatrix<PrimeField> col(PrimeField(7), c, 1);
            for (std::size_t j = 0; j < c; ++j)
                col(j, 0) = x[j];
            CHECK((B * col).is_zero());
        }
    }
}

TEST_CASE("coefficient tensor reconstructs the entries")
{
    for (auto M : {make_hankel(3, 4), make_generic(2, 3), make_generic_symmetric(3)}) {
        auto R = x_ring(M, RationalField{});
        for (std::size_t i = 0; i < M.m(); ++i)
            for (std::size_t j = 0; j < M.n(); ++j) {
                auto e = M.entry(i, j, R);
                CHECK(e.degree() <= 1);
                for (std::size_t k = 0; k < M.nvars(); ++k) {
                    Monomial xk(M.nvars());
                    xk.set(k, 1);
                    CHECK(e.coefficient(xk) == M.coeff(k, i, j));
                }
            }
    }
}

TEST_CASE("reduction mod p refuses bad denominators")
{
    LinearMatrix M(1, 1, VariableSet::numbered("x", 1));
    M.set_coeff(0, 0, 0, Rational(1, 101));
    auto R = x_ring(M, F101);
    CHECK_THROWS_AS(M.entry(0, 0, R), ArithmeticError);
    CHECK(M.entry(0, 0, x_ring(M, PrimeField(7))).leading_coeff() == PrimeField(7).inv(PrimeField(7).from_int(101)));
}
