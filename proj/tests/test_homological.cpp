#include "doctest.h"

#include "onegen/homological.hpp"
#include "onegen/matrix_io.hpp"

using namespace onegen;

namespace {

const PrimeField F101(101);

std::vector<LinearMatrix> suite()
{
    return {make_hankel(2, 2), make_hankel(2, 3), make_hankel(2, 4), make_hankel(3, 3), make_hankel(3, 4),
            make_generic(2, 2), make_generic(2, 3), make_generic_symmetric(3)};
}

LinearMatrix from_rows(const std::string &rows, const std::string &vars)
{
    return parse_matrix_text("field: QQ\nvars: " + vars + "\nmatrix:\n" + rows).matrix;
}

// Independent exactness oracle: dense kernel and image dimensions of the
// graded blocks, assembled by multiplying out u * d[s][t].
template <class K>
std::vector<bool> brute_force_exactness(const FreeComplex<K> &C, int degree, std::size_t max_dim)
{
    const std::size_t nv = C.ring->nvars();
    auto piece = [&](std::size_t i) {
        std::vector<std::pair<std::size_t, Monomial>> basis;
        for (std::size_t t = 0; t < C.modules[i].rank(); ++t) {
            int e = degree + C.modules[i].twists[t];
            if (e >= 0)
                for (const auto &u : monomials_of_degree(nv, static_cast<std::uint32_t>(e)))
                    basis.emplace_back(t, u);
        }
        return basis;
    };
    auto block = [&](std::size_t i) {
        auto src = piece(i), dst = piece(i - 1);
        ScalarMatrix<PrimeField> A(F101, dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto &[t, u] = src[c];
            for (std::size_t s = 0; s < C.modules[i - 1].rank(); ++s) {
                auto image = C.d(i)[s][t] * Polynomial<K>::monomial(C.ring, u, C.ring->field.one());
                for (const auto &term : image.terms()) {
                    auto it = std::find(dst.begin(), dst.end(), std::make_pair(s, term.monomial));
                    A(static_cast<std::size_t>(it - dst.begin()), c) =
                        F101.from_rational(C.ring->field.to_rational(term.coeff));
                }
            }
        }
        return A;
    };
    std::vector<bool> exact;
    for (std::size_t i = 1; i <= C.length(); ++i) {
        auto dim = piece(i).size();
        REQUIRE(dim <= max_dim);
        std::size_t kernel = dim == 0 ? 0 : piece(i - 1).empty() ? dim : scalar_kernel(block(i)).size();
        std::size_t image = 0;
        if (i < C.length() && dim > 0 && !piece(i + 1).empty())
            image = scalar_rank(block(i + 1));
        exact.push_back(kernel == image);
    }
    return exact;
}

} // namespace

TEST_CASE("koszul examples")
{
    auto R = make_ring(F101, VariableSet::numbered("x", 2));
    auto g = parse_polynomial("x1", R);
    auto K1 = koszul_complex<PrimeField>({g}, R);
    CHECK(K1.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(K1.d(1)[0][0] == g);
    CHECK(K1.modules[1].twists == std::vector<int>{-1});

    auto g1 = parse_polynomial("x1", R), g2 = parse_polynomial("x2", R);
    auto K2 = koszul_complex<PrimeField>({g1, g2}, R);
    CHECK(K2.d(1) == PolyMatrix<PrimeField>{{g1, g2}});
    CHECK(K2.d(2) == PolyMatrix<PrimeField>{{-g2}, {g1}});

    auto H = make_hankel(2, 3);
    auto RXY = xy_ring(H, F101);
    auto KH = koszul_complex(bilinear_forms(H, RXY), RXY, Grading::bigraded);
    CHECK(KH.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(KH.modules[2].bidegrees[0] == std::pair<int, int>{-2, -2});
    CHECK(!nonzero_composite(KH));
    CHECK(degrees_consistent(KH));

    CHECK_THROWS_AS(koszul_complex<PrimeField>({g1 * g2}, RXY, Grading::bigraded), DomainError);
}

TEST_CASE("koszul height check")
{
    auto h = koszul_height_check(make_hankel(2, 3), F101);
    CHECK(h.ambient == 6);
    CHECK(h.expected_dimension == 3);
    CHECK(h.dimension == 3u);
    CHECK(h.height() == 3u);
    CHECK(h.passed);
    // The y = 0 locus has dimension r+1 = 4; that is why the check looks off y = 0.
    CHECK(h.unsaturated_dimension == 4u);

    auto one = koszul_height_check(make_generic(1, 1), F101);
    CHECK(one.dimension == 1u);
    CHECK(one.expected_dimension == 1);
    CHECK(one.passed);

    // Components {y1 = x3 = 0} and {x2 = 0, y1 x1 + y2 x3 = 0} both have dimension 3.
    auto corner = koszul_height_check(from_rows("x1, x2\nx3, 0\n", "x1, x2, x3"), F101);
    CHECK(corner.dimension == 3u);
    CHECK(corner.unsaturated_dimension == 3u);
    CHECK(corner.expected_dimension == 3);

    // Zero second row: y1 = 0 leaves a 3-dimensional component, expected 2.
    auto degenerate = koszul_height_check(from_rows("x1, x2\n0, 0\n", "x1, x2"), F101);
    CHECK(degenerate.dimension == 3u);
    CHECK(degenerate.expected_dimension == 2);
    CHECK(!degenerate.passed);

    for (const auto &M : suite())
        CHECK(koszul_height_check(M, F101).passed);
}

TEST_CASE("eagon-northcott examples")
{
    auto H22 = make_hankel(2, 2);
    auto R22 = x_ring(H22, F101);
    auto E22 = eagon_northcott(H22, R22);
    CHECK(E22.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(E22.d(1)[0][0] == parse_polynomial("x1*x3 - x2^2", R22));
    CHECK(E22.modules[1].twists == std::vector<int>{-2});

    auto H = make_hankel(2, 3);
    auto R = x_ring(H, F101);
    auto E = eagon_northcott(H, R);
    CHECK(E.ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(E.modules[1].twists == std::vector<int>{-2, -2, -2});
    CHECK(E.modules[2].twists == std::vector<int>{-3, -3});
    CHECK(E.d(1)[0] == minor_ideal(H, 2, R));
    // alpha = y1 then y2 (lex), single 3-subset: expand along row k.
    CHECK(E.d(2) == PolyMatrix<PrimeField>{{parse_polynomial("x3", R), parse_polynomial("x4", R)},
                                            {parse_polynomial("-x2", R), parse_polynomial("-x3", R)},
                                            {parse_polynomial("x1", R), parse_polynomial("x2", R)}});

    auto G = make_generic(3, 3);
    auto RG = x_ring(G, F101);
    auto EG = eagon_northcott(G, RG);
    CHECK(EG.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(EG.d(1)[0][0] == minor_ideal(G, 3, RG)[0]);

    CHECK_THROWS_AS(eagon_northcott(make_hankel(2, 3).transpose(), R), DomainError);
}

TEST_CASE("predicted betti numbers")
{
    auto B23 = predicted_betti(2, 3);
    CHECK(B23.at(1, -2) == 3);
    CHECK(B23.at(2, -3) == 2);
    CHECK(B23.at(0, 0) == 1);
    CHECK(predicted_betti(2, 2).at(1, -2) == 1);
    auto B34 = predicted_betti(3, 4);
    CHECK(B34.at(1, -3) == 4);
    CHECK(B34.at(2, -4) == 3);
}

TEST_CASE("betti tables, regularity and grids")
{
    auto H = make_hankel(2, 3);
    auto B = betti_table(eagon_northcott(H, x_ring(H, F101)));
    CHECK(B == predicted_betti(2, 3));
    CHECK(regularity(B) == 1);
    CHECK(B.to_grid() == "       0 1 2\n"
                         "total: 1 3 2\n"
                         "    0: 1 . .\n"
                         "    1: . 3 2\n");
    CHECK(B.to_string() == "{0:[0]=1, 1:[-2]=3, 2:[-3]=2}");

    auto H34 = make_hankel(3, 4);
    CHECK(regularity(betti_table(eagon_northcott(H34, x_ring(H34, F101)))) == 2);

    auto R = make_ring(F101, VariableSet::numbered("x", 3));
    std::vector<Polynomial<PrimeField>> xs;
    for (std::size_t i = 0; i < 3; ++i)
        xs.push_back(Polynomial<PrimeField>::variable(R, i));
    CHECK(regularity(betti_table(koszul_complex(xs, R))) == 0);
    CHECK_THROWS_AS(regularity(BettiTable{}), DomainError);
}

TEST_CASE("hilbert series of complexes")
{
    auto H = make_hankel(2, 3);
    auto h = hilbert_from_complex(eagon_northcott(H, x_ring(H, F101)));
    CHECK(h.to_string() == "(1 - 3t^2 + 2t^3)/(1 - t)^4");
    CHECK(h.reduced().to_string() == "(1 + 2t)/(1 - t)^2");
    CHECK(a_invariant(h) == -1);

    auto H22 = make_hankel(2, 2);
    CHECK(hilbert_from_complex(eagon_northcott(H22, x_ring(H22, F101))).to_string() == "(1 - t^2)/(1 - t)^3");

    FreeComplex<PrimeField> trivial;
    trivial.ring = make_ring(F101, VariableSet::numbered("x", 4));
    trivial.modules.push_back(GradedFreeModule{{0}, {}});
    CHECK(hilbert_from_complex(trivial) == HilbertSeries{{1}, 4});
}

TEST_CASE("dimension formula")
{
    auto a = dim_formula_check(make_hankel(3, 4), 2);
    CHECK(a.dimension == 4);
    CHECK(a.lower_bound == 4);
    CHECK(a.equality);
    CHECK(a.bound_holds);
    auto b = dim_formula_check(make_generic(2, 3), 2);
    CHECK(b.dimension == 4);
    CHECK(b.lower_bound == 2);
    CHECK(b.bound_holds);
    CHECK(!b.equality);
    auto c = dim_formula_check(make_hankel(2, 2), 1);
    CHECK(c.dimension == 2);
    CHECK(c.equality);
    CHECK(c.expected_dimension == 2);
}

TEST_CASE("graded exactness examples")
{
    auto H = make_hankel(2, 3);
    auto E = eagon_northcott(H, x_ring(H, F101));
    auto rep = graded_exactness(E, 101, 5);
    CHECK(rep.all_exact());
    CHECK(rep.cells.size() == 2 * 6);
    for (std::uint32_t d = 0; d <= 5; ++d)
        CHECK(rep.h0[d] == 3 * d + 1);

    auto R = make_ring(F101, VariableSet::numbered("x", 4));
    std::vector<Polynomial<PrimeField>> xs;
    for (std::size_t i = 0; i < 4; ++i)
        xs.push_back(Polynomial<PrimeField>::variable(R, i));
    auto K = koszul_complex(xs, R);
    auto kr = graded_exactness(K, 101, 6);
    CHECK(kr.all_exact());
    CHECK(kr.h0[0] == 1);
    CHECK(kr.h0[3] == 0);

    auto broken = E;
    broken.d(1)[0][0] = Polynomial<PrimeField>(broken.ring);
    auto br = graded_exactness(broken, 101, 5);
    CHECK(!br.all_exact());
    REQUIRE(br.first_failure());
    CHECK(br.first_failure()->position == 1);
    CHECK(br.first_failure()->degree == 2);

    CHECK_THROWS_AS(graded_exactness(E, 101, 40, 1000), ResourceLimit);
    CHECK_THROWS_AS(graded_exactness(E, 7, 3), DomainError);
}

TEST_CASE("rational complexes reduce mod p")
{
    auto H = make_hankel(2, 4);
    auto E = eagon_northcott(H, x_ring(H, RationalField{}));
    CHECK(graded_exactness(E, 101, 6).all_exact());
}

TEST_CASE("property: d^2 = 0, degrees, Betti and Hilbert agreement on the suite")
{
    for (const auto &M : suite()) {
        CAPTURE(M.source());
        auto R = x_ring(M, F101);
        auto E = eagon_northcott(M, R);
        CHECK(!nonzero_composite(E));
        CHECK(degrees_consistent(E));
        auto B = betti_table(E);
        CHECK(B == predicted_betti(M.m(), M.n()));
        CHECK(regularity(B) == static_cast<int>(M.m()) - 1);
        auto h = hilbert_from_complex(E);
        auto ideal = hilbert_series(Ideal<PrimeField>(R, minor_ideal(M, M.m(), R)));
        CHECK(h.coefficients(10) == ideal.coefficients(10));
        if (M.m() >= 2)
            CHECK(a_invariant(h) < 0);

        auto RXY = xy_ring(M, F101);
        auto K = koszul_complex(bilinear_forms(M, RXY), RXY, Grading::bigraded);
        CHECK(!nonzero_composite(K));
        CHECK(degrees_consistent(K));
    }
}

TEST_CASE("property: graded exactness agrees with a brute-force oracle")
{
    std::vector<LinearMatrix> small = {make_hankel(2, 3), make_hankel(2, 2), make_generic(2, 3), make_hankel(3, 4)};
    for (const auto &M : small) {
        auto E = eagon_northcott(M, x_ring(M, F101));
        auto broken = E;
        broken.d(E.length())[0][0] = Polynomial<PrimeField>(broken.ring);
        for (const auto *C : {&E, &broken})
            for (int d = 0; d <= 4; ++d) {
                auto rep = graded_exactness(*C, 101, d);
                auto oracle = brute_force_exactness(*C, d, 200);
                for (std::size_t i = 0; i < oracle.size(); ++i)
                    CHECK(rep.cells[static_cast<std::size_t>(d) * oracle.size() + i].exact == oracle[i]);
            }
    }
}
