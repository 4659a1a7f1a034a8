#include "doctest.h"

#include "onegen/cohomology.hpp"
#include "onegen/linear_matrix.hpp"
#include "oracles.hpp"

using namespace onegen;
using oracle::cech_oracle;

TEST_CASE("h_dim examples")
{
    CHECK(h_dim({2, 0, 2}) == 6);
    CHECK(h_dim({1, 1, -2}) == 1);
    CHECK(h_dim({3, 2, -5}) == 0);
    CHECK(h_dim({1, 1, -3}) == 2);
    CHECK(h_dim({2, 2, -3}) == 1);
    CHECK(h_dim({2, 2, -4}) == 3);
    CHECK(h_dim({0, 0, -3}) == 1);
    CHECK(h_dim({0, 0, 5}) == 1);
    CHECK(h_dim({2, 5, 0}) == 0);
    CHECK_THROWS_AS(h_dim({-1, 0, 0}), DomainError);
    CHECK_THROWS_AS(h_dim({1, -1, 0}), DomainError);
}

TEST_CASE("Cech oracle reproduces the examples")
{
    CHECK(cech_oracle(2, 2) == std::vector<Count>{6, 0, 0});
    CHECK(cech_oracle(1, -2) == std::vector<Count>{0, 1});
    CHECK(cech_oracle(3, -5)[2] == 0);
}

TEST_CASE("pushforward shape")
{
    using Shape = std::vector<std::pair<int, Count>>;
    CHECK(pushforward_shape(2, 3) == Shape{{0, 1}, {-2, 3}, {-3, 2}});
    CHECK(pushforward_shape(2, 2) == Shape{{0, 1}, {-2, 1}});
    CHECK(pushforward_shape(3, 3) == Shape{{0, 1}, {-3, 1}});
    CHECK(pushforward_shape(3, 4) == Shape{{0, 1}, {-3, 4}, {-4, 3}});
    CHECK(pushforward_shape(1, 3) == Shape{{0, 1}, {-1, 3}, {-2, 3}, {-3, 1}});
    CHECK_THROWS_AS(pushforward_shape(3, 2), DomainError);
}

TEST_CASE("property: closed form equals the Cech oracle (s <= 3, |d| <= 6)")
{
    for (int s = 0; s <= 3; ++s)
        for (int d = -6; d <= 6; ++d) {
            auto oracle = cech_oracle(s, d);
            for (int i = 0; i <= s + 1; ++i) {
                CAPTURE(s);
                CAPTURE(i);
                CAPTURE(d);
                Count expected = i <= s ? oracle[static_cast<std::size_t>(i)] : Count(0);
                CHECK(h_dim({s, i, d}) == expected);
            }
        }
}

TEST_CASE("property: Serre duality symmetry (|d| <= 12, s <= 6)")
{
    for (int s = 0; s <= 6; ++s)
        for (int d = -12; d <= 12; ++d)
            CHECK(h_dim({s, s, d}) == h_dim({s, 0, -d - s - 1}));
}

TEST_CASE("property: b_i closed form is a binomial product (m <= n <= 8)")
{
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            auto shape = pushforward_shape(m, n);
            REQUIRE(shape.size() == n - m + 2);
            for (std::size_t i = 1; i <= n - m + 1; ++i) {
                auto ii = static_cast<std::int64_t>(i), mm = static_cast<std::int64_t>(m);
                CHECK(shape[i].first == -static_cast<int>(m + i - 1));
                CHECK(shape[i].second == binomial(static_cast<std::int64_t>(n), ii + mm - 1) * binomial(ii + mm - 2, mm - 1));
            }
        }
}
