#include <doctest.h>

#include <cstdlib>

#include "floercone/error.hpp"
#include "floercone/homology.hpp"
#include "floercone/models.hpp"
#include "oracles.hpp"

using namespace floercone;

TEST_CASE("generator counts of -E_n")
{
    CHECK(build_minus_En(1).size() == 3);
    CHECK(build_minus_En(5).size() == 11);
    CHECK(build_minus_En(9).size() == 19);
    for (int n : {1, 3, 5, 7, 9, 11, 13})
        CHECK(check_complex(build_minus_En(n)).empty());
}

TEST_CASE("-E_n rejects even or non-positive n")
{
    CHECK_THROWS_AS(build_minus_En(4), Error);
    CHECK_THROWS_AS(build_minus_En(0), Error);
    CHECK_THROWS_AS(build_minus_En(-3), Error);
}

TEST_CASE("HFK-hat of -E_9 is (5, 9, 5)")
{
    auto const h = homology(build_minus_En(9), Flavor::hat_knot, {GradingKey::alexander});
    CHECK(h.rank_at({1}) == 5);
    CHECK(h.rank_at({0}) == 9);
    CHECK(h.rank_at({-1}) == 5);
}

TEST_CASE("mirror negates gradings and reverses arrows")
{
    auto const c = build_minus_En(5);
    auto const m = mirror(c);
    CHECK(check_complex(m).empty());
    REQUIRE(m.size() == c.size());
    for (std::size_t g = 0; g < c.size(); ++g)
    {
        CHECK(m.generator(g).name == c.generator(g).name);
        CHECK(m.generator(g).alexander == -c.generator(g).alexander);
        CHECK(m.generator(g).maslov_x4 == -c.generator(g).maslov_x4);
    }
    for (auto const& e : c.entries())
    {
        auto const it = m.boundary(e.to).find(e.from);
        REQUIRE(it != m.boundary(e.to).end());
        CHECK(it->second == e.u_power);
    }
    CHECK(mirror(m) == c);
}

TEST_CASE("flip is an involution negating Alexander")
{
    for (auto const& c : {staircase(), box("_2"), unknot(), build_minus_En(7), mirror(build_minus_En(5))})
    {
        auto const f = flip(c);
        for (std::size_t g = 0; g < c.size(); ++g)
        {
            auto const& x = c.generator(g);
            auto const& y = c.generator(f(g));
            CHECK(f(f(g)) == g);
            CHECK(y.alexander == -x.alexander);
            CHECK(y.maslov_x4 == x.maslov_x4 - 8 * x.alexander);
        }
    }
}

TEST_CASE("flip needs recognised generator names")
{
    FilteredComplex c;
    c.add_generator({"mystery", 1, 0});
    CHECK_THROWS_AS(flip(c), Error);
}

TEST_CASE("Alexander polynomials of the small models")
{
    CHECK(alexander_polynomial(unknot()) == std::map<int, long long>{{0, 1}});
    CHECK(alexander_polynomial(staircase()) == std::map<int, long long>{{-1, 1}, {0, -1}, {1, 1}});
}

TEST_CASE("HFK-hat is symmetric under A -> -A")
{
    for (int n : {1, 3, 5, 7, 9})
    {
        auto const h = homology(build_minus_En(n), Flavor::hat_knot,
                                {GradingKey::alexander, GradingKey::maslov_x4});
        for (auto const& [key, r] : h.ranks)
            CHECK(h.rank_at({-key[0], key[1] - 8 * key[0]}) == r);
    }
}

TEST_CASE("Alexander polynomial of -E_n matches the two-bridge oracle")
{
    for (int n : {1, 3, 5, 7, 9, 11, 13})
    {
        int const alpha = 2 * n + 1;
        int const beta = (n + 1) % 2 == 0 ? n + 1 - alpha : n + 1;
        auto const poly = alexander_polynomial(build_minus_En(n));
        CHECK(poly == oracle::two_bridge_alexander(alpha, beta));
        long long at_minus_one = 0;
        for (auto const& [e, c] : poly)
            at_minus_one += (e % 2 == 0) ? c : -c;
        CHECK(std::llabs(at_minus_one) == alpha);
        for (auto const& [e, c] : poly)
            CHECK(poly.at(-e) == c);
    }
}
