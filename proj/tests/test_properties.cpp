#include <doctest.h>

#include <random>

#include "floercone/contact.hpp"
#include "floercone/homology.hpp"
#include "floercone/models.hpp"
#include "floercone/reduction.hpp"
#include "oracles.hpp"

using namespace floercone;

namespace {

std::map<int, int> count_by_maslov(FilteredComplex const& c, int modulus = 0)
{
    std::map<int, int> m;
    for (auto const& g : c.generators())
        ++m[modulus ? static_cast<int>(positive_mod(g.maslov_x4, modulus)) : g.maslov_x4];
    return m;
}

// Applies random slides g -> g + U^k h that respect both filtrations and
// the Maslov grading.
FilteredComplex scramble(FilteredComplex const& c, std::mt19937_64& rng, int rounds)
{
    WorkComplex w(c);
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    for (int i = 0; i < rounds; ++i)
    {
        std::size_t const g = pick(rng), h = pick(rng);
        if (g == h)
            continue;
        int const diff = c.generator(h).maslov_x4 - c.generator(g).maslov_x4;
        if (diff < 0 || diff % 8 != 0)
            continue;
        int const k = diff / 8;
        if (c.generator(h).alexander - k > c.generator(g).alexander)
            continue;
        w.slide(g, h, k);
    }
    return w.result().complex;
}

} // namespace

TEST_CASE("ranks do not depend on the cancellation order")
{
    std::mt19937_64 rng(oracle::seed());
    for (int n : {3, 5, 9})
    {
        auto const c = build_minus_En(n);
        auto const reference = count_by_maslov(reduce(c, ReduceMode::full_field).complex, 8);
        auto const filtered = count_by_maslov(reduce(c, ReduceMode::filtered).complex);
        for (int trial = 0; trial < 20; ++trial)
        {
            CHECK(count_by_maslov(reduce(c, ReduceMode::full_field, rng()).complex, 8) == reference);
            CHECK(count_by_maslov(reduce(c, ReduceMode::filtered, rng()).complex) == filtered);
        }
    }
}

TEST_CASE("filtered changes of basis preserve the invariants")
{
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int n : {3, 5, 7})
    {
        auto const c = build_minus_En(n);
        auto const keys = std::vector<GradingKey>{GradingKey::maslov_x4, GradingKey::alexander};
        auto const hat_knot = homology(c, Flavor::hat_knot, keys);
        auto const knot_minus = homology(c, Flavor::knot_minus, keys);
        auto const hat = homology(c, Flavor::hat, {GradingKey::maslov_x4});
        for (int trial = 0; trial < 20; ++trial)
        {
            auto const s = scramble(c, rng, 30);
            CHECK(check_complex(s).empty());
            CHECK(homology(s, Flavor::hat_knot, keys) == hat_knot);
            CHECK(homology(s, Flavor::hat, {GradingKey::maslov_x4}) == hat);
            CHECK(homology(s, Flavor::knot_minus, keys).total() == knot_minus.total());
        }
    }
}

TEST_CASE("dense oracle agrees with reduction on scrambled complexes")
{
    std::mt19937_64 rng(oracle::seed() + 2);
    for (int trial = 0; trial < 20; ++trial)
    {
        auto const s = scramble(build_minus_En(5), rng, 40);
        std::map<int, int> ours;
        for (auto const& [key, r] : homology(s, Flavor::hat, {GradingKey::maslov_x4}).ranks)
            ours[key[0]] = r;
        CHECK(ours == oracle::graded_homology(s, true, false));
        CHECK(homology(s, Flavor::hat, {GradingKey::maslov_x4}).total() == oracle::total_homology(s, true));
    }
}

TEST_CASE("DGS round trip on random rationals")
{
    std::mt19937_64 rng(oracle::seed() + 3);
    std::uniform_int_distribution<int> num(1, 9999), den(1, 100);
    for (int trial = 0; trial < 500; ++trial)
    {
        Rational const r = ratio(-num(rng), den(rng));
        if (r <= -100)
            continue;
        auto const x = negative_expansion(r);
        for (int a : x.a)
            CHECK(a <= -2);
        std::vector<int> c = x.a;
        c[0] += 1;
        CHECK(oracle::evaluate_negative_fraction(c) == r);
        CHECK(evaluate(x) == r);
        bool const all_two = c[0] == -1 && std::all_of(x.a.begin() + 1, x.a.end(), [](int a) { return a == -2; });
        CHECK(characterize_all_minus_two(r) == all_two);

        Rational const pos = ratio(num(rng), den(rng));
        CHECK(evaluate(positive_expansion(pos)) == pos);
    }
}
