#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "floercone/cone.hpp"
#include "floercone/contact.hpp"
#include "floercone/dual_knot.hpp"
#include "floercone/error.hpp"
#include "floercone/homology.hpp"
#include "floercone/models.hpp"
#include "oracles.hpp"

using namespace floercone;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, std::string const& what)
    {
        if (!ok && pass)
            detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

ErrorKind error_kind(std::function<void()> const& fn)
{
    try
    {
        fn();
    }
    catch (Error const& e)
    {
        return e.kind();
    }
    return ErrorKind::Parse;
}

ReducedForm dual_normal_form(int n)
{
    auto const c = build_minus_En(n);
    return normal_form(build_dual_cone(c, flip(c), 1));
}

void normal_form_golden(Outcome& out)
{
    for (int n : {5, 7, 9, 11, 13})
    {
        auto const t0 = Clock::now();
        auto const c = build_minus_En(n);
        auto const dc = build_dual_cone(c, flip(c), 1);
        auto const nf = normal_form(dc).complex;
        double const secs = seconds_since(t0);
        int const m = (n + 1) / 2;
        std::string const tag = "n=" + std::to_string(n);
        out.require(secs < 5.0, tag + " took " + std::to_string(secs) + " s");
        out.require(nf.size() == static_cast<std::size_t>(1 + 4 * m), tag + " generator count");
        auto const o = nf.find("O");
        out.require(o && nf.generator(*o).alexander == 0 && nf.boundary(*o).empty(), tag + " O summand");
        for (int i = 1; i <= m; ++i)
        {
            auto const is = std::to_string(i);
            auto const xh = nf.find("xh_" + is), yh = nf.find("yh_" + is);
            auto const xv = nf.find("xv_" + is), yv = nf.find("yv_" + is);
            if (!xh || !yh || !xv || !yv)
            {
                out.require(false, tag + " missing summand " + is);
                continue;
            }
            // H: y at (1,0), x at (0,0); V: y at (0,1), x at (0,0)
            out.require(nf.generator(*xh).alexander == 0 && nf.generator(*yh).alexander == -1 &&
                            nf.boundary(*yh) == Chain{{*xh, 1}} && nf.boundary(*xh).empty(),
                        tag + " H_" + is);
            out.require(nf.generator(*xv).alexander == 0 && nf.generator(*yv).alexander == 1 &&
                            nf.boundary(*yv) == Chain{{*xv, 0}} && nf.boundary(*xv).empty(),
                        tag + " V_" + is);
        }
        auto const keys = std::vector<GradingKey>{GradingKey::alexander, GradingKey::maslov_x4};
        out.require(homology(nf, Flavor::hat_knot, keys) == homology(dc.complex, Flavor::hat_knot, keys),
                    tag + " HFK-hat differs from the dual cone");
        out.require(homology(nf, Flavor::knot_minus, keys) == homology(dc.complex, Flavor::knot_minus, keys),
                    tag + " HFK^- differs from the dual cone");
        out.detail << tag << ": " << nf.size() << " gens " << static_cast<int>(secs * 1000) << " ms; ";
    }
}

void g_map_golden(Outcome& out)
{
    for (int n : {5, 7, 9, 11, 13})
    {
        auto const nf = dual_normal_form(n).complex;
        auto const g = g_map(nf, nf.max_alexander());
        std::size_t const m = static_cast<std::size_t>((n + 1) / 2);
        out.require(g.domain_dimension == m && g.rank == m && g.injective(),
                    "n=" + std::to_string(n) + " rank " + std::to_string(g.rank));
        out.detail << "n=" << n << ": rank " << g.rank << "/" << g.domain_dimension << "; ";
    }
}

void truncation_iso(Outcome& out)
{
    auto const nf = dual_normal_form(5).complex;
    auto const model = mirror(nf);
    out.require(model.max_alexander() == 1, "input genus is not 1");
    for (int k = 1; k <= 6; ++k)
    {
        auto const t0 = Clock::now();
        auto const full = hat(build_cone(model, flip(model), -(k + 1), k, ConeRange::full));
        auto const cut = truncate(full);
        auto const rep = include_B(cut, -1);
        auto const rep_full = include_B(full, -1);
        double const secs = seconds_since(t0);
        std::string const tag = "k=" + std::to_string(k);
        out.require(rep.source_dimension == rep.target_dimension, tag + " unequal ranks");
        out.require(rep.isomorphism() && rep_full.isomorphism(), tag + " not bijective");
        out.require(rep.matrix.rank() == rep.source_dimension, tag + " matrix rank");
        out.require(secs < 5.0, tag + " too slow");
        out.detail << tag << ": " << rep.rank << "x" << rep.source_dimension << "; ";
    }
}

void dgs_round_trip(Outcome& out)
{
    std::mt19937_64 rng(oracle::seed());
    std::uniform_int_distribution<int> num(1, 9999), den(1, 100);
    int tested = 0;
    while (tested < 500)
    {
        Rational const r = ratio(-num(rng), den(rng));
        if (r <= -100)
            continue;
        ++tested;
        auto const x = negative_expansion(r);
        bool all_le = true, all_two = true;
        for (int a : x.a)
        {
            all_le = all_le && a <= -2;
            all_two = all_two && a == -2;
        }
        out.require(all_le, "coefficient above -2 for " + to_string(r));
        std::vector<int> c = x.a;
        c[0] += 1;
        out.require(oracle::evaluate_negative_fraction(c) == r, "round trip " + to_string(r));
        out.require(characterize_all_minus_two(r) == all_two, "all -2 test " + to_string(r));
    }
    auto const two = negative_expansion(-2);
    out.require(two.stabilizations == std::vector<int>{1}, "r=-2 stabilizations");
    for (int n = 1; n <= 10; ++n)
    {
        auto const x = positive_expansion(ratio(n + 1, n));
        out.require(x.e == 1 && !x.stabilizations.empty() && x.stabilizations[0] == n,
                    "(n+1)/n with n=" + std::to_string(n));
    }
    out.detail << tested << " random rationals, seed " << oracle::seed() << "; ";
}

void formula_arithmetic(Outcome& out)
{
    LegendrianData const p{0, -1, 1, "P'"};
    for (int k = 1; k <= 6; ++k)
    {
        out.require(locate_contact_class(p, k + 1, k).t == -1, "t for k=" + std::to_string(k));
        out.require(locate_contact_class(p, -(k + 1), k).t == -1, "t for p<0, k=" + std::to_string(k));
        out.require(c1_surgery_cobordism(p, k + 1, k) == 0, "c1 for k=" + std::to_string(k));
    }
    out.detail << "k=1..6; ";
}

struct ModelCase
{
    std::string name;
    FilteredComplex complex;
};

void oracle_equivalence(Outcome& out)
{
    std::vector<ModelCase> models{{"unknot", unknot()}, {"staircase", staircase()},
                                  {"mirror staircase", mirror(staircase())}};
    for (int n : {1, 3, 5, 7, 9, 11})
    {
        models.push_back({"-E_" + std::to_string(n), build_minus_En(n)});
        models.push_back({"E_" + std::to_string(n), mirror(build_minus_En(n))});
    }
    for (int n : {5, 7, 9, 11})
        models.push_back({"dual " + std::to_string(n), dual_normal_form(n).complex});

    int cones = 0;
    auto const t0 = Clock::now();
    for (auto const& [name, c] : models)
    {
        if (c.size() > 25)
            continue;
        for (int p = -5; p <= 5; ++p)
            for (int q = 1; q <= 3; ++q)
            {
                if (p == 0 || std::gcd(p, q) != 1)
                    continue;
                auto const cone = build_cone(c, flip(c), p, q);
                auto const hat_cone = hat(cone);
                ++cones;
                for (int i = 0; i < std::abs(p); ++i)
                {
                    std::string const tag = name + " " + std::to_string(p) + "/" + std::to_string(q) +
                                            " sector " + std::to_string(i);
                    std::map<int, int> ours;
                    for (auto const& [key, r] : sector_homology(hat_cone, i).ranks)
                        ours[key[0]] = r;
                    out.require(ours == oracle::graded_homology(hat_cone.sector(i), true, false), tag + " hat");

                    std::map<int, int> inf;
                    for (auto const& [key, r] : sector_homology(cone, i).ranks)
                        inf[key[0]] = r;
                    out.require(inf == oracle::graded_homology(cone.sector(i), false, true), tag + " infinity");
                }
            }
    }
    out.detail << cones << " cones in " << static_cast<int>(seconds_since(t0) * 1000) << " ms; ";
}

void invariant_suites(Outcome& out)
{
    auto const t0 = Clock::now();
    std::vector<FilteredComplex> complexes{unknot(), staircase(), box("_1"), mirror(staircase())};
    for (int n : {1, 3, 5, 7, 9, 11, 13})
    {
        complexes.push_back(build_minus_En(n));
        complexes.push_back(mirror(build_minus_En(n)));
    }
    std::size_t const knots = complexes.size();
    for (int n : {5, 7})
    {
        auto const c = build_minus_En(n);
        complexes.push_back(build_dual_cone(c, flip(c), 1).complex);
        complexes.push_back(dual_normal_form(n).complex);
        for (auto [p, q] : {std::pair{-2, 1}, {3, 2}, {-5, 3}})
            complexes.push_back(build_cone(c, flip(c), p, q).complex);
    }
    int checked = 0;
    for (auto const& c : complexes)
    {
        for (auto const& v : check_complex(c))
            out.require(false, v.message);
        ++checked;
    }
    for (std::size_t i = 0; i < knots; ++i)
    {
        auto const h = homology(complexes[i], Flavor::hat_knot, {GradingKey::alexander, GradingKey::maslov_x4});
        for (auto const& [key, r] : h.ranks)
            out.require(h.rank_at({-key[0], key[1] - 8 * key[0]}) == r, "HFK-hat symmetry");
    }
    for (int n : {1, 3, 5, 7, 9, 11, 13})
    {
        auto const poly = alexander_polynomial(build_minus_En(n));
        long long at_minus_one = 0;
        for (auto const& [e, coeff] : poly)
        {
            at_minus_one += (e % 2 == 0) ? coeff : -coeff;
            out.require(poly.count(-e) && poly.at(-e) == coeff, "Alexander symmetry");
        }
        int const alpha = 2 * n + 1;
        out.require(std::llabs(at_minus_one) == alpha, "determinant for n=" + std::to_string(n));
        int const beta = (n + 1) % 2 == 0 ? n + 1 - alpha : n + 1;
        out.require(poly == oracle::two_bridge_alexander(alpha, beta), "two-bridge fraction for n=" + std::to_string(n));
    }
    double const secs = seconds_since(t0);
    out.require(secs < 60.0, "suite too slow");
    out.detail << checked << " complexes, " << static_cast<int>(secs * 1000) << " ms; ";
}

void pipeline_end_to_end(Outcome& out)
{
    for (int n : {5, 7})
        for (auto const& r : {Rational(-2), Rational(-3), ratio(-5, 2), ratio(-1, 2), ratio(-3, 2)})
        {
            std::string const tag = "n=" + std::to_string(n) + " r=" + to_string(r);
            auto const rep = distinctness_pipeline(n, r);
            out.require(rep.distinct, tag + " not distinct");
            bool has_computed = false;
            for (auto const& s : rep.steps)
            {
                has_computed = has_computed || s.computed;
                out.require(!s.values.empty() && !s.fact.empty(), tag + " step without values: " + s.label);
            }
            out.require(has_computed, tag + " no computed step");
            out.detail << tag << " -> " << rep.route << "; ";
        }
    for (int n : {5, 7})
        out.require(error_kind([n] { distinctness_pipeline(n, -1); }) == ErrorKind::ExcludedCoefficient,
                    "r=-1 not rejected");
    for (int m : {3, 5, 7})
        out.require(error_kind([m] { reduce_emn(m, -m); }) == ErrorKind::ExcludedCoefficient,
                    "r=-m not rejected for m=" + std::to_string(m));
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> const criteria{
        {"dual knot normal form O + H + V", normal_form_golden},
        {"G map injective in the top Alexander grading", g_map_golden},
        {"truncation: include_B at t=-1 is an isomorphism for k=1..6", truncation_iso},
        {"DGS expansion round trip", dgs_round_trip},
        {"locator and c1 arithmetic", formula_arithmetic},
        {"sector homology equals the dense GF(2) oracle", oracle_equivalence},
        {"complex, symmetry and Alexander polynomial invariants", invariant_suites},
        {"distinctness pipeline end to end", pipeline_end_to_end},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome out;
        try
        {
            criteria[i].second(out);
        }
        catch (std::exception const& e)
        {
            out.require(false, std::string("exception: ") + e.what());
        }
        failures += out.pass ? 0 : 1;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
                  << " [" << out.detail.str() << "]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
