#include "floercone/contact.hpp"

#include <numeric>

#include "floercone/cone.hpp"
#include "floercone/dual_knot.hpp"
#include "floercone/error.hpp"
#include "floercone/models.hpp"

namespace floercone {

namespace {

// Negative continued fraction [c_1, c_2, ...]^- with c_j <= -2 for j >= 2.
std::vector<int> negative_fraction(Rational x)
{
    std::vector<int> c;
    for (;;)
    {
        BigInt const head = is_integer(x) ? numerator(x) : floor(x);
        c.push_back(head.convert_to<int>());
        if (is_integer(x))
            return c;
        x = 1 / (Rational(head) - x);
    }
}

std::string list_string(std::vector<int> const& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

} // namespace

Rational evaluate_continued_fraction(std::vector<int> const& c)
{
    if (c.empty())
        throw Error(ErrorKind::BadParameter, "empty continued fraction");
    Rational value(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;)
        value = c[i] - 1 / value;
    return value;
}

DgsExpansion negative_expansion(Rational const& r)
{
    if (r >= 0)
        throw Error(ErrorKind::BadCoefficient, "negative expansion needs r < 0, got " + to_string(r));
    DgsExpansion x;
    x.r = r;
    x.kind = ExpansionKind::negative;
    x.a = negative_fraction(r);
    x.a[0] -= 1;
    for (int a : x.a)
    {
        x.stabilizations.push_back(std::abs(a + 2));
        x.surgery_signs.push_back(-1);
    }
    return x;
}

DgsExpansion positive_expansion(Rational const& r)
{
    if (r <= 0)
        throw Error(ErrorKind::BadCoefficient, "positive expansion needs r > 0, got " + to_string(r));
    BigInt const x = numerator(r);
    BigInt const y = denominator(r);
    DgsExpansion out;
    out.r = r;
    out.kind = ExpansionKind::positive;
    BigInt e = y / x;
    if (e * x < y)
        ++e;
    out.e = e.convert_to<int>();
    out.surgery_signs.assign(out.e, +1);
    BigInt const rest = y - e * x;
    if (rest == 0)
        return out;
    out.a = negative_fraction(ratio(x, rest));
    for (std::size_t j = 0; j < out.a.size(); ++j)
    {
        out.stabilizations.push_back(std::abs(out.a[j] + (j == 0 ? 1 : 2)));
        out.surgery_signs.push_back(-1);
    }
    return out;
}

Rational evaluate(DgsExpansion const& x)
{
    if (x.kind == ExpansionKind::negative)
    {
        auto c = x.a;
        c.at(0) += 1;
        return evaluate_continued_fraction(c);
    }
    if (x.a.empty())
        return Rational(1, x.e);
    Rational const w = evaluate_continued_fraction(x.a);
    return 1 / (1 / w + x.e);
}

bool characterize_all_minus_two(Rational const& r) { return r < 0 && numerator(r) == -1; }

Rational smooth_coefficient(LegendrianData const& l, Rational const& r)
{
    if (r == 0)
        throw Error(ErrorKind::ZeroCoefficient, "contact surgery coefficient 0");
    Rational const pq = l.tb + r;
    if (pq == 0)
        throw Error(ErrorKind::ZeroCoefficient, "smooth coefficient tb + r = 0 (excluded)");
    return pq;
}

ContactLocator locate_contact_class(LegendrianData const& l, int p, int q)
{
    if (q <= 0 || p == 0 || std::gcd(p, q) != 1)
        throw Error(ErrorKind::BadCoefficients, "need q > 0, p != 0, gcd(p, q) = 1");
    int const twice = (l.rot - l.tb + 1) * q - 2;
    if (twice % 2 != 0)
        throw Error(ErrorKind::ParityError, "2t = " + std::to_string(twice) + " is odd");
    ContactLocator loc;
    loc.t = twice / 2;
    loc.s = static_cast<int>(floor_div(loc.t, q));
    loc.sector = static_cast<int>(positive_mod(loc.t, std::abs(p)));
    return loc;
}

int c1_surgery_cobordism(LegendrianData const& l, int p, int q) { return p + (l.rot - l.tb) * q - 1; }

int c1_positive_integer_surgery(LegendrianData const& l, int n) { return l.order * (l.rot + n - 1); }

int c1_plus_one_surgery(LegendrianData const& s) { return s.rot; }

EmnReduction reduce_emn(int m, Rational const& r)
{
    if (m < 1 || m % 2 == 0)
        throw Error(ErrorKind::BadParameter, "m must be odd and positive");
    if (r >= 0)
        throw Error(ErrorKind::BadCoefficient, "r must be negative");
    if (r == -m)
        throw Error(ErrorKind::ExcludedCoefficient, "r = -m gives a manifold with b_1 > 0");
    EmnReduction out;
    out.value = r - m + 1;
    out.excluded_target = out.value == -1;
    return out;
}

std::string PipelineReport::verdict() const
{
    return std::string("distinct: ") + (distinct ? "yes" : "no") + " (" + route + ")";
}

namespace {

bool run_case_i(PipelineReport& report, ReducedForm& nf)
{
    int const n = report.n;
    LegendrianData const L{1, 0, 1, "L"};
    LegendrianData const stabilized = L.stabilized();
    int const s = loss_grading(stabilized.tb, stabilized.rot);
    report.steps.push_back({"case i: contact (-2) = Legendrian surgery on the stabilized knot", true,
                            "smooth (-1)-surgery; LOSS classes of -Y sit in Alexander grading " +
                                std::to_string(s),
                            {{"smooth p/q", to_string(smooth_coefficient(L, -2))},
                             {"tb, rot of stabilized knot", std::to_string(stabilized.tb) + ", " +
                                                                std::to_string(stabilized.rot)},
                             {"LOSS Alexander grading", std::to_string(s)}}});

    auto const model = build_minus_En(n);
    nf = normal_form(build_dual_cone(model, flip(model), 1));
    int const half = (n + 1) / 2;
    bool const shape = nf.complex.size() == static_cast<std::size_t>(1 + 4 * half);
    report.steps.push_back({"case i: dual knot complex of -E_n under +1 surgery", shape,
                            "filtered normal form O + H_1..H_m + V_1..V_m",
                            {{"generators", std::to_string(nf.complex.size())},
                             {"H and V summands", std::to_string(half)}}});

    auto const g = g_map(nf.complex, s);
    report.steps.push_back({"case i: G map in the LOSS grading", g.injective(),
                            "G: HFK^- -> HF-hat injective in Alexander grading " + std::to_string(s),
                            {{"domain dimension", std::to_string(g.domain_dimension)},
                             {"rank", std::to_string(g.rank)}}});

    bool const distinct = distinct_classes(nf.complex, s, {"yv_1"}, {"yv_1", "yv_2"});
    report.steps.push_back({"case i: distinct contact classes", distinct,
                            "G(yv_1) != G(yv_1 + yv_2) in HF-hat(-Y)",
                            {{"class L_1", "yv_1"}, {"class L_2", "yv_1 + yv_2"}}});
    return shape && g.injective() && distinct;
}

bool run_case_ii(PipelineReport& report, ReducedForm const& nf, int k)
{
    LegendrianData const P{0, -1, 1, "P'"};
    Rational const contact(k + 1, k);
    auto const pq = smooth_coefficient(P, contact);
    auto const loc = locate_contact_class(P, -(k + 1), k);
    int const c1 = c1_surgery_cobordism(P, k + 1, k);
    report.steps.push_back({"case ii: contact (-2-k) = (k+1)/k surgery on the dual knot P'", true,
                            "contact class sits at (t, B_s) with self-conjugate Spin^c",
                            {{"k", std::to_string(k)},
                             {"smooth p/q", to_string(pq)},
                             {"t", std::to_string(loc.t)},
                             {"s", std::to_string(loc.s)},
                             {"c1", std::to_string(c1)}}});
    report.steps.push_back({"case ii: naturality under the surgery cobordism", false,
                            "one map F_{-W,s} carries c(xi_-2(L_i)) (x) c~ to c(xi_{-2-k}(L_i)) for both i",
                            {{"c1 evaluation", std::to_string(c1)}}});

    auto const model = mirror(nf.complex);
    auto const cone = hat(build_cone(model, flip(model), -(k + 1), k, ConeRange::full));
    truncate(cone);
    auto const inclusion = include_B(cone, loc.t);
    bool const ok = loc.t == -1 && c1 == 0 && inclusion.isomorphism();
    report.steps.push_back({"case ii: inclusion of (t, B_s) into the -(k+1)/k cone", ok,
                            "include_B is an isomorphism on homology",
                            {{"source dimension", std::to_string(inclusion.source_dimension)},
                             {"target dimension", std::to_string(inclusion.target_dimension)},
                             {"rank", std::to_string(inclusion.rank)}}});
    return ok;
}

} // namespace

PipelineReport distinctness_pipeline(int n, Rational const& r)
{
    if (n <= 3 || n % 2 == 0)
        throw Error(ErrorKind::BadParameter, "n must be odd and > 3");
    if (r >= 0)
        throw Error(ErrorKind::BadCoefficient, "r must be negative");
    if (r == -1)
        throw Error(ErrorKind::ExcludedCoefficient, "contact (-1)-surgery gives equal contact invariants");

    PipelineReport report;
    report.n = n;
    report.r = r;
    LegendrianData const L{1, 0, 1, "L"};

    Rational current = r;
    bool via_meridian = false;
    if (characterize_all_minus_two(r))
    {
        via_meridian = true;
        current = r - 1;
        LegendrianData const meridian{-1, -1, 1, "meridian"};
        report.steps.push_back({"case iv: r = -1/l, pass to r - 1 by +2 surgery on the meridian", false,
                                "the standard meridians of L_1, L_2 share tb and rot, so the Spin^c "
                                "structures agree",
                                {{"r", to_string(r)},
                                 {"r - 1", to_string(current)},
                                 {"smooth p/q for r", to_string(smooth_coefficient(L, r))},
                                 {"c1 of +2 surgery", std::to_string(c1_positive_integer_surgery(meridian, 2))}}});
    }

    auto const expansion = negative_expansion(current);
    bool const round_trip = evaluate(expansion) == current;
    report.steps.push_back({"DGS expansion", round_trip, "r = [a_1 + 1, a_2, ..., a_l]^-",
                            {{"r", to_string(current)},
                             {"a", list_string(expansion.a)},
                             {"stabilizations", list_string(expansion.stabilizations)}}});

    std::size_t t = 0;
    while (t < expansion.a.size() && expansion.stabilizations[t] == 0)
        ++t;
    if (t == expansion.a.size())
        throw Error(ErrorKind::BadCoefficient, "every a_j = -2; expected r = -1/l");
    int const s = expansion.stabilizations[t];
    int const k = s - 1;
    if (expansion.a.size() > 1)
        report.steps.push_back({"case iii: Legendrian surgery on the other DGS components", false,
                                "Legendrian surgery preserves distinct contact invariants",
                                {{"component", std::to_string(t + 1)},
                                 {"its stabilizations", std::to_string(s)},
                                 {"other components", std::to_string(expansion.a.size() - 1)}}});

    ReducedForm nf;
    bool ok = run_case_i(report, nf);
    if (k >= 1)
        ok = run_case_ii(report, nf, k) && ok;

    report.route = k == 0 ? "case i" : "case ii, k=" + std::to_string(k);
    if (expansion.a.size() > 1)
        report.route = "case iii via " + report.route;
    if (via_meridian)
        report.route = "case iv via " + report.route;
    report.distinct = ok && round_trip;
    return report;
}

} // namespace floercone
