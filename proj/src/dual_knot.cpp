#include "floercone/dual_knot.hpp"

#include <algorithm>
#include <set>

#include "floercone/error.hpp"

namespace floercone {

DualCone build_dual_cone(FilteredComplex const& c, FlipMap const& flip, int n)
{
    if (n == 0)
        throw Error(ErrorKind::BadFraming, "dual knot complex needs a nonzero framing");
    int const g = std::max(1, c.max_alexander());
    int const a_lo = -g + 1;
    int const a_hi = std::max(g, a_lo + n - 1);

    DualCone dc;
    dc.n = n;
    dc.cone = assemble_cone(c, flip, n, 1, a_lo, a_hi, a_lo + n, a_hi);
    int const sign = n > 0 ? 1 : -1;
    bool integral = true;
    for (auto const& cell : dc.cone.cells)
    {
        auto const& vertex = dc.cone.vertices[cell.vertex];
        auto const& gen = c.generator(cell.generator);
        int const s = vertex.s;
        Rational const offset = ratio(2 * s + n - 1, 2 * n);
        Rational const quadratic = ratio((2 * s - n) * (2 * s - n), 4 * n);
        Rational const base = Rational(gen.maslov_x4, 4) - 2 * cell.shift + quadratic;
        dc.I.push_back(0);
        if (vertex.segment == Segment::A)
        {
            dc.J.push_back(std::max(-cell.shift - 1, gen.alexander - cell.shift - s) + offset);
            dc.gr.push_back(base + Rational(2 - 3 * sign, 4));
        }
        else
        {
            dc.J.push_back(-1 + offset);
            dc.gr.push_back(base + Rational(-2 - 3 * sign, 4));
        }
        integral = integral && is_integer(4 * dc.gr.back());
    }
    for (std::size_t cell = 0; cell < dc.cone.cells.size(); ++cell)
    {
        auto const& g0 = dc.cone.complex.generator(cell);
        int const maslov = integral ? static_cast<int>(floor(4 * dc.gr[cell])) : g0.maslov_x4;
        dc.complex.add_generator({g0.name, static_cast<int>(floor(dc.J[cell])), maslov});
    }
    for (auto const& e : dc.cone.complex.entries())
        dc.complex.toggle_entry(e.from, e.to, e.u_power);
    return dc;
}

namespace {

struct Pair
{
    std::size_t source;
    std::size_t target;
    int power;
};

bool splittable(WorkComplex const& w, std::size_t g, std::size_t h, int k)
{
    int const ah = w.generator(h).alexander;
    for (auto const& [y, m] : w.out(g))
        if (y != h && (m < k || w.generator(y).alexander - (m - k) > ah))
            return false;
    int const ag = w.generator(g).alexander;
    for (auto const& [x, m] : w.in(h))
        if (x != g && (m < k || ag - (m - k) > w.generator(x).alexander))
            return false;
    return true;
}

// Index carried by the "_i" suffix of a generator name, 0 if none.
int suffix_index(std::string const& name)
{
    auto const dot = name.rfind('.');
    auto const cut = name.rfind('_');
    if (cut == std::string::npos || (dot != std::string::npos && cut < dot))
        return 0;
    try
    {
        return std::stoi(name.substr(cut + 1));
    }
    catch (std::exception const&)
    {
        return 0;
    }
}

std::vector<int> assign_indices(std::vector<int> const& wanted)
{
    std::vector<int> result(wanted.size(), 0);
    std::set<int> used;
    for (std::size_t i = 0; i < wanted.size(); ++i)
        if (wanted[i] > 0 && std::count(wanted.begin(), wanted.end(), wanted[i]) == 1)
        {
            result[i] = wanted[i];
            used.insert(wanted[i]);
        }
    int next = 1;
    for (auto& r : result)
    {
        if (r != 0)
            continue;
        while (used.count(next))
            ++next;
        r = next;
        used.insert(next);
    }
    return result;
}

} // namespace

ReducedForm normal_form(FilteredComplex const& c)
{
    WorkComplex w(c);
    for (bool progress = true; progress;)
    {
        progress = false;
        for (std::size_t g : w.living())
        {
            for (auto const& [h, k] : w.out(g))
                if (k == 0 && w.generator(g).alexander == w.generator(h).alexander)
                {
                    w.cancel(g, h);
                    progress = true;
                    break;
                }
            if (progress)
                break;
        }
    }

    std::vector<Pair> pairs;
    std::vector<bool> done(c.size(), false);
    for (;;)
    {
        std::optional<Pair> pick;
        bool any = false;
        for (std::size_t g : w.living())
        {
            if (done[g])
                continue;
            for (auto const& [h, k] : w.out(g))
            {
                any = true;
                if ((!pick || k < pick->power) && splittable(w, g, h, k))
                    pick = Pair{g, h, k};
            }
        }
        if (!any)
            break;
        if (!pick)
            throw Error(ErrorKind::NormalFormMismatch, "no filtered splitting of the remaining differential");
        for (auto const& [x, m] : Chain(w.in(pick->target)))
            if (x != pick->source)
                w.slide(x, pick->source, m - pick->power);
        for (auto const& [y, m] : Chain(w.out(pick->source)))
            if (y != pick->target)
                w.slide(pick->target, y, m - pick->power);
        done[pick->source] = done[pick->target] = true;
        pairs.push_back(*pick);
    }

    std::vector<std::size_t> singles;
    for (std::size_t g : w.living())
        if (!done[g])
            singles.push_back(g);
    if (singles.size() != 1 || w.generator(singles[0]).alexander != 0)
        throw Error(ErrorKind::NormalFormMismatch,
                    "expected a single unpaired generator at Alexander grading 0, found " +
                        std::to_string(singles.size()));

    std::vector<Pair> horizontal, vertical;
    for (auto const& pr : pairs)
    {
        int const as = w.generator(pr.source).alexander;
        int const at = w.generator(pr.target).alexander;
        if (pr.power == 1 && as == -1 && at == 0)
            horizontal.push_back(pr);
        else if (pr.power == 0 && as == 1 && at == 0)
            vertical.push_back(pr);
        else
            throw Error(ErrorKind::NormalFormMismatch,
                        "summand " + w.generator(pr.source).name + " -> U^" + std::to_string(pr.power) +
                            " " + w.generator(pr.target).name + " is neither H nor V");
    }
    if (horizontal.size() != vertical.size())
        throw Error(ErrorKind::NormalFormMismatch, "different numbers of H and V summands");

    auto ordered = [&](std::vector<Pair> const& group) {
        std::vector<int> wanted;
        for (auto const& pr : group)
        {
            int const a = suffix_index(w.generator(pr.source).name);
            int const b = suffix_index(w.generator(pr.target).name);
            wanted.push_back(a == b ? a : 0);
        }
        auto const idx = assign_indices(wanted);
        std::vector<std::pair<int, Pair>> out;
        for (std::size_t i = 0; i < group.size(); ++i)
            out.emplace_back(idx[i], group[i]);
        std::sort(out.begin(), out.end(), [](auto const& l, auto const& r) { return l.first < r.first; });
        return out;
    };

    std::vector<std::pair<std::size_t, std::string>> layout{{singles[0], "O"}};
    for (auto const& [i, pr] : ordered(horizontal))
    {
        layout.emplace_back(pr.target, "xh_" + std::to_string(i));
        layout.emplace_back(pr.source, "yh_" + std::to_string(i));
    }
    for (auto const& [i, pr] : ordered(vertical))
    {
        layout.emplace_back(pr.target, "xv_" + std::to_string(i));
        layout.emplace_back(pr.source, "yv_" + std::to_string(i));
    }

    ReducedForm const raw = w.result();
    auto const living = w.living();
    std::vector<std::size_t> raw_index(c.size(), 0);
    for (std::size_t i = 0; i < living.size(); ++i)
        raw_index[living[i]] = i;
    std::vector<std::size_t> position(living.size(), 0);
    ReducedForm form;
    for (std::size_t pos = 0; pos < layout.size(); ++pos)
    {
        std::size_t const r = raw_index[layout[pos].first];
        position[r] = pos;
        auto gen = raw.complex.generator(r);
        gen.name = layout[pos].second;
        form.complex.add_generator(gen);
        form.trace.inclusion.push_back(raw.trace.inclusion[r]);
    }
    for (auto const& e : raw.complex.entries())
        form.complex.toggle_entry(position[e.from], position[e.to], e.u_power);
    for (auto const& chain : raw.trace.projection)
    {
        Chain moved;
        for (auto const& [x, k] : chain)
            moved.emplace(position[x], k);
        form.trace.projection.push_back(moved);
    }
    return form;
}

ReducedForm normal_form(DualCone const& dc) { return normal_form(dc.complex); }

GMapReport g_map(FilteredComplex const& c, int alexander)
{
    auto const minus = minus_slice(c, alexander);
    auto const row = row_slice(c, alexander);
    std::vector<Chain> image;
    for (auto const& g : minus.generators())
        image.push_back(Chain{{row.index_of(g.name), 0}});
    auto const hm = field_homology(minus);
    auto const hr = field_homology(row);
    GMapReport report;
    report.alexander = alexander;
    report.matrix = induced_map(hm, hr, image);
    report.domain_dimension = hm.dimension();
    report.target_dimension = hr.dimension();
    report.rank = report.matrix.rank();
    report.kernel = report.matrix.kernel();
    return report;
}

int loss_grading(int tb, int rot)
{
    int const diff = tb - rot;
    if (diff % 2 == 0)
        throw Error(ErrorKind::NonIntegral, "tb - rot = " + std::to_string(diff) + " is even");
    return (diff + 1) / 2;
}

bool distinct_classes(FilteredComplex const& c, int alexander, std::vector<std::string> const& class_a,
                      std::vector<std::string> const& class_b)
{
    auto const minus = minus_slice(c, alexander);
    auto const row = row_slice(c, alexander);
    auto const hr = field_homology(row);
    auto image_class = [&](std::vector<std::string> const& names) {
        Chain cycle, image;
        for (auto const& name : names)
        {
            add_monomial(cycle, minus.index_of(name), 0);
            add_monomial(image, row.index_of(name), 0);
        }
        if (!minus.apply(cycle).empty())
            throw Error(ErrorKind::NotCycles, "class is not a cycle in the slice");
        return hr.class_of(image);
    };
    return image_class(class_a) != image_class(class_b);
}

} // namespace floercone
