#include "floercone/cone.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "floercone/error.hpp"
#include "floercone/rational.hpp"

namespace floercone {

int MappingCone::sector_of_t(int t) const { return static_cast<int>(positive_mod(t, std::abs(p))); }

std::optional<std::size_t> MappingCone::find_vertex(Segment seg, int t) const
{
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].segment == seg && vertices[v].t == t)
            return v;
    return std::nullopt;
}

FilteredComplex MappingCone::sector(int i) const
{
    int const target = static_cast<int>(positive_mod(i, std::abs(p)));
    std::vector<std::size_t> keep;
    for (std::size_t cell = 0; cell < cells.size(); ++cell)
        if (sector_of_cell(cell) == target)
            keep.push_back(cell);
    return restrict_to(complex, keep);
}

namespace {

std::string cell_name(ConeVertex const& v, std::string const& generator)
{
    return std::string(v.segment == Segment::A ? "A[" : "B[") + std::to_string(v.t) + "]." + generator;
}

// Relative Maslov shift (x4) of each vertex so that v and h drop the grading by 1.
std::vector<int> vertex_shifts(MappingCone const& cone)
{
    std::size_t const nv = cone.vertices.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> links(nv);
    for (std::size_t a = 0; a < nv; ++a)
    {
        auto const& va = cone.vertices[a];
        if (va.segment != Segment::A)
            continue;
        if (auto b = cone.find_vertex(Segment::B, va.t))
        {
            links[a].emplace_back(*b, -4);
            links[*b].emplace_back(a, 4);
        }
        if (auto b = cone.find_vertex(Segment::B, va.t + cone.p))
        {
            links[a].emplace_back(*b, -4 + 8 * va.s);
            links[*b].emplace_back(a, 4 - 8 * va.s);
        }
    }
    std::vector<std::optional<int>> sigma(nv);
    for (std::size_t root = 0; root < nv; ++root)
    {
        if (sigma[root])
            continue;
        sigma[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty())
        {
            std::size_t const v = queue.front();
            queue.pop_front();
            for (auto const& [w, delta] : links[v])
            {
                int const value = *sigma[v] + delta;
                if (!sigma[w])
                {
                    sigma[w] = value;
                    queue.push_back(w);
                }
                else if (*sigma[w] != value)
                    throw Error(ErrorKind::BadParameter, "inconsistent relative gradings in cone");
            }
        }
    }
    std::vector<int> result;
    for (auto const& s : sigma)
        result.push_back(*s);
    return result;
}

int genus_of(FilteredComplex const& c) { return std::max(1, c.max_alexander()); }

void check_coefficients(int p, int q)
{
    if (q <= 0 || p == 0 || std::gcd(p, q) != 1)
        throw Error(ErrorKind::BadCoefficients,
                    "need q > 0, p != 0, gcd(p, q) = 1; got p = " + std::to_string(p) +
                        ", q = " + std::to_string(q));
}

} // namespace

MappingCone assemble_cone(FilteredComplex const& c, FlipMap const& flip, int p, int q, int a_lo,
                          int a_hi, int b_lo, int b_hi)
{
    check_coefficients(p, q);
    MappingCone cone;
    cone.input = c;
    cone.flip = flip;
    cone.p = p;
    cone.q = q;
    cone.genus = genus_of(c);
    for (int t = a_lo; t <= a_hi; ++t)
        cone.vertices.push_back({Segment::A, t, static_cast<int>(floor_div(t, q))});
    for (int t = b_lo; t <= b_hi; ++t)
        cone.vertices.push_back({Segment::B, t, static_cast<int>(floor_div(t, q))});

    auto const sigma = vertex_shifts(cone);
    std::vector<std::size_t> first_cell;
    for (std::size_t v = 0; v < cone.vertices.size(); ++v)
    {
        auto const& vertex = cone.vertices[v];
        first_cell.push_back(cone.cells.size());
        for (std::size_t g = 0; g < c.size(); ++g)
        {
            auto const& gen = c.generator(g);
            int const shift = vertex.segment == Segment::A ? std::max(0, gen.alexander - vertex.s) : 0;
            cone.cells.push_back({v, g, shift});
            cone.complex.add_generator(
                {cell_name(vertex, gen.name), 0, gen.maslov_x4 + sigma[v] - 8 * shift});
        }
    }

    auto cell_at = [&](std::size_t v, std::size_t g) { return first_cell[v] + g; };
    for (std::size_t v = 0; v < cone.vertices.size(); ++v)
    {
        auto const& vertex = cone.vertices[v];
        for (auto const& e : c.entries())
        {
            int const k = e.u_power + cone.cells[cell_at(v, e.from)].shift - cone.cells[cell_at(v, e.to)].shift;
            cone.complex.toggle_entry(cell_at(v, e.from), cell_at(v, e.to), k);
        }
        if (vertex.segment != Segment::A)
            continue;
        auto const v_target = cone.find_vertex(Segment::B, vertex.t);
        auto const h_target = cone.find_vertex(Segment::B, vertex.t + p);
        for (std::size_t g = 0; g < c.size(); ++g)
        {
            int const shift = cone.cells[cell_at(v, g)].shift;
            if (v_target)
                cone.complex.toggle_entry(cell_at(v, g), cell_at(*v_target, g), shift);
            if (h_target)
                cone.complex.toggle_entry(cell_at(v, g), cell_at(*h_target, flip(g)),
                                          vertex.s - c.generator(g).alexander + shift);
        }
    }
    return cone;
}

MappingCone build_cone(FilteredComplex const& c, FlipMap const& flip, int p, int q, ConeRange range)
{
    check_coefficients(p, q);
    int const g = genus_of(c);
    int a_lo = -(g - 1) * q;
    int a_hi = g * q - 1;
    if (range == ConeRange::full)
    {
        int const margin = (std::abs(p) + 1) * q;
        a_lo -= margin;
        a_hi += margin;
    }
    a_hi = std::max(a_hi, a_lo + p - 1);
    return assemble_cone(c, flip, p, q, a_lo, a_hi, a_lo + p, a_hi);
}

MappingCone hat(MappingCone const& cone)
{
    MappingCone result = cone;
    result.complex = field_slice(cone.complex, Flavor::hat);
    result.hat = true;
    return result;
}

GradedRanks sector_homology(MappingCone const& cone, int i)
{
    auto const part = cone.sector(i);
    return homology(part, cone.hat ? Flavor::hat : Flavor::infinity, {GradingKey::maslov_x4});
}

MappingCone truncate(MappingCone const& cone)
{
    MappingCone paper = build_cone(cone.input, cone.flip, cone.p, cone.q, ConeRange::paper);
    if (cone.hat)
        paper = hat(paper);
    for (auto const& v : paper.vertices)
        if (!cone.find_vertex(v.segment, v.t))
            throw Error(ErrorKind::NotTruncatable, "cone window does not contain the paper window");
    if (paper.vertices.size() == cone.vertices.size())
        return cone;

    for (std::size_t v = 0; v < cone.vertices.size(); ++v)
    {
        auto const& vertex = cone.vertices[v];
        if (vertex.segment != Segment::A || paper.find_vertex(Segment::A, vertex.t))
            continue;
        bool iso = true;
        for (auto const& cell : cone.cells)
        {
            if (cell.vertex != v)
                continue;
            int const a = cone.input.generator(cell.generator).alexander;
            if (vertex.s >= cone.genus)
                iso = iso && cell.shift == 0;
            else if (vertex.s <= -cone.genus)
                iso = iso && vertex.s - a + cell.shift == 0;
            else
                iso = false;
        }
        if (!iso)
            throw Error(ErrorKind::NotTruncatable,
                        "neither v nor h is an isomorphism at t = " + std::to_string(vertex.t));
    }
    for (int i = 0; i < std::abs(cone.p); ++i)
        if (sector_homology(cone, i).total() != sector_homology(paper, i).total())
            throw Error(ErrorKind::NotTruncatable,
                        "sector " + std::to_string(i) + " changes rank under truncation");
    return paper;
}

InclusionReport include_B(MappingCone const& cone, int t)
{
    MappingCone const hc = cone.hat ? cone : hat(cone);
    auto const vertex = hc.find_vertex(Segment::B, t);
    if (!vertex)
        throw Error(ErrorKind::NoSuchVertex, "no vertex (" + std::to_string(t) + ", B) in the cone");

    InclusionReport report;
    report.vertex = *vertex;
    report.sector = hc.sector_of_t(t);
    std::vector<std::size_t> keep;
    for (std::size_t cell = 0; cell < hc.cells.size(); ++cell)
        if (hc.cells[cell].vertex == *vertex)
            keep.push_back(cell);
    auto const source = restrict_to(hc.complex, keep);
    auto const target = hc.sector(report.sector);

    std::vector<Chain> image;
    for (auto const& g : source.generators())
        image.push_back(Chain{{target.index_of(g.name), 0}});
    auto const hs = field_homology(source);
    auto const ht = field_homology(target);
    report.matrix = induced_map(hs, ht, image);
    report.source_dimension = hs.dimension();
    report.target_dimension = ht.dimension();
    report.rank = report.matrix.rank();
    report.kernel = report.matrix.kernel();
    return report;
}

} // namespace floercone
