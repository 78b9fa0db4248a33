#include "floercone/homology.hpp"

#include <algorithm>
#include <limits>

#include "floercone/error.hpp"
#include "floercone/rational.hpp"

namespace floercone {

namespace {

// Row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> eliminate(std::vector<std::vector<unsigned char>>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col)
    {
        std::size_t sel = row;
        while (sel < m.size() && !m[sel][col])
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != row && m[r][col])
                for (std::size_t c = col; c < cols; ++c)
                    m[r][c] ^= m[row][c];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<int> key_of(Generator const& g, std::vector<GradingKey> const& keys, bool mod_two)
{
    std::vector<int> key;
    for (GradingKey k : keys)
    {
        if (k == GradingKey::alexander)
            key.push_back(g.alexander);
        else
            key.push_back(mod_two ? static_cast<int>(positive_mod(g.maslov_x4, 8)) : g.maslov_x4);
    }
    return key;
}

} // namespace

std::size_t F2Matrix::rank() const
{
    std::vector<std::vector<unsigned char>> m(rows_, std::vector<unsigned char>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m[r][c] = data_[r * cols_ + c];
    return eliminate(m, cols_).size();
}

std::vector<std::vector<bool>> F2Matrix::kernel() const
{
    std::vector<std::vector<unsigned char>> m(rows_, std::vector<unsigned char>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m[r][c] = data_[r * cols_ + c];
    auto const pivots = eliminate(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<bool>> basis;
    for (std::size_t free = 0; free < cols_; ++free)
    {
        if (is_pivot[free])
            continue;
        std::vector<bool> v(cols_, false);
        v[free] = true;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m[r][free])
                v[pivots[r]] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

int GradedRanks::total() const
{
    int sum = 0;
    for (auto const& [key, r] : ranks)
        sum += r;
    return sum;
}

int GradedRanks::rank_at(std::vector<int> const& key) const
{
    auto const it = ranks.find(key);
    return it == ranks.end() ? 0 : it->second;
}

FilteredComplex field_slice(FilteredComplex const& c, Flavor flavor)
{
    if (flavor != Flavor::hat && flavor != Flavor::hat_knot)
        throw Error(ErrorKind::BadParameter, "field_slice needs hat or hat_knot");
    FilteredComplex result;
    for (auto const& g : c.generators())
        result.add_generator(g);
    for (auto const& e : c.entries())
    {
        if (e.u_power != 0)
            continue;
        if (flavor == Flavor::hat_knot &&
            c.generator(e.from).alexander != c.generator(e.to).alexander)
            continue;
        result.toggle_entry(e.from, e.to, 0);
    }
    return result;
}

namespace {

FilteredComplex j_slice(FilteredComplex const& c, int s, bool minus_only)
{
    FilteredComplex result;
    std::vector<std::ptrdiff_t> remap(c.size(), -1);
    for (std::size_t g = 0; g < c.size(); ++g)
    {
        auto const& gen = c.generator(g);
        int const shift = gen.alexander - s;
        if (minus_only && shift < 0)
            continue;
        remap[g] = static_cast<std::ptrdiff_t>(
            result.add_generator({gen.name, s, gen.maslov_x4 - 8 * shift}));
    }
    for (auto const& e : c.entries())
    {
        if (remap[e.from] < 0 || remap[e.to] < 0)
            continue;
        if (j_drop(c.generator(e.from).alexander, c.generator(e.to).alexander, e.u_power) != 0)
            continue;
        result.toggle_entry(static_cast<std::size_t>(remap[e.from]),
                            static_cast<std::size_t>(remap[e.to]), 0);
    }
    return result;
}

} // namespace

FilteredComplex minus_slice(FilteredComplex const& c, int s) { return j_slice(c, s, true); }

FilteredComplex row_slice(FilteredComplex const& c, int s) { return j_slice(c, s, false); }

std::vector<bool> FieldHomology::class_of(Chain const& cycle) const
{
    std::vector<bool> v(dimension(), false);
    for (auto const& [x, k] : reduced.trace.project(cycle))
        v[x] = !v[x];
    return v;
}

FieldHomology field_homology(FilteredComplex const& field_complex)
{
    return FieldHomology{reduce(field_complex, ReduceMode::full_field)};
}

F2Matrix induced_map(FieldHomology const& source, FieldHomology const& target,
                     std::vector<Chain> const& image)
{
    F2Matrix m(target.dimension(), source.dimension());
    for (std::size_t x = 0; x < source.dimension(); ++x)
    {
        Chain mapped;
        for (auto const& [g, k] : source.reduced.trace.inclusion[x])
            for (auto const& [y, p] : image.at(g))
                mapped[y] ^= 1;
        Chain cycle;
        for (auto const& [y, bit] : mapped)
            if (bit & 1)
                cycle.emplace(y, 0);
        auto const v = target.class_of(cycle);
        for (std::size_t r = 0; r < v.size(); ++r)
            m.set(r, x, v[r]);
    }
    return m;
}

std::vector<SmithSummand> smith_summands(FilteredComplex const& c, Flavor flavor)
{
    if (flavor != Flavor::minus && flavor != Flavor::knot_minus)
        throw Error(ErrorKind::BadParameter, "smith_summands needs minus or knot_minus");
    WorkComplex work(c);
    if (flavor == Flavor::knot_minus)
        work.filter_entries([&](std::size_t g, std::size_t h, int k) {
            return j_drop(work.generator(g).alexander, work.generator(h).alexander, k) == 0;
        });

    std::vector<SmithSummand> summands;
    std::vector<bool> done(c.size(), false);
    for (;;)
    {
        std::size_t best_g = 0, best_h = 0;
        int best_k = std::numeric_limits<int>::max();
        for (std::size_t g : work.living())
        {
            if (done[g])
                continue;
            for (auto const& [h, k] : work.out(g))
                if (k < best_k)
                {
                    best_k = k;
                    best_g = g;
                    best_h = h;
                }
        }
        if (best_k == std::numeric_limits<int>::max())
            break;
        if (best_k < 0)
            throw Error(ErrorKind::BadParameter, "negative U power in a GF(2)[U] complex");
        if (best_k == 0)
        {
            work.cancel(best_g, best_h);
            continue;
        }
        for (auto const& [x, m] : Chain(work.in(best_h)))
            if (x != best_g)
                work.slide(x, best_g, m - best_k);
        for (auto const& [y, m] : Chain(work.out(best_g)))
            if (y != best_h)
                work.slide(best_h, y, m - best_k);
        done[best_g] = done[best_h] = true;
        summands.push_back({best_h, best_k});
    }
    for (std::size_t g : work.living())
        if (!done[g])
            summands.push_back({g, 0});
    std::sort(summands.begin(), summands.end(),
              [](SmithSummand const& a, SmithSummand const& b) { return a.generator < b.generator; });
    return summands;
}

GradedRanks homology(FilteredComplex const& c, Flavor flavor, std::vector<GradingKey> keys)
{
    GradedRanks out;
    out.keys = keys;
    switch (flavor)
    {
    case Flavor::hat:
    case Flavor::hat_knot:
    {
        auto const reduced = reduce(field_slice(c, flavor), ReduceMode::full_field);
        for (auto const& g : reduced.complex.generators())
            ++out.ranks[key_of(g, keys, false)];
        break;
    }
    case Flavor::infinity:
    {
        auto const reduced = reduce(c, ReduceMode::full_field);
        for (auto const& g : reduced.complex.generators())
            ++out.ranks[key_of(g, keys, true)];
        break;
    }
    case Flavor::minus:
    case Flavor::knot_minus:
        for (auto const& s : smith_summands(c, flavor))
        {
            auto const key = key_of(c.generator(s.generator), keys, false);
            if (s.torsion == 0)
                ++out.ranks[key];
            else
                out.torsion[key].push_back(s.torsion);
        }
        for (auto& [key, orders] : out.torsion)
            std::sort(orders.begin(), orders.end());
        break;
    }
    return out;
}

GradedRanks hfk_minus(FilteredComplex const& c, int s)
{
    GradedRanks out;
    out.keys = {GradingKey::maslov_x4};
    auto const reduced = reduce(minus_slice(c, s), ReduceMode::full_field);
    for (auto const& g : reduced.complex.generators())
        ++out.ranks[{g.maslov_x4}];
    for (auto const& summand : smith_summands(c, Flavor::knot_minus))
    {
        if (summand.torsion == 0)
            continue;
        auto const& gen = c.generator(summand.generator);
        if (s > gen.alexander || s <= gen.alexander - summand.torsion)
            continue;
        out.torsion[{gen.maslov_x4 - 8 * (gen.alexander - s)}].push_back(summand.torsion);
    }
    return out;
}

} // namespace floercone
