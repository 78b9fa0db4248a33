#include "floercone/complex.hpp"

#include <algorithm>

#include "floercone/error.hpp"

namespace floercone {

void add_monomial(Chain& chain, std::size_t generator, int power)
{
    auto const it = chain.find(generator);
    if (it == chain.end())
    {
        chain.emplace(generator, power);
        return;
    }
    if (it->second != power)
        throw Error(ErrorKind::InhomogeneousEntry,
                    "U^" + std::to_string(it->second) + " + U^" + std::to_string(power) +
                        " on generator #" + std::to_string(generator));
    chain.erase(it);
}

void add_shifted(Chain& chain, Chain const& other, int shift)
{
    for (auto const& [g, k] : other)
        add_monomial(chain, g, k + shift);
}

int j_drop(int alexander_from, int alexander_to, int u_power)
{
    return alexander_from - alexander_to + u_power;
}

std::size_t FilteredComplex::add_generator(Generator g)
{
    if (index_.count(g.name))
        throw Error(ErrorKind::DuplicateGenerator, g.name);
    std::size_t const i = generators_.size();
    index_.emplace(g.name, i);
    generators_.push_back(std::move(g));
    boundary_.emplace_back();
    return i;
}

void FilteredComplex::toggle_entry(std::size_t from, std::size_t to, int u_power)
{
    if (from >= size() || to >= size())
        throw Error(ErrorKind::UnknownGenerator, "entry index out of range");
    add_monomial(boundary_[from], to, u_power);
}

void FilteredComplex::toggle_entry(std::string_view from, std::string_view to, int u_power)
{
    toggle_entry(index_of(from), index_of(to), u_power);
}

std::optional<std::size_t> FilteredComplex::find(std::string_view name) const
{
    auto const it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t FilteredComplex::index_of(std::string_view name) const
{
    auto const i = find(name);
    if (!i)
        throw Error(ErrorKind::UnknownGenerator, std::string(name));
    return *i;
}

std::vector<Entry> FilteredComplex::entries() const
{
    std::vector<Entry> result;
    for (std::size_t g = 0; g < size(); ++g)
        for (auto const& [h, k] : boundary_[g])
            result.push_back({g, h, k});
    return result;
}

Chain FilteredComplex::apply(Chain const& chain) const
{
    Chain result;
    for (auto const& [g, k] : chain)
        add_shifted(result, boundary_.at(g), k);
    return result;
}

int FilteredComplex::max_alexander() const
{
    int best = 0;
    bool first = true;
    for (auto const& g : generators_)
    {
        if (first || g.alexander > best)
            best = g.alexander;
        first = false;
    }
    return best;
}

FilteredComplex direct_sum(FilteredComplex const& a, FilteredComplex const& b)
{
    FilteredComplex result = a;
    std::size_t const offset = a.size();
    for (auto const& g : b.generators())
        result.add_generator(g);
    for (auto const& e : b.entries())
        result.toggle_entry(e.from + offset, e.to + offset, e.u_power);
    return result;
}

FilteredComplex restrict_to(FilteredComplex const& c, std::vector<std::size_t> const& keep)
{
    FilteredComplex result;
    std::vector<std::ptrdiff_t> remap(c.size(), -1);
    for (std::size_t g : keep)
        remap.at(g) = static_cast<std::ptrdiff_t>(result.add_generator(c.generator(g)));
    for (std::size_t g : keep)
        for (auto const& [h, k] : c.boundary(g))
            if (remap[h] >= 0)
                result.toggle_entry(static_cast<std::size_t>(remap[g]),
                                    static_cast<std::size_t>(remap[h]), k);
    return result;
}

std::vector<Violation> check_complex(FilteredComplex const& c)
{
    std::vector<Violation> report;
    auto const& gens = c.generators();
    for (auto const& e : c.entries())
    {
        auto const& from = gens[e.from];
        auto const& to = gens[e.to];
        if (e.u_power < 0)
            report.push_back({Violation::Kind::RaisesI, e.from, e.to,
                              from.name + " -> U^" + std::to_string(e.u_power) + " " + to.name +
                                  " raises the i filtration"});
        if (j_drop(from.alexander, to.alexander, e.u_power) < 0)
            report.push_back({Violation::Kind::RaisesJ, e.from, e.to,
                              from.name + " -> " + to.name + " raises the j filtration"});
        if (to.maslov_x4 - 8 * e.u_power != from.maslov_x4 - 4)
            report.push_back({Violation::Kind::GradingDrop, e.from, e.to,
                              from.name + " -> " + to.name + " does not drop Maslov grading by 1"});
    }
    for (std::size_t g = 0; g < c.size(); ++g)
    {
        Chain sq;
        try
        {
            sq = c.apply(c.boundary(g));
        }
        catch (Error const&)
        {
            // inhomogeneous d^2 already shows up as a grading violation
            continue;
        }
        for (auto const& [h, k] : sq)
            report.push_back({Violation::Kind::SquareNonZero, g, h,
                              "d^2(" + gens[g].name + ") contains U^" + std::to_string(k) + " " +
                                  gens[h].name});
    }
    return report;
}

} // namespace floercone
