#include "floercone/reduction.hpp"

#include <random>

#include "floercone/error.hpp"

namespace floercone {

Chain BasisTrace::project(Chain const& input_chain) const
{
    Chain result;
    for (auto const& [g, k] : input_chain)
        add_shifted(result, projection.at(g), k);
    return result;
}

Chain BasisTrace::include(Chain const& output_chain) const
{
    Chain result;
    for (auto const& [x, k] : output_chain)
        add_shifted(result, inclusion.at(x), k);
    return result;
}

WorkComplex::WorkComplex(FilteredComplex const& c)
    : gens_(c.generators()),
      out_(c.size()),
      in_(c.size()),
      alive_(c.size(), true),
      projection_(c.size()),
      touched_(c.size()),
      inclusion_(c.size())
{
    for (std::size_t g = 0; g < c.size(); ++g)
    {
        for (auto const& [h, k] : c.boundary(g))
            toggle(g, h, k);
        projection_[g].emplace(g, 0);
        touched_[g].insert(g);
        inclusion_[g].emplace(g, 0);
    }
}

void WorkComplex::toggle(std::size_t from, std::size_t to, int k)
{
    add_monomial(out_[from], to, k);
    add_monomial(in_[to], from, k);
}

void WorkComplex::cancel(std::size_t g, std::size_t h)
{
    auto const it = out_[g].find(h);
    if (!alive_[g] || !alive_[h] || it == out_[g].end())
        throw Error(ErrorKind::NoUnitEntry, gens_[g].name + " -> " + gens_[h].name);
    int const k = it->second;

    Chain const sources = in_[h];
    for (auto const& [x, m] : sources)
    {
        if (x == g)
            continue;
        for (auto const& [y, p] : Chain(out_[g]))
            toggle(x, y, p + m - k);
        add_shifted(inclusion_[x], inclusion_[g], m - k);
    }

    for (std::size_t o : touched_[h])
    {
        auto const ph = projection_[o].find(h);
        if (ph == projection_[o].end())
            continue;
        int const p = ph->second;
        projection_[o].erase(ph);
        for (auto const& [y, q] : out_[g])
        {
            if (y == h)
                continue;
            add_monomial(projection_[o], y, q - k + p);
            touched_[y].insert(o);
        }
    }
    for (std::size_t o : touched_[g])
        projection_[o].erase(g);

    for (std::size_t z : {g, h})
    {
        for (auto const& [y, p] : Chain(out_[z]))
            toggle(z, y, p);
        for (auto const& [x, p] : Chain(in_[z]))
            toggle(x, z, p);
        alive_[z] = false;
        touched_[z].clear();
        inclusion_[z].clear();
    }
}

void WorkComplex::slide(std::size_t g, std::size_t h, int k)
{
    if (g == h || !alive_[g] || !alive_[h])
        throw Error(ErrorKind::BadParameter, "invalid slide");
    for (auto const& [y, p] : Chain(out_[h]))
        toggle(g, y, p + k);
    for (auto const& [x, m] : Chain(in_[g]))
        toggle(x, h, m + k);
    add_shifted(inclusion_[g], inclusion_[h], k);
    for (std::size_t o : std::set<std::size_t>(touched_[g]))
    {
        auto const pg = projection_[o].find(g);
        if (pg == projection_[o].end())
            continue;
        add_monomial(projection_[o], h, pg->second + k);
        touched_[h].insert(o);
    }
}

std::vector<std::size_t> WorkComplex::living() const
{
    std::vector<std::size_t> result;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (alive_[g])
            result.push_back(g);
    return result;
}

ReducedForm WorkComplex::result() const
{
    ReducedForm form;
    std::vector<std::size_t> const keep = living();
    std::vector<std::size_t> remap(gens_.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
    {
        remap[keep[i]] = i;
        form.complex.add_generator(gens_[keep[i]]);
    }
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (auto const& [h, k] : out_[keep[i]])
            form.complex.toggle_entry(i, remap[h], k);

    form.trace.projection.resize(projection_.size());
    for (std::size_t o = 0; o < projection_.size(); ++o)
        for (auto const& [x, k] : projection_[o])
            form.trace.projection[o].emplace(remap[x], k);
    for (std::size_t x : keep)
        form.trace.inclusion.push_back(inclusion_[x]);
    return form;
}

ReducedForm cancel_pair(FilteredComplex const& c, std::string_view from, std::string_view to)
{
    std::size_t const g = c.index_of(from);
    std::size_t const h = c.index_of(to);
    auto const it = c.boundary(g).find(h);
    if (it == c.boundary(g).end() || it->second != 0)
        throw Error(ErrorKind::NoUnitEntry,
                    std::string(from) + " -> " + std::string(to) + " is not a U^0 entry");
    WorkComplex work(c);
    work.cancel(g, h);
    return work.result();
}

namespace {

bool admissible(WorkComplex const& w, ReduceMode mode, std::size_t g, std::size_t h, int k)
{
    switch (mode)
    {
    case ReduceMode::filtered:
        return k == 0 && w.generator(g).alexander == w.generator(h).alexander;
    case ReduceMode::over_u_units:
        return k == 0;
    case ReduceMode::full_field:
        return true;
    }
    return false;
}

} // namespace

ReducedForm reduce(FilteredComplex const& c, ReduceMode mode, std::optional<std::uint64_t> shuffle_seed)
{
    WorkComplex work(c);
    std::mt19937_64 rng(shuffle_seed.value_or(0));
    for (;;)
    {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t g : work.living())
        {
            for (auto const& [h, k] : work.out(g))
            {
                if (!admissible(work, mode, g, h, k))
                    continue;
                candidates.emplace_back(g, h);
                if (!shuffle_seed)
                    break;
            }
            if (!shuffle_seed && !candidates.empty())
                break;
        }
        if (candidates.empty())
            break;
        std::size_t pick = 0;
        if (shuffle_seed)
            pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
        work.cancel(candidates[pick].first, candidates[pick].second);
    }
    return work.result();
}

} // namespace floercone
