#ifndef FLOERCONE_REDUCTION_HPP
#define FLOERCONE_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "floercone/complex.hpp"

namespace floercone {

/// Change of basis between an input complex and its reduction.
/// projection[g] is the image of input generator g as a chain in the output;
/// inclusion[x] is output generator x written as a chain in the input.
/// Both are chain maps and projection o inclusion is the identity.
struct BasisTrace
{
    std::vector<Chain> projection;
    std::vector<Chain> inclusion;

    Chain project(Chain const& input_chain) const;
    Chain include(Chain const& output_chain) const;
};

struct ReducedForm
{
    FilteredComplex complex;
    BasisTrace trace;
};

enum class ReduceMode
{
    filtered,     ///< cancel U^0 entries that keep both (i, j) levels
    over_u_units, ///< cancel every U^0 entry
    full_field,   ///< U inverted: every entry is a unit
};

/// Mutable working copy of a complex supporting Gaussian cancellation and
/// elementary changes of basis, while tracking the basis trace back to the
/// complex it was built from.
class WorkComplex
{
public:
    explicit WorkComplex(FilteredComplex const& c);

    std::size_t capacity() const { return gens_.size(); }
    bool alive(std::size_t g) const { return alive_[g]; }
    Generator const& generator(std::size_t g) const { return gens_[g]; }
    Chain const& out(std::size_t g) const { return out_[g]; }
    Chain const& in(std::size_t g) const { return in_[g]; }

    /// Cancels the entry g -> U^k h (any k; the caller decides whether U^k
    /// is a unit in the ring it works over).
    void cancel(std::size_t g, std::size_t h);

    /// Replaces basis element g by g + U^k h.
    void slide(std::size_t g, std::size_t h, int k);

    /// Drops every entry not satisfying keep(from, to, power). Only valid when
    /// the kept entries still form a differential (e.g. associated graded).
    template<class Pred>
    void filter_entries(Pred keep)
    {
        for (std::size_t g = 0; g < out_.size(); ++g)
        {
            Chain kept;
            for (auto const& [h, k] : out_[g])
                if (keep(g, h, k))
                    kept.emplace(h, k);
                else
                    in_[h].erase(g);
            out_[g] = std::move(kept);
        }
    }

    /// Living generators in index order.
    std::vector<std::size_t> living() const;

    /// Snapshot of the living part with its trace to the original complex.
    ReducedForm result() const;

private:
    void toggle(std::size_t from, std::size_t to, int k);

    std::vector<Generator> gens_;
    std::vector<Chain> out_;
    std::vector<Chain> in_;
    std::vector<bool> alive_;
    std::vector<Chain> projection_;                ///< input gen -> chain in current basis
    std::vector<std::set<std::size_t>> touched_;  ///< current gen -> input gens using it
    std::vector<Chain> inclusion_;                 ///< current gen -> chain in input
};

/// Cancels a single unit (U^0) entry.
ReducedForm cancel_pair(FilteredComplex const& c, std::string_view from, std::string_view to);

/// Iterated cancellation. By default the first admissible entry in generator
/// order is cancelled each round; with a seed, candidates are shuffled, which
/// the property tests use to check that ranks do not depend on the order.
ReducedForm reduce(FilteredComplex const& c, ReduceMode mode,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

} // namespace floercone

#endif
