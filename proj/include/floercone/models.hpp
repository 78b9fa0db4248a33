#ifndef FLOERCONE_MODELS_HPP
#define FLOERCONE_MODELS_HPP

#include <map>
#include <string>
#include <vector>

#include "floercone/complex.hpp"
#include "floercone/homology.hpp"

namespace floercone {

/// x, y, z with dx = y, dz = U y: the left-handed trefoil.
FilteredComplex staircase();

/// Length-one box a, b, c, d with da = U b + c, db = d, dc = U d.
/// Generator names carry the suffix, e.g. box("_2") gives a_2, ..., d_2.
FilteredComplex box(std::string const& suffix = "");

/// Single generator u at the origin.
FilteredComplex unknot();

/// Staircase plus (n-1)/2 boxes; BadParameter unless n is odd and positive.
FilteredComplex build_minus_En(int n);

/// Dual complex: arrows reversed, Alexander and Maslov gradings negated.
FilteredComplex mirror(FilteredComplex const& c);

/// Reflection across i = j on a declared model basis, as a permutation of
/// generators. The translate U^k g goes to U^(k + A(g)) partner(g).
struct FlipMap
{
    std::vector<std::size_t> partner;

    std::size_t operator()(std::size_t g) const { return partner.at(g); }
};

/// Recognises the model bases by generator name (x/z, y, a, b/c, d, u and the
/// dual normal-form names O, xh/xv, yh/yv, each with an optional "_i" suffix).
/// Throws UnsupportedModel if a name is not recognised or the reflection is not
/// a chain isomorphism exchanging the filtrations.
FlipMap flip(FilteredComplex const& c);

/// Sum over Alexander gradings of the graded Euler characteristic of the
/// hat-knot homology: exponent -> coefficient.
std::map<int, long long> alexander_polynomial(FilteredComplex const& c);

} // namespace floercone

#endif
