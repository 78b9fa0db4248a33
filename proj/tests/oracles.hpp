#ifndef FLOERCONE_TESTS_ORACLES_HPP
#define FLOERCONE_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "floercone/complex.hpp"
#include "floercone/rational.hpp"

// Reference computations that share no code with the library beyond the
// FilteredComplex container.
namespace oracle {

// Dense rank over GF(2).
int dense_rank(std::vector<std::vector<int>> m);

// Homology of the complex with U set to 1, over GF(2), keyed by
// maslov_x4 (mod 8 when mod_two is set). Only entries whose power is in
// the allowed set contribute: pass only_unit = true for the hat flavour.
std::map<int, int> graded_homology(floercone::FilteredComplex const& c, bool only_unit, bool mod_two);

// rank H = N - 2 rank D, ignoring gradings.
int total_homology(floercone::FilteredComplex const& c, bool only_unit);

// Alexander polynomial of the two-bridge knot b(alpha, beta), beta odd,
// normalized symmetric with Delta(1) = 1. Keyed by exponent.
std::map<int, long long> two_bridge_alexander(int alpha, int beta);

// Value of c_1 - 1/(c_2 - 1/(... - 1/c_l)) computed with plain
// numerator/denominator pairs.
floercone::Rational evaluate_negative_fraction(std::vector<int> const& c);

// Seed for randomized tests; FLOERCONE_SEED overrides the default.
std::uint64_t seed();

} // namespace oracle

#endif
