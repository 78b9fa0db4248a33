#ifndef FLOERCONE_JSON_IO_HPP
#define FLOERCONE_JSON_IO_HPP

#include <json.hpp>

#include "floercone/complex.hpp"
#include "floercone/homology.hpp"
#include "floercone/rational.hpp"

namespace floercone {

using Json = nlohmann::ordered_json;

Json to_json(FilteredComplex const& c);

/// Throws Error(Parse) on malformed input, UnknownGenerator / DuplicateGenerator
/// on inconsistent names.
FilteredComplex complex_from_json(Json const& j);

Json to_json(Rational const& r);
Rational rational_from_json(Json const& j);

/// {"keys":[...], "ranks":[{"key":[..],"rank":r}], "torsion":[{"key":[..],"orders":[..]}]}
Json to_json(GradedRanks const& g);

/// Canonical text form: two-space indent plus trailing newline.
std::string dump(Json const& j);

} // namespace floercone

#endif
