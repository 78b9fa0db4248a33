#ifndef FLOERCONE_CONE_HPP
#define FLOERCONE_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "floercone/complex.hpp"
#include "floercone/homology.hpp"
#include "floercone/models.hpp"

namespace floercone {

enum class Segment { A, B };

struct ConeVertex
{
    Segment segment = Segment::A;
    int t = 0;
    int s = 0;

    friend bool operator==(ConeVertex const&, ConeVertex const&) = default;
};

/// One cell of the cone: the element U^I0 g of the copy of the input complex
/// at a vertex, where I0 = max(0, A(g) - s) on A-vertices and 0 on
/// B-vertices, so that every cell sits at I = 0.
struct ConeCell
{
    std::size_t vertex = 0;
    std::size_t generator = 0;
    int shift = 0;
};

enum class ConeRange { paper, full };

/// Surgery mapping cone. The assembled complex has one generator per cell,
/// named "A[t].g" / "B[t].g"; U-powers measure the drop of I. Alexander
/// gradings are 0 (no second filtration) and Maslov gradings are relative,
/// fixed per vertex so that every arrow drops them by 1.
struct MappingCone
{
    FilteredComplex input;
    FlipMap flip;
    int p = 0;
    int q = 1;
    int genus = 1;
    bool hat = false;

    std::vector<ConeVertex> vertices;
    std::vector<ConeCell> cells;
    FilteredComplex complex;

    int sector_of_t(int t) const;
    int sector_of_cell(std::size_t cell) const { return sector_of_t(vertices[cells[cell].vertex].t); }
    std::optional<std::size_t> find_vertex(Segment seg, int t) const;
    /// Sub-complex or sub-quotient spanned by the cells of one sector.
    FilteredComplex sector(int i) const;
};

/// Assembles the cone over the given vertex windows: A-vertices at
/// t in [a_lo, a_hi], B-vertices at t in [b_lo, b_hi]. Arrows into vertices
/// outside the window are dropped.
MappingCone assemble_cone(FilteredComplex const& c, FlipMap const& flip, int p, int q, int a_lo,
                          int a_hi, int b_lo, int b_hi);

/// A-vertices over t in [-(g-1)q, gq-1] and B-vertices over [-(g-1)q+p, gq-1]
/// (paper); or the same pattern widened by (|p| + 1)q on each side (full).
/// The A-window is widened upwards to at least p vertices so that the two
/// discarded tails stay disjoint. The genus is the largest Alexander
/// grading, at least 1.
/// Throws BadCoefficients unless q > 0, p != 0 and gcd(p, q) = 1.
MappingCone build_cone(FilteredComplex const& c, FlipMap const& flip, int p, int q,
                       ConeRange range = ConeRange::paper);

/// The I = 0 part: arrows with U-power 0 only, over GF(2).
MappingCone hat(MappingCone const& cone);

/// Ranks by Maslov grading (x4; mod 8 for the infinity flavour).
GradedRanks sector_homology(MappingCone const& cone, int i);

/// Removes the vertices where v (s >= g) or h (s <= -g) is an isomorphism,
/// leaving the paper window. Throws NotTruncatable if one of those maps is
/// not an isomorphism or sector ranks change.
MappingCone truncate(MappingCone const& cone);

struct InclusionReport
{
    std::size_t vertex = 0;
    int sector = 0;
    F2Matrix matrix;
    std::size_t source_dimension = 0;
    std::size_t target_dimension = 0;
    std::size_t rank = 0;
    std::vector<std::vector<bool>> kernel;

    bool injective() const { return rank == source_dimension; }
    bool surjective() const { return rank == target_dimension; }
    bool isomorphism() const { return injective() && surjective(); }
};

/// Map on homology induced by (t, B_s) -> its sector of a hat cone.
/// Throws NoSuchVertex.
InclusionReport include_B(MappingCone const& hat_cone, int t);

} // namespace floercone

#endif
