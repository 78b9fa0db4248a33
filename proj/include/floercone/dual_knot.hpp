#ifndef FLOERCONE_DUAL_KNOT_HPP
#define FLOERCONE_DUAL_KNOT_HPP

#include <string>
#include <vector>

#include "floercone/cone.hpp"
#include "floercone/rational.hpp"
#include "floercone/reduction.hpp"

namespace floercone {

/// Cone over A_s for s in [-g+1, g] and B_s for s in [-g+n+1, g] (q = 1,
/// p = n) carrying the (I, J) double filtration and the absolute grading.
/// `complex` is the cone complex read as a knot complex: every cell has
/// I = 0, its Alexander grading is floor(J) and its Maslov grading (x4) is
/// 4 gr when that is integral for every cell, otherwise the cone's relative
/// grading.
struct DualCone
{
    MappingCone cone;
    int n = 0;
    std::vector<int> I;
    std::vector<Rational> J;
    std::vector<Rational> gr;
    FilteredComplex complex;
};

/// Throws BadFraming if n = 0.
DualCone build_dual_cone(FilteredComplex const& c, FlipMap const& flip, int n);

/// Filtered reduction followed by splitting into O, H_i (y^h -> U x^h) and
/// V_i (y^v -> x^v) summands; the output generators are renamed O, xh_i,
/// yh_i, xv_i, yv_i. Throws NormalFormMismatch if that shape is not reached.
ReducedForm normal_form(DualCone const& dc);
ReducedForm normal_form(FilteredComplex const& knot_complex);

/// Map on homology from C{i <= 0, j = s} to C{j = s} (= setting U = 1).
struct GMapReport
{
    int alexander = 0;
    F2Matrix matrix;
    std::size_t domain_dimension = 0;
    std::size_t target_dimension = 0;
    std::size_t rank = 0;
    std::vector<std::vector<bool>> kernel;

    bool injective() const { return rank == domain_dimension; }
};

GMapReport g_map(FilteredComplex const& knot_complex, int alexander);

/// (tb - rot + 1) / 2. Throws NonIntegral when tb - rot is even.
int loss_grading(int tb, int rot);

/// Cycles are sums of slice elements of C{i <= 0, j = s}, each named by its
/// generator. True iff their images under G differ in homology.
/// Throws NotCycles if either sum has nonzero boundary in the slice.
bool distinct_classes(FilteredComplex const& knot_complex, int alexander,
                      std::vector<std::string> const& class_a, std::vector<std::string> const& class_b);

} // namespace floercone

#endif
