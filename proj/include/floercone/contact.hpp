#ifndef FLOERCONE_CONTACT_HPP
#define FLOERCONE_CONTACT_HPP

#include <string>
#include <utility>
#include <vector>

#include "floercone/rational.hpp"

namespace floercone {

struct LegendrianData
{
    int tb = 0;
    int rot = 0;
    int order = 1;
    std::string label;

    /// Negative stabilization: (tb, rot) -> (tb - 1, rot - 1).
    LegendrianData stabilized(int times = 1) const { return {tb - times, rot - times, order, label}; }
};

enum class ExpansionKind { negative, positive };

struct DgsExpansion
{
    Rational r;
    ExpansionKind kind = ExpansionKind::negative;
    std::vector<int> a;             ///< a_1 .. a_l, each <= -2
    int e = 0;                      ///< push-offs with +1 (positive kind)
    std::vector<int> stabilizations; ///< per component L_1 .. L_l
    std::vector<int> surgery_signs;  ///< +1 for each push-off, then -1 per component
};

/// r = [a_1 + 1, a_2, ..., a_l]^-; BadCoefficient unless r < 0.
DgsExpansion negative_expansion(Rational const& r);

/// r = x/y > 0, e minimal with y - e x <= 0, x/(y - e x) = [a_1, ..., a_l]^-
/// (l = 0 when y = e x). BadCoefficient unless r > 0.
DgsExpansion positive_expansion(Rational const& r);

/// c_1 - 1/(c_2 - 1/(... - 1/c_l)).
Rational evaluate_continued_fraction(std::vector<int> const& c);

/// Reconstructs r from an expansion.
Rational evaluate(DgsExpansion const& x);

/// True iff r = -1/l for a positive integer l.
bool characterize_all_minus_two(Rational const& r);

/// p/q = tb + r. ZeroCoefficient if r = 0 or the result is 0.
Rational smooth_coefficient(LegendrianData const& l, Rational const& r);

struct ContactLocator
{
    int t = 0;
    int s = 0;
    int sector = 0;
};

/// 2t = (rot - tb + 1) q - 2. ParityError if odd, BadCoefficients unless
/// q > 0, p != 0, gcd(p, q) = 1.
ContactLocator locate_contact_class(LegendrianData const& l, int p, int q);

/// p + (rot - tb) q - 1
int c1_surgery_cobordism(LegendrianData const& l, int p, int q);
/// y (rot + n - 1)
int c1_positive_integer_surgery(LegendrianData const& l, int n);
/// rot
int c1_plus_one_surgery(LegendrianData const& s);

struct EmnReduction
{
    Rational value;
    bool excluded_target = false; ///< value = -1
};

/// r - m + 1. BadParameter unless m is odd and positive, BadCoefficient
/// unless r < 0, ExcludedCoefficient if r = -m.
EmnReduction reduce_emn(int m, Rational const& r);

struct PipelineStep
{
    std::string label;
    bool computed = false; ///< verified here; otherwise a trusted bookkeeping step
    std::string fact;
    std::vector<std::pair<std::string, std::string>> values;
};

struct PipelineReport
{
    int n = 0;
    Rational r;
    std::vector<PipelineStep> steps;
    bool distinct = false;
    std::string route;

    /// "distinct: yes (case ii, k=1)"
    std::string verdict() const;
};

/// Runs the case analysis for contact r-surgery on the two Legendrian
/// representatives (tb = 1, rot = 0) of E_n. BadParameter unless n is odd and
/// > 3, BadCoefficient unless r < 0, ExcludedCoefficient for r = -1.
PipelineReport distinctness_pipeline(int n, Rational const& r);

} // namespace floercone

#endif
