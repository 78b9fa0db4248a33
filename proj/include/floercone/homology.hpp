#ifndef FLOERCONE_HOMOLOGY_HPP
#define FLOERCONE_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "floercone/complex.hpp"
#include "floercone/reduction.hpp"

namespace floercone {

/// Dense matrix over GF(2).
class F2Matrix
{
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }
    void flip(std::size_t r, std::size_t c) { data_[r * cols_ + c] ^= 1; }

    std::size_t rank() const;
    /// Basis of the null space, each vector of length cols().
    std::vector<std::vector<bool>> kernel() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<unsigned char> data_;
};

enum class Flavor
{
    hat,        ///< C{i = 0}: U^0 entries, over GF(2)
    hat_knot,   ///< associated graded of C{i = 0}: entries preserving (i, j)
    minus,      ///< C{i <= 0} over GF(2)[U], j forgotten
    knot_minus, ///< associated graded in j, over GF(2)[U]
    infinity,   ///< over GF(2)[U, U^-1]
};

enum class GradingKey { maslov_x4, alexander };

/// Ranks keyed by the selected grading values of the generator carrying each
/// summand. For infinity the Maslov key is reduced mod 2 (x4: mod 8).
struct GradedRanks
{
    std::vector<GradingKey> keys;
    std::map<std::vector<int>, int> ranks;
    std::map<std::vector<int>, std::vector<int>> torsion;

    int total() const;
    int rank_at(std::vector<int> const& key) const;

    friend bool operator==(GradedRanks const&, GradedRanks const&) = default;
};

GradedRanks homology(FilteredComplex const& c, Flavor flavor, std::vector<GradingKey> keys);

/// The complex over GF(2) obtained by keeping only the entries the flavor
/// sees at U^0 (hat / hat_knot). Entries are stored with power 0.
FilteredComplex field_slice(FilteredComplex const& c, Flavor flavor);

/// C{i <= 0, j = s}: one element U^(A-s) g per generator with A(g) >= s,
/// named after g, with Maslov grading of that translate. Entries preserve j.
FilteredComplex minus_slice(FilteredComplex const& c, int s);

/// C{j = s}: one element U^(A-s) g for every generator.
FilteredComplex row_slice(FilteredComplex const& c, int s);

/// Homology of a complex over GF(2) with an explicit basis: reduce fully and
/// keep the trace so cycles can be written in the homology basis.
struct FieldHomology
{
    ReducedForm reduced;

    std::size_t dimension() const { return reduced.complex.size(); }
    /// Homology class of a cycle given in the input basis, as a 0/1 vector.
    std::vector<bool> class_of(Chain const& cycle) const;
};

FieldHomology field_homology(FilteredComplex const& field_complex);

/// Matrix of the map on homology induced by a chain map given on input
/// generators: image[g] is the chain in the target complex.
F2Matrix induced_map(FieldHomology const& source, FieldHomology const& target,
                     std::vector<Chain> const& image);

struct SmithSummand
{
    std::size_t generator = 0; ///< index in the input complex of the summand's generator
    int torsion = 0;           ///< 0 = free, k > 0 = F[U]/U^k
};

/// Decomposition of the GF(2)[U]-homology of a graded complex with
/// polynomial entries into free and cyclic torsion summands.
std::vector<SmithSummand> smith_summands(FilteredComplex const& c, Flavor flavor);

/// Ranks of HFK^-_s per Maslov grading (x4); torsion lists the U-torsion
/// orders of the summands that are alive in slice s.
GradedRanks hfk_minus(FilteredComplex const& c, int s);

} // namespace floercone

#endif
