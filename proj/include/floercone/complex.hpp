#ifndef FLOERCONE_COMPLEX_HPP
#define FLOERCONE_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace floercone {

/// A GF(2)-linear combination of U-translates of generators, one monomial
/// per generator: index -> power of U. Homogeneity is what makes a single
/// power per generator sufficient; adding a second, different power for the
/// same generator throws InhomogeneousEntry.
using Chain = std::map<std::size_t, int>;

/// XOR-adds U^power * generator into the chain.
void add_monomial(Chain& chain, std::size_t generator, int power);

/// chain += U^shift * other
void add_shifted(Chain& chain, Chain const& other, int shift);

/// Generator of a complex over GF(2)[U,U^-1], stored at its U^0 translate,
/// which sits at (i, j) = (0, alexander). U^k shifts both coordinates by -k
/// and the Maslov grading by -2k. Gradings are kept quadrupled so that the
/// quarter-integer shifts of the dual-knot cone stay exact.
struct Generator
{
    std::string name;
    int alexander = 0;
    int maslov_x4 = 0;

    friend bool operator==(Generator const&, Generator const&) = default;
};

/// Differential entry from -> U^u_power * to.
struct Entry
{
    std::size_t from = 0;
    std::size_t to = 0;
    int u_power = 0;

    friend bool operator==(Entry const&, Entry const&) = default;
};

/// Drop of the j coordinate along from -> U^k to.
int j_drop(int alexander_from, int alexander_to, int u_power);

class FilteredComplex
{
public:
    FilteredComplex() = default;

    std::size_t add_generator(Generator g);

    /// GF(2)-adds the entry; an existing identical entry is removed.
    void toggle_entry(std::size_t from, std::size_t to, int u_power);
    void toggle_entry(std::string_view from, std::string_view to, int u_power);

    std::size_t size() const { return generators_.size(); }
    bool empty() const { return generators_.empty(); }

    std::vector<Generator> const& generators() const { return generators_; }
    Generator const& generator(std::size_t i) const { return generators_.at(i); }
    Chain const& boundary(std::size_t i) const { return boundary_.at(i); }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;

    /// All entries, ordered by (from, to).
    std::vector<Entry> entries() const;

    /// Applies the differential to a chain.
    Chain apply(Chain const& chain) const;

    /// Largest Alexander grading (0 for the empty complex).
    int max_alexander() const;

    friend bool operator==(FilteredComplex const& a, FilteredComplex const& b)
    {
        return a.generators_ == b.generators_ && a.boundary_ == b.boundary_;
    }

private:
    std::vector<Generator> generators_;
    std::vector<Chain> boundary_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Direct sum; names of the second summand must not collide with the first.
FilteredComplex direct_sum(FilteredComplex const& a, FilteredComplex const& b);

/// Subcomplex or subquotient spanned by the selected generators, keeping
/// only entries between selected ones.
FilteredComplex restrict_to(FilteredComplex const& c, std::vector<std::size_t> const& keep);

struct Violation
{
    enum class Kind { SquareNonZero, RaisesI, RaisesJ, GradingDrop };
    Kind kind;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string message;
};

/// Empty result iff the complex is a valid graded, doubly filtered complex.
std::vector<Violation> check_complex(FilteredComplex const& c);

} // namespace floercone

#endif
