#ifndef FLOERCONE_ERROR_HPP
#define FLOERCONE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace floercone {

enum class ErrorKind {
    BadParameter,
    BadCoefficient,
    BadCoefficients,
    BadFraming,
    ZeroCoefficient,
    ExcludedCoefficient,
    NonIntegral,
    ParityError,
    NoUnitEntry,
    NoSuchVertex,
    NotTruncatable,
    NotCycles,
    NormalFormMismatch,
    UnsupportedModel,
    InhomogeneousEntry,
    DuplicateGenerator,
    UnknownGenerator,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Domain error. The CLI maps Parse to exit code 2 and everything else to 1.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace floercone

#endif
