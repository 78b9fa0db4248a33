#include "floercone/rational.hpp"

#include <regex>

#include "floercone/error.hpp"

namespace floercone {

std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadCoefficient: return "BadCoefficient";
    case ErrorKind::BadCoefficients: return "BadCoefficients";
    case ErrorKind::BadFraming: return "BadFraming";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ExcludedCoefficient: return "ExcludedCoefficient";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::NoUnitEntry: return "NoUnitEntry";
    case ErrorKind::NoSuchVertex: return "NoSuchVertex";
    case ErrorKind::NotTruncatable: return "NotTruncatable";
    case ErrorKind::NotCycles: return "NotCycles";
    case ErrorKind::NormalFormMismatch: return "NormalFormMismatch";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::InhomogeneousEntry: return "InhomogeneousEntry";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

BigInt floor(Rational const& r)
{
    BigInt const n = numerator(r);
    BigInt const d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && n < 0)
        q -= 1;
    return q;
}

std::string to_string(Rational const& r)
{
    if (is_integer(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string const& text)
{
    static std::regex const pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
    BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
    if (den == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
}

} // namespace floercone
