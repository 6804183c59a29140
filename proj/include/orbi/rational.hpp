#ifndef ORBI_RATIONAL_HPP
#define ORBI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace orbi {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1)
{
    return Rational(Integer(num), Integer(den));
}

/// "p/q" form, denominator always written (e.g. "2/1", "-1/3").
inline std::string to_string(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try
    {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'");
        return Rational(Integer(text.substr(0, slash)), den);
    }
    catch (const std::runtime_error& e)
    {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw ParseError("not a rational: '" + text + "'");
    }
}

inline bool is_integer(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

} // namespace orbi

#endif // ORBI_RATIONAL_HPP
