#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace minsurf {

/// Exact rational number. Expression templates are disabled so that `auto`
/// always deduces a value type in generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "p/q" or a decimal literal ("-0.125", "1e-3") exactly.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact binary expansion of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& value);

}  // namespace minsurf
