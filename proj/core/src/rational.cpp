#include "minsurf/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "minsurf/errors.hpp"
#include "minsurf/scalar.hpp"

namespace minsurf {

namespace {

Rational pow10(int e) {
    Rational r = 1;
    const Rational ten = 10;
    for (int k = 0; k < std::abs(e); ++k) r *= ten;
    return e < 0 ? Rational(1) / r : r;
}

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

Rational parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw FormatError("not an integer: '" + std::string(s) + "'");
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    // A leading zero would make the mpz parser read octal.
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
    using boost::multiprecision::mpz_int;
    const Rational value{mpz_int(std::string(s))};
    return negative ? Rational(-value) : value;
}

// [sign] digits [. digits] [e|E [sign] digits]
Rational parse_decimal(std::string_view s) {
    std::string mantissa;
    int exponent = 0;
    std::size_t k = 0;
    bool negative = false;
    if (k < s.size() && (s[k] == '-' || s[k] == '+')) negative = s[k++] == '-';
    bool any_digit = false;
    for (; k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); ++k) {
        mantissa.push_back(s[k]);
        any_digit = true;
    }
    if (k < s.size() && s[k] == '.') {
        for (++k; k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); ++k) {
            mantissa.push_back(s[k]);
            --exponent;
            any_digit = true;
        }
    }
    if (!any_digit) throw FormatError("not a number: '" + std::string(s) + "'");
    if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
        const std::string_view rest = s.substr(k + 1);
        if (!is_integer_literal(rest)) throw FormatError("bad exponent in '" + std::string(s) + "'");
        exponent += std::stoi(std::string(rest));
        k = s.size();
    }
    if (k != s.size()) throw FormatError("trailing characters in '" + std::string(s) + "'");
    Rational value = parse_integer(mantissa) * pow10(exponent);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw FormatError("empty rational literal");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    const Rational num = parse_integer(text.substr(0, slash));
    const Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

std::string to_string(const Rational& value) {
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw FormatError("non-finite value cannot become a rational");
    return Rational(value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string ScalarTraits<double>::to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace minsurf
