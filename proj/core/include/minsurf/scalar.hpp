#pragma once

#include <cmath>
#include <string>

#include "minsurf/rational.hpp"

namespace minsurf {

/// Per-backend policy: exact rationals vs. double precision.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    /// Magnitudes below this are treated as zero when normalizing polynomials.
    static constexpr double zero_cutoff = 1e-14;

    static bool is_zero(double x) { return std::abs(x) < zero_cutoff; }
    static double to_double(double x) { return x; }
    static double from_double(double x) { return x; }
    static std::string to_string(double x);
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;

    static bool is_zero(const Rational& x) { return x == 0; }
    static double to_double(const Rational& x) { return minsurf::to_double(x); }
    static Rational from_double(double x) { return rational_from_double(x); }
    static std::string to_string(const Rational& x) { return minsurf::to_string(x); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

}  // namespace minsurf
