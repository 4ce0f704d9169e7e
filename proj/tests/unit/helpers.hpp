#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "minsurf/complex_poly.hpp"

namespace testing {

using minsurf::Complex;
using minsurf::ComplexPoly;
using minsurf::Rational;

/// Polynomial from (re, im) pairs, lowest degree first.
template <class T>
ComplexPoly<T> poly(std::initializer_list<std::pair<double, double>> c) {
    std::vector<Complex<T>> v;
    for (const auto& [re, im] : c) v.emplace_back(minsurf::ScalarTraits<T>::from_double(re), minsurf::ScalarTraits<T>::from_double(im));
    return ComplexPoly<T>(std::move(v));
}

inline ComplexPoly<Rational> qpoly(std::initializer_list<std::pair<double, double>> c) { return poly<Rational>(c); }
inline ComplexPoly<double> dpoly(std::initializer_list<std::pair<double, double>> c) { return poly<double>(c); }

inline double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0 ? 0 : std::abs(a - b) / s;
}

inline std::string tmp_path(const std::string& name) { return std::string(MINSURF_TEST_TMP) + "/" + name; }

}  // namespace testing
