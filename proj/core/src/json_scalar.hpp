#pragma once

// Internal helpers shared by the JSON readers/writers; not installed.

#include <json.hpp>

#include "minsurf/errors.hpp"
#include "minsurf/scalar.hpp"

namespace minsurf {

/// Accepts a JSON number or an exact string literal ("p/q", "0.25").
template <Scalar T>
T json_to_scalar(const nlohmann::json& j) {
    if (j.is_number()) {
        return ScalarTraits<T>::from_double(j.get<double>());
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if constexpr (ScalarTraits<T>::exact) {
            return r;
        } else {
            return to_double(r);
        }
    }
    throw FormatError("expected a number or rational string, got " + j.dump());
}

inline nlohmann::json scalar_to_json(double x) { return x; }
inline nlohmann::json scalar_to_json(const Rational& x) { return to_string(x); }

}  // namespace minsurf
