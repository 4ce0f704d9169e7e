#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "minsurf/scalar.hpp"

namespace minsurf {

template <Scalar T>
struct Vec3 {
    std::array<T, 3> c{};

    Vec3() = default;
    Vec3(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)} {}

    T& operator[](std::size_t k) { return c[k]; }
    const T& operator[](std::size_t k) const { return c[k]; }

    Vec3& operator+=(const Vec3& o) { for (int k = 0; k < 3; ++k) c[k] += o.c[k]; return *this; }
    Vec3& operator-=(const Vec3& o) { for (int k = 0; k < 3; ++k) c[k] -= o.c[k]; return *this; }
    Vec3& operator*=(const T& s) { for (int k = 0; k < 3; ++k) c[k] *= s; return *this; }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator-(const Vec3& a) { return {-a.c[0], -a.c[1], -a.c[2]}; }
    friend Vec3 operator*(Vec3 a, const T& s) { return a *= s; }
    friend Vec3 operator*(const T& s, Vec3 a) { return a *= s; }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
};

using Vec3d = Vec3<double>;

template <Scalar T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec3d& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

template <Scalar To, Scalar From>
Vec3<To> cast_vec(const Vec3<From>& v) {
    Vec3<To> out;
    for (int k = 0; k < 3; ++k) {
        if constexpr (std::is_same_v<To, From>) {
            out[k] = v[k];
        } else if constexpr (std::is_same_v<To, double>) {
            out[k] = ScalarTraits<From>::to_double(v[k]);
        } else {
            out[k] = ScalarTraits<To>::from_double(ScalarTraits<From>::to_double(v[k]));
        }
    }
    return out;
}

}  // namespace minsurf
