#pragma once

#include <cmath>
#include <complex>

#include "minsurf/scalar.hpp"

namespace minsurf {

/// Complex number over either backend. std::complex is only specified for
/// floating-point types, so the exact (Gaussian rational) backend needs its own.
template <Scalar T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return Complex(T(0), T(1)); }

    Complex conj() const { return {re, -im}; }
    /// |z|^2, exact on the rational backend.
    T norm() const { return re * re + im * im; }
    double abs() const { return std::hypot(ScalarTraits<T>::to_double(re), ScalarTraits<T>::to_double(im)); }
    bool is_zero() const { return ScalarTraits<T>::is_zero(re) && ScalarTraits<T>::is_zero(im); }

    std::complex<double> to_std() const {
        return {ScalarTraits<T>::to_double(re), ScalarTraits<T>::to_double(im)};
    }
    static Complex from_std(std::complex<double> z) {
        return {ScalarTraits<T>::from_double(z.real()), ScalarTraits<T>::from_double(z.imag())};
    }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const T d = b.norm();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <Scalar To, Scalar From>
Complex<To> cast_complex(const Complex<From>& z) {
    if constexpr (std::is_same_v<To, From>) {
        return z;
    } else if constexpr (std::is_same_v<To, double>) {
        return {ScalarTraits<From>::to_double(z.re), ScalarTraits<From>::to_double(z.im)};
    } else {
        return {ScalarTraits<To>::from_double(ScalarTraits<From>::to_double(z.re)),
                ScalarTraits<To>::from_double(ScalarTraits<From>::to_double(z.im))};
    }
}

/// i^k for integer k >= 0.
template <Scalar T>
Complex<T> i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {T(1), T(0)};
        case 1: return {T(0), T(1)};
        case 2: return {T(-1), T(0)};
        default: return {T(0), T(-1)};
    }
}

}  // namespace minsurf
