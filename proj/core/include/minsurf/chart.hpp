#pragma once

#include <array>
#include <string>
#include <vector>

#include "minsurf/complex_poly.hpp"
#include "minsurf/vec3.hpp"

namespace minsurf {

/// Real bivariate polynomial sum c_ij u^i v^j, stored densely.
///
/// Trailing all-zero rows (u powers) and columns (v powers) are trimmed, so
/// degree_u()/degree_v() are exact. The zero polynomial has degrees -1.
template <Scalar T>
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(T c);

    int degree_u() const { return static_cast<int>(rows_.size()) - 1; }
    int degree_v() const { return rows_.empty() ? -1 : static_cast<int>(rows_.front().size()) - 1; }
    bool is_zero() const { return rows_.empty(); }

    /// Coefficient of u^i v^j, zero outside the stored range.
    T coeff(int i, int j) const;
    void add(int i, int j, const T& value);
    void set(int i, int j, const T& value);

    T eval(const T& u, const T& v) const;

    BiPoly du() const;
    BiPoly dv() const;

    /// p(u0 + su*s, v0 + sv*t) as a polynomial in (s, t).
    BiPoly remap(const T& u0, const T& su, const T& v0, const T& sv) const;

    double max_abs_coeff() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const T& s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const T& s) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { return multiply(a, b); }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

private:
    static BiPoly multiply(const BiPoly& a, const BiPoly& b);
    void grow(int i, int j);
    void normalize();

    std::vector<std::vector<T>> rows_;  // rows_[i][j] = c_ij
};

/// R^3-valued bivariate polynomial chart x(u,v) = sum v_ij u^i v^j.
template <Scalar T>
class VectorChart {
public:
    VectorChart() = default;
    explicit VectorChart(std::array<BiPoly<T>, 3> components) : comps_(std::move(components)) {}

    const BiPoly<T>& component(int k) const { return comps_[static_cast<std::size_t>(k)]; }
    BiPoly<T>& component(int k) { return comps_[static_cast<std::size_t>(k)]; }

    int degree_u() const;
    int degree_v() const;

    Vec3<T> coeff(int i, int j) const;
    void set_coeff(int i, int j, const Vec3<T>& value);
    void add_coeff(int i, int j, const Vec3<T>& value);

    Vec3<T> eval(const T& u, const T& v) const;
    VectorChart du() const;
    VectorChart dv() const;
    /// x_uu + x_vv.
    VectorChart laplacian() const;
    VectorChart remap(const T& u0, const T& su, const T& v0, const T& sv) const;

    double max_abs_coeff() const;

    friend VectorChart operator+(const VectorChart& a, const VectorChart& b) {
        return VectorChart({a.comps_[0] + b.comps_[0], a.comps_[1] + b.comps_[1], a.comps_[2] + b.comps_[2]});
    }
    friend VectorChart operator-(const VectorChart& a, const VectorChart& b) {
        return VectorChart({a.comps_[0] - b.comps_[0], a.comps_[1] - b.comps_[1], a.comps_[2] - b.comps_[2]});
    }
    friend bool operator==(const VectorChart& a, const VectorChart& b) { return a.comps_ == b.comps_; }

private:
    std::array<BiPoly<T>, 3> comps_;
};

/// sum_k a_k . b_k as a scalar bivariate polynomial.
template <Scalar T>
BiPoly<T> dot(const VectorChart<T>& a, const VectorChart<T>& b);

/// Re Psi(u + iv), expanded exactly.
template <Scalar T>
VectorChart<T> real_chart(const MinimalCurve<T>& curve);

/// Im Psi(u + iv), expanded exactly.
template <Scalar T>
VectorChart<T> imag_chart(const MinimalCurve<T>& curve);

template <Scalar To, Scalar From>
VectorChart<To> cast_chart(const VectorChart<From>& chart);

/// { "degree_u", "degree_v", "coeffs": [ {"i","j","v":[x,y,z]} ] }.
/// Exact charts write coefficients as "p/q" strings; readers accept both.
template <Scalar T>
std::string chart_to_json(const VectorChart<T>& chart);

template <Scalar T>
VectorChart<T> chart_from_json(const std::string& text);

/// Enneper chart from f = 1, g = z:
/// (u - u^3/3 + u v^2, -v + v^3/3 - u^2 v, u^2 - v^2) / 2.
template <Scalar T>
VectorChart<T> enneper_chart();

/// Bi-cubic minimal but non-isothermal chart: Enneper with u replaced by u v.
template <Scalar T>
VectorChart<T> bicubic_counterexample_chart();

}  // namespace minsurf
