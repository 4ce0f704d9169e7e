#pragma once

#include <array>
#include <string>
#include <vector>

#include "minsurf/complex.hpp"
#include "minsurf/errors.hpp"

namespace minsurf {

/// Univariate polynomial with complex coefficients; coeffs()[k] multiplies z^k.
///
/// The stored coefficient list never ends in a zero coefficient (exact zero on
/// the rational backend, magnitude below 1e-14 on the float backend), so
/// degree() is the index of the last stored entry. The zero polynomial has
/// degree -1 and no stored coefficients.
template <Scalar T>
class ComplexPoly {
public:
    using Coeff = Complex<T>;

    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Coeff> coeffs);

    static ComplexPoly constant(Coeff c) { return ComplexPoly(std::vector<Coeff>{std::move(c)}); }
    static ComplexPoly monomial(int k, Coeff c = Coeff(T(1)));
    /// The polynomial z.
    static ComplexPoly identity() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k, zero past the degree.
    Coeff coeff(int k) const;
    Coeff leading() const { return is_zero() ? Coeff() : coeffs_.back(); }

    /// Horner evaluation.
    Coeff eval(const Coeff& z) const;
    /// Power-sum evaluation, kept as a cross-check for eval().
    Coeff eval_naive(const Coeff& z) const;

    ComplexPoly derivative() const;
    /// Term-by-term antiderivative with zero constant term.
    ComplexPoly antiderivative() const;

    /// Largest |c_k| as a double; 0 for the zero polynomial.
    double max_abs_coeff() const;

    ComplexPoly& operator+=(const ComplexPoly& o);
    ComplexPoly& operator-=(const ComplexPoly& o);

    friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
    friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
    friend ComplexPoly operator-(const ComplexPoly& a) { return ComplexPoly() - a; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) { return multiply(a, b); }
    friend ComplexPoly operator*(const Coeff& s, const ComplexPoly& p) { return scale(p, s); }
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    static ComplexPoly multiply(const ComplexPoly& a, const ComplexPoly& b);
    static ComplexPoly scale(const ComplexPoly& p, const Coeff& s);
    void normalize();

    std::vector<Coeff> coeffs_;
};

template <Scalar T>
struct PolyDivision {
    ComplexPoly<T> quotient;
    ComplexPoly<T> remainder;
};

/// Synthetic long division; throws DegenerateInputError for a zero divisor.
template <Scalar T>
PolyDivision<T> divide(const ComplexPoly<T>& numerator, const ComplexPoly<T>& divisor);

template <Scalar T>
ComplexPoly<T> derivative(const ComplexPoly<T>& p) { return p.derivative(); }
template <Scalar T>
ComplexPoly<T> antiderivative(const ComplexPoly<T>& p) { return p.antiderivative(); }

template <Scalar To, Scalar From>
ComplexPoly<To> cast_poly(const ComplexPoly<From>& p) {
    std::vector<Complex<To>> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(cast_complex<To>(c));
    return ComplexPoly<To>(std::move(out));
}

/// Isotropic complex curve Psi = (Psi_1, Psi_2, Psi_3), based at z0 = 0.
template <Scalar T>
struct MinimalCurve {
    std::array<ComplexPoly<T>, 3> components;

    std::array<ComplexPoly<T>, 3> derivative() const {
        return {components[0].derivative(), components[1].derivative(), components[2].derivative()};
    }
};

/// Integrates (f(1-g^2)/2, i f(1+g^2)/2, f g) from 0. Throws
/// DegenerateInputError("degenerate generating pair") when f is zero.
template <Scalar T>
MinimalCurve<T> weierstrass_curve(const ComplexPoly<T>& f, const ComplexPoly<T>& g);

/// Largest coefficient magnitude of Psi_1'^2 + Psi_2'^2 + Psi_3'^2.
template <Scalar T>
double isotropy_defect(const MinimalCurve<T>& curve);

/// JSON array of [re, im] pairs, lowest degree first. Entries may be numbers
/// or exact strings such as "3/4".
template <Scalar T>
ComplexPoly<T> complex_poly_from_json(const std::string& text);

template <Scalar T>
std::string complex_poly_to_json(const ComplexPoly<T>& p);

/// Human-readable form such as "(1+2i) z^2 + (-1) z".
template <Scalar T>
std::string to_string(const ComplexPoly<T>& p);

}  // namespace minsurf
