#include "minsurf/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "json_scalar.hpp"

namespace minsurf {

template <Scalar T>
ComplexPoly<T>::ComplexPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if constexpr (!ScalarTraits<T>::exact) {
        for (const auto& c : coeffs_) {
            if (!std::isfinite(c.re) || !std::isfinite(c.im)) {
                throw DegenerateInputError("non-finite polynomial coefficient");
            }
        }
    }
    normalize();
}

template <Scalar T>
ComplexPoly<T> ComplexPoly<T>::monomial(int k, Coeff c) {
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return ComplexPoly(std::move(v));
}

template <Scalar T>
void ComplexPoly<T>::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

template <Scalar T>
auto ComplexPoly<T>::coeff(int k) const -> Coeff {
    if (k < 0 || k > degree()) return Coeff();
    return coeffs_[static_cast<std::size_t>(k)];
}

template <Scalar T>
auto ComplexPoly<T>::eval(const Coeff& z) const -> Coeff {
    Coeff acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

template <Scalar T>
auto ComplexPoly<T>::eval_naive(const Coeff& z) const -> Coeff {
    Coeff acc;
    Coeff power(T(1));
    for (const auto& c : coeffs_) {
        acc += c * power;
        power = power * z;
    }
    return acc;
}

template <Scalar T>
ComplexPoly<T> ComplexPoly<T>::derivative() const {
    if (degree() < 1) return {};
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = Coeff(T(static_cast<int>(k))) * coeffs_[k];
    return ComplexPoly(std::move(out));
}

template <Scalar T>
ComplexPoly<T> ComplexPoly<T>::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Coeff> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / Coeff(T(static_cast<int>(k + 1)));
    }
    return ComplexPoly(std::move(out));
}

template <Scalar T>
double ComplexPoly<T>::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, c.abs());
    return m;
}

template <Scalar T>
ComplexPoly<T>& ComplexPoly<T>::operator+=(const ComplexPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

template <Scalar T>
ComplexPoly<T>& ComplexPoly<T>::operator-=(const ComplexPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

template <Scalar T>
ComplexPoly<T> ComplexPoly<T>::multiply(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ComplexPoly(std::move(out));
}

template <Scalar T>
ComplexPoly<T> ComplexPoly<T>::scale(const ComplexPoly& p, const Coeff& s) {
    std::vector<Coeff> out = p.coeffs_;
    for (auto& c : out) c = s * c;
    return ComplexPoly(std::move(out));
}

template <Scalar T>
PolyDivision<T> divide(const ComplexPoly<T>& numerator, const ComplexPoly<T>& divisor) {
    if (divisor.is_zero()) throw DegenerateInputError("polynomial division by zero");
    const int dn = numerator.degree();
    const int dd = divisor.degree();
    if (dn < dd) return {ComplexPoly<T>(), numerator};

    std::vector<Complex<T>> rem = numerator.coeffs();
    std::vector<Complex<T>> quot(static_cast<std::size_t>(dn - dd) + 1);
    const Complex<T> lead = divisor.leading();
    for (int k = dn - dd; k >= 0; --k) {
        const Complex<T> q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {ComplexPoly<T>(std::move(quot)), ComplexPoly<T>(std::move(rem))};
}

template <Scalar T>
MinimalCurve<T> weierstrass_curve(const ComplexPoly<T>& f, const ComplexPoly<T>& g) {
    if (f.is_zero()) throw DegenerateInputError("degenerate generating pair");
    using C = Complex<T>;
    const C half(T(1) / T(2));
    const C half_i(T(0), T(1) / T(2));
    const ComplexPoly<T> one = ComplexPoly<T>::constant(C(T(1)));
    const ComplexPoly<T> g2 = g * g;
    MinimalCurve<T> curve;
    curve.components[0] = (half * (f * (one - g2))).antiderivative();
    curve.components[1] = (half_i * (f * (one + g2))).antiderivative();
    curve.components[2] = (f * g).antiderivative();
    return curve;
}

template <Scalar T>
double isotropy_defect(const MinimalCurve<T>& curve) {
    const auto d = curve.derivative();
    const ComplexPoly<T> square = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    return square.max_abs_coeff();
}

template <Scalar T>
ComplexPoly<T> complex_poly_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_array()) throw FormatError("polynomial JSON must be an array of [re, im] pairs");
    std::vector<Complex<T>> coeffs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw FormatError("polynomial JSON entries must be [re, im] pairs");
        }
        coeffs.emplace_back(json_to_scalar<T>(pair[0]), json_to_scalar<T>(pair[1]));
    }
    return ComplexPoly<T>(std::move(coeffs));
}

template <Scalar T>
std::string complex_poly_to_json(const ComplexPoly<T>& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back({scalar_to_json(c.re), scalar_to_json(c.im)});
    return j.dump();
}

template <Scalar T>
std::string to_string(const ComplexPoly<T>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const auto c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << ScalarTraits<T>::to_string(c.re) << (ScalarTraits<T>::to_double(c.im) < 0 ? "" : "+")
           << ScalarTraits<T>::to_string(c.im) << "i)";
        if (k >= 1) os << " z";
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

#define MINSURF_INSTANTIATE(T)                                                              \
    template class ComplexPoly<T>;                                                          \
    template PolyDivision<T> divide(const ComplexPoly<T>&, const ComplexPoly<T>&);          \
    template MinimalCurve<T> weierstrass_curve(const ComplexPoly<T>&, const ComplexPoly<T>&); \
    template double isotropy_defect(const MinimalCurve<T>&);                                \
    template ComplexPoly<T> complex_poly_from_json<T>(const std::string&);                  \
    template std::string complex_poly_to_json(const ComplexPoly<T>&);                      \
    template std::string to_string(const ComplexPoly<T>&);

MINSURF_INSTANTIATE(double)
MINSURF_INSTANTIATE(Rational)

}  // namespace minsurf
