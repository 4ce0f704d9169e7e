#include "minsurf/chart.hpp"

#include <algorithm>

#include <json.hpp>

#include "json_scalar.hpp"

namespace minsurf {

namespace {

template <Scalar T>
T binomial(int n, int k) {
    T r(1);
    for (int m = 1; m <= k; ++m) r = r * T(n - k + m) / T(m);
    return r;
}

template <Scalar T>
T power(const T& x, int n) {
    T r(1);
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

}  // namespace

// ---- BiPoly ---------------------------------------------------------------

template <Scalar T>
BiPoly<T> BiPoly<T>::constant(T c) {
    BiPoly p;
    p.set(0, 0, c);
    return p;
}

template <Scalar T>
T BiPoly<T>::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > degree_u() || j > degree_v()) return T(0);
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

template <Scalar T>
void BiPoly<T>::grow(int i, int j) {
    const std::size_t cols = std::max<std::size_t>(rows_.empty() ? 0 : rows_.front().size(), static_cast<std::size_t>(j) + 1);
    if (rows_.size() < static_cast<std::size_t>(i) + 1) rows_.resize(static_cast<std::size_t>(i) + 1);
    for (auto& row : rows_) row.resize(cols, T(0));
}

template <Scalar T>
void BiPoly<T>::normalize() {
    auto row_zero = [](const std::vector<T>& row) {
        return std::all_of(row.begin(), row.end(), [](const T& x) { return ScalarTraits<T>::is_zero(x); });
    };
    while (!rows_.empty() && row_zero(rows_.back())) rows_.pop_back();
    if (rows_.empty()) return;
    std::size_t cols = rows_.front().size();
    while (cols > 0) {
        bool zero = true;
        for (const auto& row : rows_) zero = zero && ScalarTraits<T>::is_zero(row[cols - 1]);
        if (!zero) break;
        --cols;
    }
    for (auto& row : rows_) row.resize(cols);
}

template <Scalar T>
void BiPoly<T>::add(int i, int j, const T& value) {
    grow(i, j);
    rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += value;
    normalize();
}

template <Scalar T>
void BiPoly<T>::set(int i, int j, const T& value) {
    grow(i, j);
    rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    normalize();
}

template <Scalar T>
T BiPoly<T>::eval(const T& u, const T& v) const {
    T acc(0);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        T row(0);
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * v + *jt;
        acc = acc * u + row;
    }
    return acc;
}

template <Scalar T>
BiPoly<T> BiPoly<T>::du() const {
    BiPoly out;
    for (int i = 1; i <= degree_u(); ++i) {
        for (int j = 0; j <= degree_v(); ++j) {
            const T& c = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!ScalarTraits<T>::is_zero(c)) {
                out.grow(i - 1, j);
                out.rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = T(i) * c;
            }
        }
    }
    out.normalize();
    return out;
}

template <Scalar T>
BiPoly<T> BiPoly<T>::dv() const {
    BiPoly out;
    for (int i = 0; i <= degree_u(); ++i) {
        for (int j = 1; j <= degree_v(); ++j) {
            const T& c = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!ScalarTraits<T>::is_zero(c)) {
                out.grow(i, j - 1);
                out.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = T(j) * c;
            }
        }
    }
    out.normalize();
    return out;
}

template <Scalar T>
BiPoly<T> BiPoly<T>::remap(const T& u0, const T& su, const T& v0, const T& sv) const {
    // (u0 + su s)^i = sum_k C(i,k) u0^(i-k) su^k s^k, likewise in v.
    BiPoly out;
    for (int i = 0; i <= degree_u(); ++i) {
        for (int j = 0; j <= degree_v(); ++j) {
            const T& c = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (ScalarTraits<T>::is_zero(c)) continue;
            for (int k = 0; k <= i; ++k) {
                const T a = binomial<T>(i, k) * power(u0, i - k) * power(su, k);
                for (int l = 0; l <= j; ++l) {
                    const T b = binomial<T>(j, l) * power(v0, j - l) * power(sv, l);
                    out.grow(k, l);
                    out.rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += c * a * b;
                }
            }
        }
    }
    out.normalize();
    return out;
}

template <Scalar T>
double BiPoly<T>::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& row : rows_) {
        for (const auto& c : row) m = std::max(m, std::abs(ScalarTraits<T>::to_double(c)));
    }
    return m;
}

template <Scalar T>
BiPoly<T>& BiPoly<T>::operator+=(const BiPoly& o) {
    if (o.is_zero()) return *this;
    grow(o.degree_u(), o.degree_v());
    for (int i = 0; i <= o.degree_u(); ++i) {
        for (int j = 0; j <= o.degree_v(); ++j) {
            rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += o.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    normalize();
    return *this;
}

template <Scalar T>
BiPoly<T>& BiPoly<T>::operator-=(const BiPoly& o) {
    if (o.is_zero()) return *this;
    grow(o.degree_u(), o.degree_v());
    for (int i = 0; i <= o.degree_u(); ++i) {
        for (int j = 0; j <= o.degree_v(); ++j) {
            rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= o.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    normalize();
    return *this;
}

template <Scalar T>
BiPoly<T>& BiPoly<T>::operator*=(const T& s) {
    for (auto& row : rows_) {
        for (auto& c : row) c *= s;
    }
    normalize();
    return *this;
}

template <Scalar T>
BiPoly<T> BiPoly<T>::multiply(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BiPoly out;
    out.grow(a.degree_u() + b.degree_u(), a.degree_v() + b.degree_v());
    for (int i = 0; i <= a.degree_u(); ++i) {
        for (int j = 0; j <= a.degree_v(); ++j) {
            const T& x = a.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (ScalarTraits<T>::is_zero(x)) continue;
            for (int k = 0; k <= b.degree_u(); ++k) {
                for (int l = 0; l <= b.degree_v(); ++l) {
                    out.rows_[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] +=
                        x * b.rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                }
            }
        }
    }
    out.normalize();
    return out;
}

// ---- VectorChart ----------------------------------------------------------

template <Scalar T>
int VectorChart<T>::degree_u() const {
    return std::max({comps_[0].degree_u(), comps_[1].degree_u(), comps_[2].degree_u()});
}

template <Scalar T>
int VectorChart<T>::degree_v() const {
    return std::max({comps_[0].degree_v(), comps_[1].degree_v(), comps_[2].degree_v()});
}

template <Scalar T>
Vec3<T> VectorChart<T>::coeff(int i, int j) const {
    return {comps_[0].coeff(i, j), comps_[1].coeff(i, j), comps_[2].coeff(i, j)};
}

template <Scalar T>
void VectorChart<T>::set_coeff(int i, int j, const Vec3<T>& value) {
    for (int k = 0; k < 3; ++k) comps_[static_cast<std::size_t>(k)].set(i, j, value[static_cast<std::size_t>(k)]);
}

template <Scalar T>
void VectorChart<T>::add_coeff(int i, int j, const Vec3<T>& value) {
    for (int k = 0; k < 3; ++k) comps_[static_cast<std::size_t>(k)].add(i, j, value[static_cast<std::size_t>(k)]);
}

template <Scalar T>
Vec3<T> VectorChart<T>::eval(const T& u, const T& v) const {
    return {comps_[0].eval(u, v), comps_[1].eval(u, v), comps_[2].eval(u, v)};
}

template <Scalar T>
VectorChart<T> VectorChart<T>::du() const {
    return VectorChart({comps_[0].du(), comps_[1].du(), comps_[2].du()});
}

template <Scalar T>
VectorChart<T> VectorChart<T>::dv() const {
    return VectorChart({comps_[0].dv(), comps_[1].dv(), comps_[2].dv()});
}

template <Scalar T>
VectorChart<T> VectorChart<T>::laplacian() const {
    return du().du() + dv().dv();
}

template <Scalar T>
VectorChart<T> VectorChart<T>::remap(const T& u0, const T& su, const T& v0, const T& sv) const {
    return VectorChart({comps_[0].remap(u0, su, v0, sv), comps_[1].remap(u0, su, v0, sv),
                        comps_[2].remap(u0, su, v0, sv)});
}

template <Scalar T>
double VectorChart<T>::max_abs_coeff() const {
    return std::max({comps_[0].max_abs_coeff(), comps_[1].max_abs_coeff(), comps_[2].max_abs_coeff()});
}

template <Scalar T>
BiPoly<T> dot(const VectorChart<T>& a, const VectorChart<T>& b) {
    return a.component(0) * b.component(0) + a.component(1) * b.component(1) + a.component(2) * b.component(2);
}

namespace {

// Expands p(u + iv) and keeps the real (imag_part = false) or imaginary part.
template <Scalar T>
BiPoly<T> expand_part(const ComplexPoly<T>& p, bool imag_part) {
    BiPoly<T> out;
    for (int n = 0; n <= p.degree(); ++n) {
        const Complex<T> c = p.coeff(n);
        if (c.is_zero()) continue;
        // z^n = sum_m C(n,m) u^(n-m) (i v)^m
        for (int m = 0; m <= n; ++m) {
            const Complex<T> term = c * i_pow<T>(m);
            const T& part = imag_part ? term.im : term.re;
            if (ScalarTraits<T>::is_zero(part)) continue;
            out.add(n - m, m, binomial<T>(n, m) * part);
        }
    }
    return out;
}

}  // namespace

template <Scalar T>
VectorChart<T> real_chart(const MinimalCurve<T>& curve) {
    return VectorChart<T>({expand_part(curve.components[0], false), expand_part(curve.components[1], false),
                           expand_part(curve.components[2], false)});
}

template <Scalar T>
VectorChart<T> imag_chart(const MinimalCurve<T>& curve) {
    return VectorChart<T>({expand_part(curve.components[0], true), expand_part(curve.components[1], true),
                           expand_part(curve.components[2], true)});
}

template <Scalar To, Scalar From>
VectorChart<To> cast_chart(const VectorChart<From>& chart) {
    VectorChart<To> out;
    for (int i = 0; i <= chart.degree_u(); ++i) {
        for (int j = 0; j <= chart.degree_v(); ++j) out.set_coeff(i, j, cast_vec<To>(chart.coeff(i, j)));
    }
    return out;
}

template <Scalar T>
std::string chart_to_json(const VectorChart<T>& chart) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= chart.degree_u(); ++i) {
        for (int j = 0; j <= chart.degree_v(); ++j) {
            const Vec3<T> c = chart.coeff(i, j);
            if (ScalarTraits<T>::is_zero(c[0]) && ScalarTraits<T>::is_zero(c[1]) && ScalarTraits<T>::is_zero(c[2])) {
                continue;
            }
            coeffs.push_back({{"i", i}, {"j", j}, {"v", {scalar_to_json(c[0]), scalar_to_json(c[1]), scalar_to_json(c[2])}}});
        }
    }
    nlohmann::json j = {{"degree_u", chart.degree_u()}, {"degree_v", chart.degree_v()}, {"coeffs", coeffs}};
    return j.dump(2);
}

template <Scalar T>
VectorChart<T> chart_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("chart JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw FormatError("chart JSON needs a \"coeffs\" array");
    }
    VectorChart<T> chart;
    for (const auto& entry : j["coeffs"]) {
        if (!entry.contains("i") || !entry.contains("j") || !entry.contains("v") || !entry["v"].is_array() ||
            entry["v"].size() != 3) {
            throw FormatError("chart coefficient needs \"i\", \"j\" and a 3-vector \"v\"");
        }
        const int i = entry["i"].get<int>();
        const int jj = entry["j"].get<int>();
        if (i < 0 || jj < 0) throw FormatError("negative exponent in chart JSON");
        chart.add_coeff(i, jj, {json_to_scalar<T>(entry["v"][0]), json_to_scalar<T>(entry["v"][1]),
                                json_to_scalar<T>(entry["v"][2])});
    }
    if (j.contains("degree_u") && j.contains("degree_v")) {
        const int du = j["degree_u"].get<int>();
        const int dv = j["degree_v"].get<int>();
        if (chart.degree_u() > du || chart.degree_v() > dv) {
            throw FormatError("chart coefficients exceed the declared degrees");
        }
    }
    return chart;
}

template <Scalar T>
VectorChart<T> enneper_chart() {
    const T h = T(1) / T(2);
    const T s = T(1) / T(6);
    VectorChart<T> x;
    x.component(0).set(1, 0, h);
    x.component(0).set(3, 0, -s);
    x.component(0).set(1, 2, h);
    x.component(1).set(0, 1, -h);
    x.component(1).set(0, 3, s);
    x.component(1).set(2, 1, -h);
    x.component(2).set(2, 0, h);
    x.component(2).set(0, 2, -h);
    return x;
}

template <Scalar T>
VectorChart<T> bicubic_counterexample_chart() {
    // (u v - u^3 v^3 / 3 + u v^3, -v + v^3/3 - u^2 v^3, u^2 v^2 - v^2) / 2
    const T h = T(1) / T(2);
    const T s = T(1) / T(6);
    VectorChart<T> x;
    x.component(0).set(1, 1, h);
    x.component(0).set(3, 3, -s);
    x.component(0).set(1, 3, h);
    x.component(1).set(0, 1, -h);
    x.component(1).set(0, 3, s);
    x.component(1).set(2, 3, -h);
    x.component(2).set(2, 2, h);
    x.component(2).set(0, 2, -h);
    return x;
}

#define MINSURF_INSTANTIATE(T)                                             \
    template class BiPoly<T>;                                              \
    template class VectorChart<T>;                                         \
    template BiPoly<T> dot(const VectorChart<T>&, const VectorChart<T>&);  \
    template VectorChart<T> real_chart(const MinimalCurve<T>&);            \
    template VectorChart<T> imag_chart(const MinimalCurve<T>&);            \
    template std::string chart_to_json(const VectorChart<T>&);             \
    template VectorChart<T> chart_from_json<T>(const std::string&);        \
    template VectorChart<T> enneper_chart<T>();                            \
    template VectorChart<T> bicubic_counterexample_chart<T>();

MINSURF_INSTANTIATE(double)
MINSURF_INSTANTIATE(Rational)

template VectorChart<double> cast_chart<double, Rational>(const VectorChart<Rational>&);
template VectorChart<Rational> cast_chart<Rational, double>(const VectorChart<double>&);
template VectorChart<double> cast_chart<double, double>(const VectorChart<double>&);
template VectorChart<Rational> cast_chart<Rational, Rational>(const VectorChart<Rational>&);

}  // namespace minsurf
