#include "minsurf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "minsurf/thresholds.hpp"

namespace minsurf {

FundamentalForms forms_from_jet(const SurfaceJet& jet, double regularity) {
    const Vec3d n = cross(jet.xu, jet.xv);
    const double n_len = norm(n);
    if (!(n_len >= regularity)) {
        std::ostringstream os;
        os << "singular point: |x_u x x_v| = " << n_len;
        throw SingularPointError(os.str(), n_len);
    }
    const Vec3d U = n * (1.0 / n_len);

    FundamentalForms ff;
    ff.E = dot(jet.xu, jet.xu);
    ff.F = dot(jet.xu, jet.xv);
    ff.G = dot(jet.xv, jet.xv);
    ff.L = dot(U, jet.xuu);
    ff.M = dot(U, jet.xuv);
    ff.N = dot(U, jet.xvv);
    // EG - F^2 = |x_u x x_v|^2 exactly, and the cross product form avoids cancellation.
    const double det = n_len * n_len;
    ff.K = (ff.L * ff.N - ff.M * ff.M) / det;
    ff.H = (ff.E * ff.N - 2.0 * ff.F * ff.M + ff.G * ff.L) / (2.0 * det);
    ff.nu = ff.K <= 0 ? std::sqrt(-ff.K) : 0.0;
    return ff;
}

ChartJet::ChartJet(const VectorChart<double>& chart)
    : x_(chart), xu_(chart.du()), xv_(chart.dv()), xuu_(xu_.du()), xuv_(xu_.dv()), xvv_(xv_.dv()) {}

SurfaceJet ChartJet::at(double u, double v) const {
    return {xu_.eval(u, v), xv_.eval(u, v), xuu_.eval(u, v), xuv_.eval(u, v), xvv_.eval(u, v)};
}

FundamentalForms fundamental_forms(const ChartJet& jet, double u, double v) {
    return forms_from_jet(jet.at(u, v), thresholds::kRegularity);
}

FundamentalForms fundamental_forms(const VectorChart<double>& chart, double u, double v) {
    return fundamental_forms(ChartJet(chart), u, v);
}

FirstForm first_form_closed(const ComplexPoly<double>& f, const ComplexPoly<double>& g, double u, double v) {
    const Complex<double> z(u, v);
    const double f2 = f.eval(z).norm();
    const double g2 = g.eval(z).norm();
    const double e = 0.25 * f2 * (1.0 + g2) * (1.0 + g2);
    return {e, 0.0, e};
}

double normal_curvature_from_values(std::complex<double> f, std::complex<double> g, std::complex<double> g_prime) {
    const double abs_f = std::abs(f);
    if (abs_f == 0.0) throw SingularPointError("singular point: f = 0", 0.0);
    const double s = 1.0 + std::norm(g);
    return 4.0 * std::abs(g_prime) / (abs_f * s * s);
}

double normal_curvature_closed(const ComplexPoly<double>& f, const ComplexPoly<double>& g, double u, double v) {
    const Complex<double> z(u, v);
    return normal_curvature_from_values(f.eval(z).to_std(), g.eval(z).to_std(), g.derivative().eval(z).to_std());
}

IsothermalCheck is_isothermal(const VectorChart<double>& chart, std::span<const SamplePoint> samples, double tolerance) {
    const VectorChart<double> xu = chart.du();
    const VectorChart<double> xv = chart.dv();
    double worst = 0.0;
    for (const auto& p : samples) {
        const Vec3d a = xu.eval(p.u, p.v);
        const Vec3d b = xv.eval(p.u, p.v);
        worst = std::max({worst, std::abs(dot(a, a) - dot(b, b)), std::abs(dot(a, b))});
    }
    return {worst < tolerance, worst};
}

template <Scalar T>
std::array<BiPoly<T>, 3> first_form_polynomials(const VectorChart<T>& chart) {
    const VectorChart<T> xu = chart.du();
    const VectorChart<T> xv = chart.dv();
    return {dot(xu, xu), dot(xu, xv), dot(xv, xv)};
}

IsothermalCheck is_isothermal_exact(const VectorChart<Rational>& chart) {
    const auto [E, F, G] = first_form_polynomials(chart);
    const BiPoly<Rational> diff = E - G;
    return {diff.is_zero() && F.is_zero(), std::max(diff.max_abs_coeff(), F.max_abs_coeff())};
}

template <Scalar T>
double harmonicity_defect(const VectorChart<T>& chart) {
    return chart.laplacian().max_abs_coeff();
}

template <Scalar T>
GeneratingPair<T> extract_generators(const VectorChart<T>& chart) {
    const auto [E, F, G] = first_form_polynomials(chart);
    const double harmonic = harmonicity_defect(chart);
    const double conformal = std::max((E - G).max_abs_coeff(), F.max_abs_coeff());
    if constexpr (ScalarTraits<T>::exact) {
        if (harmonic != 0.0 || conformal != 0.0) {
            throw NotWeierstrassError("chart is not isothermal and harmonic");
        }
    } else {
        const double scale = std::max(1.0, chart.max_abs_coeff());
        if (harmonic > thresholds::kIsothermal * scale || conformal > thresholds::kIsothermal * scale * scale) {
            throw NotWeierstrassError("chart is not isothermal and harmonic");
        }
    }

    // x harmonic makes x_u - i x_v holomorphic, so its restriction to v = 0
    // gives the coefficients in z directly.
    const VectorChart<T> xu = chart.du();
    const VectorChart<T> xv = chart.dv();
    std::array<ComplexPoly<T>, 3> phi;
    const int deg = std::max(xu.degree_u(), xv.degree_u());
    for (int k = 0; k < 3; ++k) {
        std::vector<Complex<T>> coeffs;
        for (int n = 0; n <= deg; ++n) {
            coeffs.emplace_back(xu.component(k).coeff(n, 0), -xv.component(k).coeff(n, 0));
        }
        phi[static_cast<std::size_t>(k)] = ComplexPoly<T>(std::move(coeffs));
    }

    const Complex<T> i = Complex<T>::i();
    ComplexPoly<T> f = phi[0] - i * phi[1];
    if (f.is_zero()) throw NotWeierstrassError("chart is not polynomial-Weierstrass with polynomial g");
    auto [g, remainder] = divide(phi[2], f);
    const bool divisible = ScalarTraits<T>::exact ? remainder.is_zero()
                                                  : remainder.max_abs_coeff() <= thresholds::kDivisionRemainder;
    if (!divisible) throw NotWeierstrassError("chart is not polynomial-Weierstrass with polynomial g");
    return {std::move(f), std::move(g)};
}

BiquarticClassification classify_biquartic(const VectorChart<Rational>& chart) {
    BiquarticClassification out;
    out.bi_quartic = chart.degree_u() == 4 && chart.degree_v() == 4;
    const auto pair = extract_generators(chart);
    out.degree_f = pair.f.degree();
    out.degree_g = pair.g.degree();
    out.leading_nonzero = !pair.f.leading().is_zero() && !pair.g.leading().is_zero();
    return out;
}

double affine_reparam_F(const VectorChart<double>& chart, const AffineMap& map, std::span<const SamplePoint> samples) {
    if (std::abs(map.jacobian()) < thresholds::kDegenerateJacobian) {
        throw DegenerateInputError("degenerate affine transform: |J| < 1e-12");
    }
    const VectorChart<double> xu = chart.du();
    const VectorChart<double> xv = chart.dv();
    double worst = 0.0;
    for (const auto& p : samples) {
        const double u = map.a1 * p.u + map.b1 * p.v + map.c1;
        const double v = map.a2 * p.u + map.b2 * p.v + map.c2;
        const Vec3d a = xu.eval(u, v);
        const Vec3d b = xv.eval(u, v);
        const Vec3d bar_u = a * map.a1 + b * map.a2;
        const Vec3d bar_v = a * map.b1 + b * map.b2;
        worst = std::max(worst, std::abs(dot(bar_u, bar_v)));
    }
    return worst;
}

#define MINSURF_INSTANTIATE(T)                                                           \
    template std::array<BiPoly<T>, 3> first_form_polynomials(const VectorChart<T>&);     \
    template double harmonicity_defect(const VectorChart<T>&);                           \
    template GeneratingPair<T> extract_generators(const VectorChart<T>&);

MINSURF_INSTANTIATE(double)
MINSURF_INSTANTIATE(Rational)

}  // namespace minsurf
