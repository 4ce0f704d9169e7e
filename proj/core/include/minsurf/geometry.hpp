#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "minsurf/chart.hpp"

namespace minsurf {

/// First and second fundamental form coefficients with the derived curvatures.
struct FundamentalForms {
    double E = 0, F = 0, G = 0;
    double L = 0, M = 0, N = 0;
    double K = 0, H = 0;
    /// sqrt(-K) when K <= 0, otherwise 0 (not a minimal-surface point).
    double nu = 0;
};

/// Second-order jet of a chart at a point.
struct SurfaceJet {
    Vec3d xu, xv, xuu, xuv, xvv;
};

/// Forms from a jet. Throws SingularPointError when |x_u x x_v| < regularity.
FundamentalForms forms_from_jet(const SurfaceJet& jet, double regularity = 1e-12);

/// Caches the derivative charts needed for repeated point evaluation.
class ChartJet {
public:
    explicit ChartJet(const VectorChart<double>& chart);

    SurfaceJet at(double u, double v) const;
    const VectorChart<double>& chart() const { return x_; }

private:
    VectorChart<double> x_, xu_, xv_, xuu_, xuv_, xvv_;
};

FundamentalForms fundamental_forms(const ChartJet& jet, double u, double v);
FundamentalForms fundamental_forms(const VectorChart<double>& chart, double u, double v);

struct FirstForm {
    double E = 0, F = 0, G = 0;
};

/// E = G = |f|^2 (1 + |g|^2)^2 / 4, F = 0 at z = u + iv.
FirstForm first_form_closed(const ComplexPoly<double>& f, const ComplexPoly<double>& g, double u, double v);

/// nu = 4|g'| / (|f| (1 + |g|^2)^2) from point values. Throws SingularPointError for f = 0.
double normal_curvature_from_values(std::complex<double> f, std::complex<double> g, std::complex<double> g_prime);

double normal_curvature_closed(const ComplexPoly<double>& f, const ComplexPoly<double>& g, double u, double v);

struct SamplePoint {
    double u = 0, v = 0;
};

struct IsothermalCheck {
    bool isothermal = false;
    double max_defect = 0;  // max of |E - G| and |F|
};

/// Sample-based check: max |E - G|, |F| against 1e-9.
IsothermalCheck is_isothermal(const VectorChart<double>& chart, std::span<const SamplePoint> samples,
                              double tolerance = 1e-9);

/// Exact check: E - G and F expanded as polynomials must vanish identically.
IsothermalCheck is_isothermal_exact(const VectorChart<Rational>& chart);

/// (E, F, G) as polynomials in (u, v).
template <Scalar T>
std::array<BiPoly<T>, 3> first_form_polynomials(const VectorChart<T>& chart);

/// Largest coefficient magnitude of x_uu + x_vv over the three components.
template <Scalar T>
double harmonicity_defect(const VectorChart<T>& chart);

template <Scalar T>
struct GeneratingPair {
    ComplexPoly<T> f;
    ComplexPoly<T> g;
};

/// Recovers (f, g) from an isothermal harmonic chart via Psi' = x_u - i x_v,
/// f = phi1 - i phi2 and g = phi3 / f. Throws NotWeierstrassError when the
/// chart is not isothermal/harmonic or f does not divide phi3.
template <Scalar T>
GeneratingPair<T> extract_generators(const VectorChart<T>& chart);

/// Degree bookkeeping for bi-quartic isothermal charts: such charts come from
/// f = Az + B, g = Cz + D with A, C nonzero.
struct BiquarticClassification {
    bool bi_quartic = false;
    int degree_f = -1;
    int degree_g = -1;
    bool leading_nonzero = false;
    bool linear_pair() const { return degree_f == 1 && degree_g == 1 && leading_nonzero; }
};

BiquarticClassification classify_biquartic(const VectorChart<Rational>& chart);

struct AffineMap {
    double a1 = 1, b1 = 0, c1 = 0;
    double a2 = 0, b2 = 1, c2 = 0;
    double jacobian() const { return a1 * b2 - a2 * b1; }
};

/// Max |F| of xbar(ubar, vbar) = x(a1 ubar + b1 vbar + c1, a2 ubar + b2 vbar + c2)
/// over the samples (given in the barred parameters). Throws
/// DegenerateInputError when |J| < 1e-12.
double affine_reparam_F(const VectorChart<double>& chart, const AffineMap& map, std::span<const SamplePoint> samples);

}  // namespace minsurf
