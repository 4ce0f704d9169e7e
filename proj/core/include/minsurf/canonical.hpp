#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "minsurf/geometry.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

using cplx = std::complex<double>;

/// Branch bookkeeping for fractional powers with the principal branch.
///
/// The cut is the ray {t e^{i cut_angle}, t > 0}; the disk |w| < excluded_radius
/// around the branch point is never evaluated. Angles are unwrapped into
/// (cut_angle - 2 pi, cut_angle], which matches the principal branch value on
/// the cut itself.
struct BranchSpec {
    double cut_angle = 1.5707963267948966;  // pi / 2: cut of (i w)^p
    double excluded_radius = 0.05;
    bool has_cut = true;

    static BranchSpec none() { return {0.0, 0.0, false}; }

    double unwrap_angle(cplx w) const;
    double distance_to_cut(cplx w) const;
    /// True when the disk of radius `margin` around w avoids both the cut and the excluded disk.
    bool admits(cplx w, double margin = 0.0) const;
    /// Throws BranchPointError when w lies in the excluded disk.
    void require(cplx w) const;
};

/// Parameter change z(w) = (3/2)^(2/3) (i w / (sqrt(A) sqrt(C)))^(2/3) taking the
/// isothermal parameters of the (f, g) = (A z, C z) surface to canonical
/// principal parameters.
class CanonicalSubstitution {
public:
    CanonicalSubstitution(cplx A, cplx C, double excluded_radius = 0.05);

    cplx A() const { return A_; }
    cplx C() const { return C_; }
    const BranchSpec& branch() const { return branch_; }

    cplx z(cplx w) const;
    /// Analytic z'(w).
    cplx dz(cplx w) const;
    /// |(z')^2 + 1/(f(z) g'(z))| with f = A z, g' = C and z' from a central
    /// difference of step 1e-6 |w| along the real direction.
    double residual(cplx w) const;

private:
    cplx A_, C_, sqrt_ac_;
    BranchSpec branch_;
};

/// Throws DegenerateInputError when A or C vanishes.
CanonicalSubstitution canonical_substitution(cplx A, cplx C, double excluded_radius = 0.05);

/// Normal curvature of the (f, g) surface in the canonical parameters supplied
/// by `sub`: f~ = f(z(w)) z'(w), g~ = g(z(w)), then 4|g~'| / (|f~| (1 + |g~|^2)^2).
double canonical_nu(const CanonicalSubstitution& sub, const ComplexPoly<double>& f, const ComplexPoly<double>& g,
                    cplx w);

/// 4 (2/3)^(2/3) / ((u^2+v^2)^(1/3) (1 + (3/2)^(4/3) (u^2+v^2)^(2/3))^2).
double canonical_nu_0(double u, double v);

/// Same with the factor mu = |C|^2/|A|: 4 (2/3)^(2/3) mu^(2/3) / (r^(2/3) (1 + (3/2)^(4/3) mu^(2/3) r^(4/3))^2).
double canonical_nu_family(cplx A, cplx C, double u, double v);

/// Offset family g = z + a + ib, with the radial factor sqrt(u^2 + v^2) as
/// displayed alongside B(u, v) = a + ib + (3/2)^(2/3) (iu - v)^(2/3).
/// It disagrees with canonical_nu_0 off the unit circle at (a, b) = (0, 0);
/// canonical_nu_offset_closed is the form that solves the Ganchev equation.
double canonical_nu_offset(double a, double b, double u, double v);

/// Offset family evaluated through the normal-curvature closed form:
/// 4 (2/3)^(2/3) / ((u^2+v^2)^(1/3) (1 + |B(u, v)|^2)^2).
double canonical_nu_offset_closed(double a, double b, double u, double v);

using NuField = std::function<double(double, double)>;

/// |lap_h ln nu + 2 nu| with the 5-point stencil of step h. Throws
/// DegenerateInputError when nu <= 0 anywhere on the stencil or h <= 0.
double ganchev_pde_defect(const NuField& nu, double u, double v, double h);

struct PdeConvergence {
    double defect_h = 0;
    double defect_half = 0;
    /// log2(defect_h / defect_half); about 2 for a solution of the PDE.
    double observed_order = 0;
};

PdeConvergence ganchev_pde_convergence(const NuField& nu, double u, double v, double h);

/// Holomorphic function together with its derivative.
struct ComplexFunction {
    std::function<cplx(cplx)> value;
    std::function<cplx(cplx)> derivative;
};

/// g~(w) = C z(w) + D for a canonical substitution z(w).
ComplexFunction canonical_generator(const CanonicalSubstitution& sub, cplx D = 0.0);

/// Minimal surface in canonical principal parameters: the real part of
/// Phi(w) = -int (1/2 (1 - g~^2)/g~', i/2 (1 + g~^2)/g~', g~/g~') dw.
///
/// Phi is based at w0 = 1 (Phi(1) = 0). With a branch cut the path runs along
/// the unit circle to arg w (unwrapped into the cut plane) and then radially
/// to w; without a cut it is the straight segment from w0.
class CanonicalChart {
public:
    CanonicalChart(ComplexFunction g, BranchSpec branch, double tolerance = 1e-10);

    const BranchSpec& branch() const { return branch_; }

    /// Phi'(w). Throws DegenerateInputError with the location when g~'(w) = 0.
    CVec3 integrand(cplx w) const;
    CVec3 curve(cplx w) const;
    Vec3d eval(double u, double v) const;
    /// x(w2) - x(w1) along the straight segment; both ends must see the same branch.
    Vec3d increment(cplx w1, cplx w2) const;

    double nu(double u, double v) const;

    /// Forms from central differences of chart increments with steps
    /// h_first (x_u, x_v) and h_second (x_uu, x_uv, x_vv).
    FundamentalForms forms(double u, double v, double h_first = 1e-5, double h_second = 1e-3) const;

private:
    CVec3 segment(cplx from, cplx to, double tol) const;
    CVec3 arc(double from_angle, double to_angle, double tol) const;

    ComplexFunction g_;
    BranchSpec branch_;
    double tol_;
};

/// Throws DegenerateInputError when g~' vanishes on the path to (u, v).
CanonicalChart ganchev_chart(ComplexFunction g, BranchSpec branch, double tolerance = 1e-10);

struct CanonicalFormDefects {
    double first = 0;   // max |E nu - 1|, |F|, |G nu - 1|
    double second = 0;  // max |L - 1|, |M|, |N + 1|
};

CanonicalFormDefects canonical_form_defects(const CanonicalChart& chart, std::span<const SamplePoint> samples,
                                            double h_first = 1e-5, double h_second = 1e-3);

struct DistinctnessReport {
    /// Minimum over the tested parameter changes of max |nu1 - nu2 o change|.
    double min_max_difference = 0;
    int best_sign = 1;
    double best_shift_u = 0;
    double best_shift_v = 0;
    bool distinct = false;
};

/// Compares nu1(u, v) with nu2(eps u + a, eps v + b) for eps = +-1 and (a, b)
/// on a coarse grid; points where either field is undefined are skipped.
DistinctnessReport compare_canonical_fields(const NuField& nu1, const NuField& nu2,
                                            std::span<const SamplePoint> samples, const BranchSpec& branch,
                                            double shift_extent = 1.0, double shift_step = 0.25);

/// Points on a polar grid in r0 <= |w| <= r1 whose stencil of size `margin`
/// stays clear of the branch cut.
std::vector<SamplePoint> annulus_grid(double r0, double r1, int radial, int angular, const BranchSpec& branch,
                                      double margin);

}  // namespace minsurf
