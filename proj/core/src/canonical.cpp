#include "minsurf/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minsurf/thresholds.hpp"

namespace minsurf {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// (3/2)^(2/3), the scale of the canonical substitution.
const double kSubScale = std::pow(1.5, 2.0 / 3.0);
// 4 (2/3)^(2/3), numerator of the canonical normal curvature.
const double kNuNumerator = 4.0 * std::pow(2.0 / 3.0, 2.0 / 3.0);
// (3/2)^(4/3)
const double kNuRadial = std::pow(1.5, 4.0 / 3.0);

std::string where(cplx w) {
    std::ostringstream os;
    os << "w = (" << w.real() << ", " << w.imag() << ")";
    return os.str();
}

void require_off_origin(double u, double v) {
    if (u == 0.0 && v == 0.0) throw BranchPointError("normal curvature undefined at the branch point w = 0");
}

}  // namespace

// ---- BranchSpec -----------------------------------------------------------

double BranchSpec::unwrap_angle(cplx w) const {
    double theta = std::arg(w);
    if (!has_cut) return theta;
    while (theta > cut_angle) theta -= 2.0 * kPi;
    while (theta <= cut_angle - 2.0 * kPi) theta += 2.0 * kPi;
    return theta;
}

double BranchSpec::distance_to_cut(cplx w) const {
    if (!has_cut) return std::numeric_limits<double>::infinity();
    const cplx d = std::polar(1.0, cut_angle);
    const cplx local = w * std::conj(d);
    return local.real() <= 0.0 ? std::abs(w) : std::abs(local.imag());
}

bool BranchSpec::admits(cplx w, double margin) const {
    if (std::abs(w) < excluded_radius + margin) return false;
    return !has_cut || distance_to_cut(w) > margin;
}

void BranchSpec::require(cplx w) const {
    if (std::abs(w) < excluded_radius || (has_cut && std::abs(w) == 0.0)) {
        throw BranchPointError("point inside the excluded disk around the branch point: " + where(w));
    }
}

// ---- substitution ---------------------------------------------------------

CanonicalSubstitution::CanonicalSubstitution(cplx A, cplx C, double excluded_radius)
    : A_(A), C_(C), sqrt_ac_(std::sqrt(A) * std::sqrt(C)) {
    if (std::abs(A) == 0.0 || std::abs(C) == 0.0) {
        throw DegenerateInputError("canonical substitution needs A != 0 and C != 0");
    }
    // (i w / s)^(2/3) has its cut where i w / s is a negative real: w = i s t, t > 0.
    branch_.cut_angle = std::arg(kI * sqrt_ac_);
    branch_.excluded_radius = excluded_radius;
    branch_.has_cut = true;
}

cplx CanonicalSubstitution::z(cplx w) const {
    branch_.require(w);
    return kSubScale * std::pow(kI * w / sqrt_ac_, 2.0 / 3.0);
}

cplx CanonicalSubstitution::dz(cplx w) const {
    branch_.require(w);
    return kSubScale * (2.0 / 3.0) * (kI / sqrt_ac_) * std::pow(kI * w / sqrt_ac_, -1.0 / 3.0);
}

double CanonicalSubstitution::residual(cplx w) const {
    branch_.require(w);
    const double h = 1e-6 * std::abs(w);
    if (!branch_.admits(w, 2.0 * h)) {
        throw BranchPointError("difference stencil crosses the branch cut at " + where(w));
    }
    const cplx zp = (z(w + h) - z(w - h)) / (2.0 * h);
    const cplx zw = z(w);
    return std::abs(zp * zp + 1.0 / (A_ * zw * C_));
}

CanonicalSubstitution canonical_substitution(cplx A, cplx C, double excluded_radius) {
    return CanonicalSubstitution(A, C, excluded_radius);
}

double canonical_nu(const CanonicalSubstitution& sub, const ComplexPoly<double>& f, const ComplexPoly<double>& g,
                    cplx w) {
    const cplx zw = sub.z(w);
    const cplx zp = sub.dz(w);
    const Complex<double> zc = Complex<double>::from_std(zw);
    const cplx f_t = f.eval(zc).to_std() * zp;
    const cplx g_t = g.eval(zc).to_std();
    const cplx gp_t = g.derivative().eval(zc).to_std() * zp;
    return normal_curvature_from_values(f_t, g_t, gp_t);
}

// ---- closed-form normal curvatures ----------------------------------------

double canonical_nu_0(double u, double v) {
    require_off_origin(u, v);
    const double r2 = u * u + v * v;
    const double d = 1.0 + kNuRadial * std::pow(r2, 2.0 / 3.0);
    return kNuNumerator / (std::pow(r2, 1.0 / 3.0) * d * d);
}

double canonical_nu_family(cplx A, cplx C, double u, double v) {
    if (std::abs(A) == 0.0 || std::abs(C) == 0.0) {
        throw DegenerateInputError("canonical family needs A != 0 and C != 0");
    }
    require_off_origin(u, v);
    const double mu = std::pow(std::norm(C) / std::abs(A), 2.0 / 3.0);
    const double r2 = u * u + v * v;
    const double d = 1.0 + kNuRadial * mu * std::pow(r2, 2.0 / 3.0);
    return kNuNumerator * mu / (std::pow(r2, 1.0 / 3.0) * d * d);
}

namespace {

double offset_B_norm(double a, double b, double u, double v) {
    const cplx B = cplx(a, b) + kSubScale * std::pow(cplx(-v, u), 2.0 / 3.0);
    return std::norm(B);
}

}  // namespace

double canonical_nu_offset(double a, double b, double u, double v) {
    require_off_origin(u, v);
    const double d = 1.0 + offset_B_norm(a, b, u, v);
    return kNuNumerator / (std::sqrt(u * u + v * v) * d * d);
}

double canonical_nu_offset_closed(double a, double b, double u, double v) {
    require_off_origin(u, v);
    const double d = 1.0 + offset_B_norm(a, b, u, v);
    return kNuNumerator / (std::pow(u * u + v * v, 1.0 / 3.0) * d * d);
}

// ---- Ganchev PDE ----------------------------------------------------------

double ganchev_pde_defect(const NuField& nu, double u, double v, double h) {
    if (!(h > 0.0)) throw DegenerateInputError("stencil step must be positive");
    const std::array<std::pair<double, double>, 5> stencil = {
        std::pair{u, v}, std::pair{u + h, v}, std::pair{u - h, v}, std::pair{u, v + h}, std::pair{u, v - h}};
    std::array<double, 5> values{};
    for (std::size_t k = 0; k < stencil.size(); ++k) {
        values[k] = nu(stencil[k].first, stencil[k].second);
        if (!(values[k] > 0.0) || !std::isfinite(values[k])) {
            std::ostringstream os;
            os << "normal curvature must be positive on the stencil, got " << values[k] << " at ("
               << stencil[k].first << ", " << stencil[k].second << ")";
            throw DegenerateInputError(os.str());
        }
    }
    const double lap = (std::log(values[1]) + std::log(values[2]) + std::log(values[3]) + std::log(values[4]) -
                        4.0 * std::log(values[0])) /
                       (h * h);
    return std::abs(lap + 2.0 * values[0]);
}

PdeConvergence ganchev_pde_convergence(const NuField& nu, double u, double v, double h) {
    PdeConvergence out;
    out.defect_h = ganchev_pde_defect(nu, u, v, h);
    out.defect_half = ganchev_pde_defect(nu, u, v, 0.5 * h);
    out.observed_order = std::log2(out.defect_h / out.defect_half);
    return out;
}

// ---- Ganchev chart --------------------------------------------------------

ComplexFunction canonical_generator(const CanonicalSubstitution& sub, cplx D) {
    return {[sub, D](cplx w) { return sub.C() * sub.z(w) + D; }, [sub](cplx w) { return sub.C() * sub.dz(w); }};
}

CanonicalChart::CanonicalChart(ComplexFunction g, BranchSpec branch, double tolerance)
    : g_(std::move(g)), branch_(branch), tol_(tolerance) {
    if (branch_.has_cut && branch_.distance_to_cut(1.0) <= branch_.excluded_radius) {
        throw DegenerateInputError("base point w0 = 1 lies on the branch cut");
    }
}

CVec3 CanonicalChart::integrand(cplx w) const {
    const cplx g = g_.value(w);
    const cplx gp = g_.derivative(w);
    if (!(std::abs(gp) > 1e-14) || !std::isfinite(std::abs(gp))) {
        throw DegenerateInputError("g~' vanishes on the integration path at " + where(w));
    }
    const cplx g2 = g * g;
    return {-0.5 * (1.0 - g2) / gp, -0.5 * kI * (1.0 + g2) / gp, -g / gp};
}

CVec3 CanonicalChart::segment(cplx from, cplx to, double tol) const {
    const cplx dw = to - from;
    auto f = [&](double t) {
        CVec3 val = integrand(from + t * dw);
        for (auto& c : val) c *= dw;
        return val;
    };
    return integrate_gk15(f, 0.0, 1.0, tol).value;
}

CVec3 CanonicalChart::arc(double from_angle, double to_angle, double tol) const {
    auto f = [&](double t) {
        const cplx w = std::polar(1.0, t);
        CVec3 val = integrand(w);
        for (auto& c : val) c *= kI * w;
        return val;
    };
    return integrate_gk15(f, from_angle, to_angle, tol).value;
}

CVec3 CanonicalChart::curve(cplx w) const {
    branch_.require(w);
    if (!branch_.has_cut) return segment(1.0, w, tol_);
    const double theta = branch_.unwrap_angle(w);
    const double theta0 = branch_.unwrap_angle(1.0);
    CVec3 along_arc = arc(theta0, theta, 0.5 * tol_);
    const CVec3 radial = segment(std::polar(1.0, theta), w, 0.5 * tol_);
    for (int c = 0; c < 3; ++c) along_arc[c] += radial[c];
    return along_arc;
}

Vec3d CanonicalChart::eval(double u, double v) const {
    const CVec3 phi = curve(cplx(u, v));
    return {phi[0].real(), phi[1].real(), phi[2].real()};
}

Vec3d CanonicalChart::increment(cplx w1, cplx w2) const {
    branch_.require(w1);
    branch_.require(w2);
    const CVec3 d = segment(w1, w2, 1e-16 * std::max(1.0, std::abs(w2 - w1)));
    return {d[0].real(), d[1].real(), d[2].real()};
}

double CanonicalChart::nu(double u, double v) const {
    const cplx w(u, v);
    branch_.require(w);
    const cplx gp = g_.derivative(w);
    return normal_curvature_from_values(-1.0 / gp, g_.value(w), gp);
}

FundamentalForms CanonicalChart::forms(double u, double v, double h_first, double h_second) const {
    const cplx w(u, v);
    const double margin = std::max(h_first, h_second) * 2.0;
    if (!branch_.admits(w, margin)) {
        throw BranchPointError("difference stencil reaches the branch cut or excluded disk at " + where(w));
    }
    const cplx hu1(h_first, 0.0), hv1(0.0, h_first);
    const cplx hu2(h_second, 0.0), hv2(0.0, h_second);
    const double h2 = h_second * h_second;

    SurfaceJet jet;
    jet.xu = increment(w - hu1, w + hu1) * (0.5 / h_first);
    jet.xv = increment(w - hv1, w + hv1) * (0.5 / h_first);
    jet.xuu = (increment(w, w + hu2) - increment(w - hu2, w)) * (1.0 / h2);
    jet.xvv = (increment(w, w + hv2) - increment(w - hv2, w)) * (1.0 / h2);
    jet.xuv = (increment(w + hu2 - hv2, w + hu2 + hv2) - increment(w - hu2 - hv2, w - hu2 + hv2)) * (0.25 / h2);
    return forms_from_jet(jet, thresholds::kRegularity);
}

CanonicalChart ganchev_chart(ComplexFunction g, BranchSpec branch, double tolerance) {
    return CanonicalChart(std::move(g), branch, tolerance);
}

CanonicalFormDefects canonical_form_defects(const CanonicalChart& chart, std::span<const SamplePoint> samples,
                                            double h_first, double h_second) {
    CanonicalFormDefects out;
    for (const auto& p : samples) {
        const FundamentalForms ff = chart.forms(p.u, p.v, h_first, h_second);
        const double nu = chart.nu(p.u, p.v);
        out.first = std::max({out.first, std::abs(ff.E * nu - 1.0), std::abs(ff.F), std::abs(ff.G * nu - 1.0)});
        out.second = std::max({out.second, std::abs(ff.L - 1.0), std::abs(ff.M), std::abs(ff.N + 1.0)});
    }
    return out;
}

DistinctnessReport compare_canonical_fields(const NuField& nu1, const NuField& nu2,
                                            std::span<const SamplePoint> samples, const BranchSpec& branch,
                                            double shift_extent, double shift_step) {
    DistinctnessReport best;
    best.min_max_difference = std::numeric_limits<double>::infinity();
    const int steps = static_cast<int>(std::lround(shift_extent / shift_step));
    for (int sign : {1, -1}) {
        for (int ia = -steps; ia <= steps; ++ia) {
            for (int ib = -steps; ib <= steps; ++ib) {
                const double a = ia * shift_step;
                const double b = ib * shift_step;
                double worst = 0.0;
                std::size_t used = 0;
                for (const auto& p : samples) {
                    const double u2 = sign * p.u + a;
                    const double v2 = sign * p.v + b;
                    if (!branch.admits(cplx(p.u, p.v)) || !branch.admits(cplx(u2, v2))) continue;
                    worst = std::max(worst, std::abs(nu1(p.u, p.v) - nu2(u2, v2)));
                    ++used;
                }
                if (2 * used < samples.size()) continue;
                if (worst < best.min_max_difference) {
                    best.min_max_difference = worst;
                    best.best_sign = sign;
                    best.best_shift_u = a;
                    best.best_shift_v = b;
                }
            }
        }
    }
    best.distinct = best.min_max_difference > thresholds::kDistinctNu;
    return best;
}

std::vector<SamplePoint> annulus_grid(double r0, double r1, int radial, int angular, const BranchSpec& branch,
                                      double margin) {
    std::vector<SamplePoint> out;
    const double start = branch.has_cut ? branch.cut_angle - 2.0 * kPi : -kPi;
    for (int i = 0; i < radial; ++i) {
        const double r = radial == 1 ? r0 : r0 + (r1 - r0) * i / (radial - 1);
        for (int k = 0; k < angular; ++k) {
            const double theta = start + (k + 0.5) * 2.0 * kPi / angular;
            const cplx w = std::polar(r, theta);
            if (branch.admits(w, margin)) out.push_back({w.real(), w.imag()});
        }
    }
    return out;
}

}  // namespace minsurf
