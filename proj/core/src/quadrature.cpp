#include "minsurf/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace minsurf {

namespace {

// Kronrod 15-point nodes on [-1, 1] (non-negative half) with weights; the
// odd-indexed nodes are the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    CVec3 kronrod{};
    double error = 0;
};

Panel gk15(const std::function<CVec3(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    CVec3 k{}, g{};
    const CVec3 fc = f(center);
    for (int c = 0; c < 3; ++c) {
        k[c] = kKronrodWeights[7] * fc[c];
        g[c] = kGaussWeights[3] * fc[c];
    }
    for (int n = 0; n < 7; ++n) {
        const CVec3 lo = f(center - half * kNodes[n]);
        const CVec3 hi = f(center + half * kNodes[n]);
        for (int c = 0; c < 3; ++c) {
            k[c] += kKronrodWeights[n] * (lo[c] + hi[c]);
            if (n % 2 == 1) g[c] += kGaussWeights[n / 2] * (lo[c] + hi[c]);
        }
    }
    Panel p;
    for (int c = 0; c < 3; ++c) {
        p.kronrod[c] = k[c] * half;
        p.error = std::max(p.error, std::abs((k[c] - g[c]) * half));
    }
    return p;
}

void adapt(const std::function<CVec3(double)>& f, double a, double b, double tol, int depth, QuadratureResult& out) {
    const Panel p = gk15(f, a, b);
    out.evaluations += 15;
    if (p.error <= tol || depth <= 0) {
        for (int c = 0; c < 3; ++c) out.value[c] += p.kronrod[c];
        out.error_estimate += p.error;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth - 1, out);
    adapt(f, mid, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<CVec3(double)>& integrand, double a, double b, double abs_tol,
                                int max_depth) {
    QuadratureResult out;
    if (a == b) return out;
    adapt(integrand, a, b, abs_tol, max_depth, out);
    return out;
}

}  // namespace minsurf
