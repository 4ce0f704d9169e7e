#pragma once

#include <array>
#include <complex>
#include <functional>

namespace minsurf {

using CVec3 = std::array<std::complex<double>, 3>;

struct QuadratureResult {
    CVec3 value{};
    double error_estimate = 0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of a C^3-valued integrand over
/// [a, b]. Intervals are bisected until the local |K15 - G7| estimate is below
/// the proportional share of abs_tol, or max_depth is reached.
QuadratureResult integrate_gk15(const std::function<CVec3(double)>& integrand, double a, double b, double abs_tol,
                                int max_depth = 40);

}  // namespace minsurf
