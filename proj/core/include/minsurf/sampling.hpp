#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "minsurf/bezier.hpp"
#include "minsurf/complex_poly.hpp"
#include "minsurf/geometry.hpp"

namespace minsurf {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Seed precedence: explicit value, then the MINSURF_SEED environment variable,
/// then 42. Throws DegenerateInputError when MINSURF_SEED is not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed = std::nullopt);

/// Portable random source. The engine output is fixed by the standard; the
/// range mappings below are ours, so sequences do not depend on the library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// n x n uniform grid on [lo, hi]^2.
std::vector<SamplePoint> grid_samples(int n, double lo = -1, double hi = 1);
std::vector<SamplePoint> random_samples(std::size_t count, std::uint64_t seed, double lo = -1, double hi = 1);
/// 101 x 101 grid on [-1,1]^2 followed by 10^4 uniform random points.
std::vector<SamplePoint> default_samples(std::uint64_t seed = kDefaultSeed);

/// Rational in [-range, range] with denominator in 1..max_den.
Rational random_rational(Rng& rng, long range = 9, long max_den = 7);

/// Degree-`degree` polynomial with Gaussian-integer coefficients in
/// [-range, range] + i [-range, range]; the leading coefficient is nonzero.
ComplexPoly<Rational> random_gaussian_poly(Rng& rng, int degree, long range = 3);

GivenPoints<Rational> random_given(Rng& rng);
/// Nine given points that are mirror symmetric through `plane` (row i against row 4 - i).
GivenPoints<Rational> random_symmetric_given(Rng& rng, SymmetryPlane plane);

/// Affine parameter map with entries in [-2, 2] and |J| >= 0.1.
AffineMap random_affine(Rng& rng);

}  // namespace minsurf
