#include "minsurf/sampling.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "minsurf/errors.hpp"

namespace minsurf {

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
    if (explicit_seed) return *explicit_seed;
    const char* env = std::getenv("MINSURF_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::uint64_t seed = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc() || ptr != end) {
        throw DegenerateInputError(std::string("MINSURF_SEED must be an unsigned integer, got '") + env + "'");
    }
    return seed;
}

long Rng::uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the mapping exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<long>(x % span);
}

std::vector<SamplePoint> grid_samples(int n, double lo, double hi) {
    std::vector<SamplePoint> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back({n == 1 ? lo : lo + (hi - lo) * i / (n - 1), n == 1 ? lo : lo + (hi - lo) * j / (n - 1)});
    return out;
}

std::vector<SamplePoint> random_samples(std::size_t count, std::uint64_t seed, double lo, double hi) {
    Rng rng(seed);
    std::vector<SamplePoint> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = rng.uniform(lo, hi);
        const double v = rng.uniform(lo, hi);
        out.push_back({u, v});
    }
    return out;
}

std::vector<SamplePoint> default_samples(std::uint64_t seed) {
    std::vector<SamplePoint> out = grid_samples(101);
    const auto extra = random_samples(10000, seed);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

Rational random_rational(Rng& rng, long range, long max_den) {
    const long den = rng.uniform_int(1, max_den);
    const long num = rng.uniform_int(-range * den, range * den);
    return Rational(num, den);
}

ComplexPoly<Rational> random_gaussian_poly(Rng& rng, int degree, long range) {
    std::vector<Complex<Rational>> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = {Rational(rng.uniform_int(-range, range)), Rational(rng.uniform_int(-range, range))};
    while (c.back().is_zero()) c.back() = {Rational(rng.uniform_int(-range, range)), Rational(rng.uniform_int(-range, range))};
    return ComplexPoly<Rational>(std::move(c));
}

namespace {

Vec3<Rational> random_point(Rng& rng) {
    Vec3<Rational> p;
    for (int k = 0; k < 3; ++k) p[static_cast<std::size_t>(k)] = random_rational(rng);
    return p;
}

}  // namespace

GivenPoints<Rational> random_given(Rng& rng) {
    GivenPoints<Rational> out;
    for (auto& p : out) p = random_point(rng);
    return out;
}

GivenPoints<Rational> random_symmetric_given(Rng& rng, SymmetryPlane plane) {
    BezierGrid<Rational> g;
    for (int i = 0; i < 2; ++i) {
        g.at(i, 0) = random_point(rng);
        g.at(4 - i, 0) = reflect(g.at(i, 0), plane);
        g.at(i, 4) = random_point(rng);
        g.at(4 - i, 4) = reflect(g.at(i, 4), plane);
    }
    Vec3<Rational> mid = random_point(rng);
    mid[static_cast<std::size_t>(reflected_coordinate(plane))] = 0;
    g.at(2, 0) = mid;
    return g.given();
}

AffineMap random_affine(Rng& rng) {
    for (;;) {
        AffineMap m{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                    rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        if (std::abs(m.jacobian()) >= 0.1) return m;
    }
}

}  // namespace minsurf
