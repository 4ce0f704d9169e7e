#include <doctest.h>

#include <cstdlib>
#include <set>

#include "minsurf/sampling.hpp"

using namespace minsurf;

TEST_SUITE("sampling") {

TEST_CASE("same seed, same stream") {
    Rng a(7), b(7), c(8);
    bool differs = false;
    for (int k = 0; k < 100; ++k) {
        const auto x = a.next();
        CHECK(x == b.next());
        differs = differs || x != c.next();
    }
    CHECK(differs);
    // First output of the standard 64-bit Mersenne Twister with the default seed.
    std::mt19937_64 ref;
    CHECK(Rng(5489).next() == ref());
    CHECK(Rng(5489).next() == 14514284786278117030ull);
}

TEST_CASE("range mappings") {
    Rng rng(1);
    std::set<long> seen;
    for (int k = 0; k < 2000; ++k) {
        const long n = rng.uniform_int(-3, 3);
        CHECK(n >= -3);
        CHECK(n <= 3);
        seen.insert(n);
        const double x = rng.unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(seen.size() == 7);
    CHECK(rng.uniform_int(4, 4) == 4);
}

TEST_CASE("seed resolution") {
    ::unsetenv("MINSURF_SEED");
    CHECK(resolve_seed() == 42);
    CHECK(resolve_seed(9) == 9);
    ::setenv("MINSURF_SEED", "123", 1);
    CHECK(resolve_seed() == 123);
    CHECK(resolve_seed(9) == 9);
    ::setenv("MINSURF_SEED", "12x", 1);
    CHECK_THROWS_AS(resolve_seed(), DegenerateInputError);
    ::unsetenv("MINSURF_SEED");
}

TEST_CASE("sample sets") {
    const auto grid = grid_samples(101);
    CHECK(grid.size() == 10201);
    CHECK(grid.front().u == -1.0);
    CHECK(grid.back().v == 1.0);
    CHECK(default_samples().size() == 20201);
    const auto r1 = random_samples(50, 3, 0.0, 2.0);
    const auto r2 = random_samples(50, 3, 0.0, 2.0);
    for (std::size_t k = 0; k < r1.size(); ++k) {
        CHECK(r1[k].u == r2[k].u);
        CHECK(r1[k].u >= 0.0);
        CHECK(r1[k].v < 2.0);
    }
}

TEST_CASE("random inputs") {
    Rng rng(2);
    for (int n = 0; n < 50; ++n) {
        const Rational q = random_rational(rng, 9, 7);
        CHECK(abs(q) <= 9);
        CHECK(boost::multiprecision::denominator(q) <= 7);

        const auto p = random_gaussian_poly(rng, 2);
        CHECK(p.degree() == 2);

        const auto a = random_affine(rng);
        CHECK(std::abs(a.jacobian()) >= 0.1);
        CHECK(std::abs(a.a1) <= 2.0);
    }
    for (auto plane : {SymmetryPlane::Oxy, SymmetryPlane::Oxz, SymmetryPlane::Oyz}) {
        const auto g = random_symmetric_given(rng, plane);
        const auto k = static_cast<std::size_t>(reflected_coordinate(plane));
        CHECK(g[4][k] == 0);                      // b20 lies in the plane
        CHECK(g[0] == reflect(g[7], plane));      // b00 against b40
        CHECK(g[3] == reflect(g[6], plane));      // b14 against b34
    }
}

}  // TEST_SUITE
