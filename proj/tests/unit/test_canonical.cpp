#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "minsurf/canonical.hpp"
#include "minsurf/chart.hpp"
#include "minsurf/sampling.hpp"

using namespace minsurf;
using testing::dpoly;
using testing::rel;

namespace {

const cplx kI(0, 1);

// 4 (2/3)^(2/3) / (1 + (3/2)^(4/3))^2, the value on the unit circle.
double nu_on_unit_circle() {
    const double d = 1.0 + std::pow(1.5, 4.0 / 3.0);
    return 4.0 * std::pow(2.0 / 3.0, 2.0 / 3.0) / (d * d);
}

// nu from the normal-curvature formula with f~ = -1/g~', g~ = (3/2)^(2/3) (i w)^(2/3).
double nu0_via_generators(double u, double v) {
    const cplx w(u, v);
    const cplx g = std::pow(1.5, 2.0 / 3.0) * std::pow(kI * w, 2.0 / 3.0);
    const cplx gp = kI * std::pow(2.0 / 3.0, 1.0 / 3.0) * std::pow(kI * w, -1.0 / 3.0);
    const cplx f = kI * std::pow(1.5, 1.0 / 3.0) * std::pow(kI * w, 1.0 / 3.0);
    return normal_curvature_from_values(f, g, gp);
}

std::vector<SamplePoint> annulus_points(std::size_t n, std::uint64_t seed, double r0, double r1,
                                        const BranchSpec& branch, double margin) {
    Rng rng(seed);
    std::vector<SamplePoint> out;
    while (out.size() < n) {
        const cplx w = std::polar(rng.uniform(r0, r1), rng.uniform(-std::numbers::pi, std::numbers::pi));
        if (branch.admits(w, margin)) out.push_back({w.real(), w.imag()});
    }
    return out;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("branch bookkeeping") {
    const BranchSpec b;
    CHECK(b.cut_angle == doctest::Approx(std::numbers::pi / 2));
    CHECK(b.distance_to_cut(cplx(0.3, 1.0)) == doctest::Approx(0.3));
    CHECK(b.distance_to_cut(cplx(0.0, -1.0)) == doctest::Approx(1.0));
    CHECK_FALSE(b.admits(cplx(0.01, 0.0)));
    CHECK_FALSE(b.admits(cplx(1e-4, 1.0), 1e-3));
    CHECK(b.admits(cplx(1.0, 0.0), 1e-3));
    CHECK_THROWS_AS(b.require(cplx(0.01, 0.01)), BranchPointError);
    CHECK(b.unwrap_angle(cplx(0.0, -1.0)) == doctest::Approx(-std::numbers::pi / 2));
    CHECK(b.unwrap_angle(cplx(-1.0, 0.0)) == doctest::Approx(-std::numbers::pi));
    CHECK(canonical_substitution(-1.0, 1.0).branch().cut_angle == doctest::Approx(std::numbers::pi));
}

TEST_CASE("substitution for A = C = 1") {
    const auto sub = canonical_substitution(1.0, 1.0);
    const cplx w(1, 1);
    const cplx expected = std::pow(1.5, 2.0 / 3.0) * std::pow(kI * w, 2.0 / 3.0);
    CHECK(std::abs(sub.z(w) - expected) < 1e-14);
    CHECK(sub.residual(w) < 1e-8);
    // Analytic derivative against a central difference.
    const double h = 1e-6;
    CHECK(std::abs(sub.dz(w) - (sub.z(w + h) - sub.z(w - h)) / (2 * h)) < 1e-8);
}

TEST_CASE("substitution refuses the excluded disk and degenerate families") {
    const auto sub = canonical_substitution(2.0, cplx(0, 1));
    CHECK_THROWS_AS(sub.z(cplx(0.01, 0.02)), BranchPointError);
    CHECK_THROWS_AS(sub.residual(cplx(0.0, 0.0)), BranchPointError);
    CHECK_THROWS_AS(canonical_substitution(0.0, 1.0), DegenerateInputError);
    CHECK_THROWS_AS(canonical_substitution(1.0, 0.0), DegenerateInputError);
}

TEST_CASE("substitution residual for A = 4, C = 1 on the annulus") {
    const auto sub = canonical_substitution(4.0, 1.0);
    for (const auto& p : annulus_points(100, 8, 0.1, 2.0, sub.branch(), 1e-5)) {
        CHECK(sub.residual(cplx(p.u, p.v)) < 1e-8);
    }
}

TEST_CASE("substitution with complex A and C") {
    const cplx A(1, 2), C(-0.5, 0.3);
    const auto sub = canonical_substitution(A, C);
    for (const auto& p : annulus_points(50, 9, 0.1, 2.0, sub.branch(), 1e-5)) {
        CHECK(sub.residual(cplx(p.u, p.v)) < 1e-8);
    }
}

TEST_CASE("nu0") {
    CHECK(canonical_nu_0(1, 0) == doctest::Approx(nu_on_unit_circle()).epsilon(1e-14));
    CHECK_THROWS_AS(canonical_nu_0(0, 0), BranchPointError);
    const BranchSpec branch;
    for (const auto& p : annulus_points(200, 2, 0.05, 2.0, branch, 0.0)) {
        CHECK(rel(canonical_nu_0(p.u, p.v), nu0_via_generators(p.u, p.v)) <= 1e-8);
        CHECK(canonical_nu_0(p.u, p.v) == canonical_nu_0(-p.u, -p.v));
    }
}

TEST_CASE("nu of the substituted (z, z) surface is nu0") {
    const auto sub = canonical_substitution(1.0, 1.0);
    const auto z = dpoly({{0, 0}, {1, 0}});
    for (const auto& p : annulus_points(100, 3, 0.1, 2.0, sub.branch(), 0.0)) {
        CHECK(rel(canonical_nu(sub, z, z, cplx(p.u, p.v)), canonical_nu_0(p.u, p.v)) <= 1e-10);
    }
}

TEST_CASE("family curvature and homothety") {
    const BranchSpec branch;
    const auto pts = annulus_points(100, 4, 0.1, 2.0, branch, 0.0);
    for (const auto& p : pts) CHECK(canonical_nu_family(1.0, 1.0, p.u, p.v) == doctest::Approx(canonical_nu_0(p.u, p.v)));

    const auto sub = canonical_substitution(10.0, 1.0);
    const auto f1 = dpoly({{0, 0}, {10, 0}}), g1 = dpoly({{0, 0}, {1, 0}});
    for (const auto& p : pts) {
        CHECK(rel(canonical_nu_family(10.0, 1.0, p.u, p.v), canonical_nu(sub, f1, g1, cplx(p.u, p.v))) <= 1e-10);
    }

    // Scaling law with mu = |C|^2 / |A|: nu(A, C)(u, v) = mu nu0(sqrt(mu) u, sqrt(mu) v).
    for (const auto& [A, C] : std::vector<std::pair<cplx, cplx>>{{10.0, 1.0}, {1.0, 10.0}, {cplx(3, 4), cplx(0, 2)}}) {
        const double mu = std::norm(C) / std::abs(A);
        const double s = std::sqrt(mu);
        for (const auto& p : pts) {
            CHECK(rel(canonical_nu_family(A, C, p.u, p.v), mu * canonical_nu_0(s * p.u, s * p.v)) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(canonical_nu_family(0.0, 1.0, 1, 1), DegenerateInputError);
    CHECK_THROWS_AS(canonical_nu_family(1.0, 1.0, 0, 0), BranchPointError);
}

TEST_CASE("offset family curvature") {
    SUBCASE("printed form on the unit circle") {
        CHECK(canonical_nu_offset(0, 0, 1, 0) == doctest::Approx(nu_on_unit_circle()).epsilon(1e-14));
    }
    SUBCASE("printed radial factor disagrees with nu0 off the unit circle") {
        CHECK(rel(canonical_nu_offset(0, 0, 2, 0), canonical_nu_0(2, 0)) > 0.1);
        CHECK(rel(canonical_nu_offset_closed(0, 0, 2, 0), canonical_nu_0(2, 0)) < 1e-14);
    }
    SUBCASE("closed form equals the normal curvature of g~ + a + ib") {
        const auto sub = canonical_substitution(1.0, 1.0);
        const auto g = canonical_generator(sub, cplx(0.5, -0.25));
        for (const auto& p : annulus_points(100, 5, 0.1, 2.0, sub.branch(), 0.0)) {
            const cplx w(p.u, p.v);
            const cplx gp = g.derivative(w);
            const double direct = normal_curvature_from_values(-1.0 / gp, g.value(w), gp);
            CHECK(rel(canonical_nu_offset_closed(0.5, -0.25, p.u, p.v), direct) <= 1e-12);
        }
    }
    SUBCASE("conjugation symmetry: b -> -b with u -> -u") {
        const BranchSpec branch;
        for (const auto& p : annulus_points(100, 6, 0.1, 2.0, branch, 1e-9)) {
            for (double a : {0.0, 0.5, -1.0}) {
                CHECK(rel(canonical_nu_offset(a, 0.7, p.u, p.v), canonical_nu_offset(a, -0.7, -p.u, p.v)) <= 1e-12);
            }
        }
        // Reflecting v instead does not give a symmetry.
        CHECK(rel(canonical_nu_offset(0.5, 0.7, 1.0, 0.5), canonical_nu_offset(0.5, -0.7, 1.0, -0.5)) > 1e-3);
    }
    SUBCASE("offsets give different fields") {
        CHECK(canonical_nu_offset(1, 0, 1, 0) != doctest::Approx(canonical_nu_offset(0, 0, 1, 0)));
    }
}

TEST_CASE("Ganchev PDE defect") {
    CHECK(ganchev_pde_defect(canonical_nu_0, 1.0, 0.5, 1e-3) < 1e-4);
    CHECK(ganchev_pde_defect([](double, double) { return 3.0; }, 0.2, 0.1, 1e-3) == doctest::Approx(6.0));
    const NuField closed = [](double u, double v) { return canonical_nu_offset_closed(0.5, 0.0, u, v); };
    CHECK(ganchev_pde_defect(closed, 1.0, 1.0, 1e-3) < 1e-4);
    const NuField printed = [](double u, double v) { return canonical_nu_offset(0.5, 0.0, u, v); };
    CHECK(ganchev_pde_defect(printed, 1.0, 1.0, 1e-3) > 1e-2);

    const auto conv = ganchev_pde_convergence(canonical_nu_0, 1.0, 0.5, 1e-3);
    CHECK(conv.observed_order == doctest::Approx(2.0).epsilon(0.05));

    CHECK_THROWS_AS(ganchev_pde_defect([](double u, double) { return u; }, 0.0, 0.0, 1e-3), DegenerateInputError);
    CHECK_THROWS_AS(ganchev_pde_defect(canonical_nu_0, 1.0, 0.0, 0.0), DegenerateInputError);
}

TEST_CASE("Ganchev chart with g~ = w is the Enneper generator up to sign") {
    const ComplexFunction g{[](cplx w) { return w; }, [](cplx) { return cplx(1.0); }};
    const CanonicalChart chart(g, BranchSpec::none());
    const cplx w(0.3, -0.8);
    const auto phi = chart.integrand(w);
    CHECK(std::abs(phi[0] + 0.5 * (1.0 - w * w)) < 1e-15);
    CHECK(std::abs(phi[1] + 0.5 * kI * (1.0 + w * w)) < 1e-15);
    CHECK(std::abs(phi[2] + w) < 1e-15);
    const auto enn = enneper_chart<double>();
    const Vec3d base = enn.eval(1.0, 0.0);
    for (const auto& p : random_samples(50, 12, -1.5, 1.5)) {
        const Vec3d expected = (enn.eval(p.u, p.v) - base) * -1.0;
        CHECK(max_abs(chart.eval(p.u, p.v) - expected) < 1e-10);
    }
}

TEST_CASE("vanishing g~' is reported with its location") {
    const ComplexFunction g{[](cplx w) { return w * w; }, [](cplx w) { return 2.0 * w; }};
    const CanonicalChart chart(g, BranchSpec::none());
    try {
        chart.eval(-1.0, 0.0);
        FAIL("expected DegenerateInputError");
    } catch (const DegenerateInputError& e) {
        CHECK(std::string(e.what()).find("w = (0, 0)") != std::string::npos);
    }
}

TEST_CASE("canonical chart of nu0 has canonical forms") {
    const auto sub = canonical_substitution(1.0, 1.0);
    const CanonicalChart chart = ganchev_chart(canonical_generator(sub), sub.branch());
    const auto samples = annulus_points(40, 13, 0.5, 2.0, sub.branch(), 0.01);
    for (const auto& p : samples) CHECK(rel(chart.nu(p.u, p.v), canonical_nu_0(p.u, p.v)) <= 1e-12);
    const auto d = canonical_form_defects(chart, samples);
    CHECK(d.first < 1e-6);
    CHECK(d.second < 1e-5);
    // Minimal with nu = sqrt(-K) from the difference forms.
    const auto ff = chart.forms(1.0, 0.5);
    CHECK(std::abs(ff.H) < 1e-4);
    CHECK(rel(ff.nu, canonical_nu_0(1.0, 0.5)) < 1e-5);
    CHECK_THROWS_AS(chart.forms(1e-4, 1.0), BranchPointError);
}

TEST_CASE("E nu = 1 for the offset family") {
    const auto sub = canonical_substitution(1.0, 1.0);
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.5, 0.0}, {1.0, 0.0}, {0.0, -0.5}}) {
        const CanonicalChart chart(canonical_generator(sub, cplx(a, b)), sub.branch());
        const auto samples = annulus_points(100, 14, 0.5, 2.0, sub.branch(), 0.01);
        double worst = 0;
        for (const auto& p : samples) {
            const auto ff = chart.forms(p.u, p.v);
            worst = std::max(worst, std::abs(ff.E * canonical_nu_offset_closed(a, b, p.u, p.v) - 1.0));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("surface distinctness under parameter changes") {
    const BranchSpec branch;
    const auto samples = annulus_grid(0.5, 2.0, 6, 24, branch, 0.01);
    const NuField nu00 = [](double u, double v) { return canonical_nu_offset_closed(0, 0, u, v); };
    const NuField nu10 = [](double u, double v) { return canonical_nu_offset_closed(1, 0, u, v); };
    const auto diff = compare_canonical_fields(nu00, nu10, samples, branch);
    CHECK(diff.distinct);
    CHECK(diff.min_max_difference > 1e-3);
    const auto same = compare_canonical_fields(nu10, nu10, samples, branch);
    CHECK_FALSE(same.distinct);
    CHECK(same.best_sign == 1);
    CHECK(same.best_shift_u == 0.0);
}

TEST_CASE("annulus grid keeps clear of the cut") {
    const BranchSpec branch;
    const auto pts = annulus_grid(0.5, 2.0, 10, 40, branch, 0.01);
    CHECK_FALSE(pts.empty());
    for (const auto& p : pts) {
        const double r = std::hypot(p.u, p.v);
        CHECK(r >= 0.5 - 1e-12);
        CHECK(r <= 2.0 + 1e-12);
        CHECK(branch.distance_to_cut(cplx(p.u, p.v)) > 0.01);
    }
}

}  // TEST_SUITE
