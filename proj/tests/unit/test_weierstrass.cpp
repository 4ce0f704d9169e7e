#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "minsurf/chart.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/sampling.hpp"

using namespace minsurf;
using testing::dpoly;
using testing::qpoly;
using testing::rel;

namespace {

const auto kOne = qpoly({{1, 0}});
const auto kZ = qpoly({{0, 0}, {1, 0}});

VectorChart<Rational> chart_of(const ComplexPoly<Rational>& f, const ComplexPoly<Rational>& g) {
    return real_chart(weierstrass_curve(f, g));
}

VectorChart<double> plane_chart(double sv = 1.0) {
    VectorChart<double> x;
    x.component(0).set(1, 0, 1.0);
    x.component(1).set(0, 1, sv);
    return x;
}

}  // namespace

TEST_SUITE("weierstrass") {

TEST_CASE("Enneper chart from f = 1, g = z") {
    // 1/2 (u - u^3/3 + u v^2, -v + v^3/3 - u^2 v, u^2 - v^2), written out by hand.
    VectorChart<Rational> expected;
    expected.set_coeff(1, 0, {Rational(1, 2), 0, 0});
    expected.set_coeff(3, 0, {Rational(-1, 6), 0, 0});
    expected.set_coeff(1, 2, {Rational(1, 2), 0, 0});
    expected.set_coeff(0, 1, {0, Rational(-1, 2), 0});
    expected.set_coeff(0, 3, {0, Rational(1, 6), 0});
    expected.set_coeff(2, 1, {0, Rational(-1, 2), 0});
    expected.set_coeff(2, 0, {0, 0, Rational(1, 2)});
    expected.set_coeff(0, 2, {0, 0, Rational(-1, 2)});
    CHECK(chart_of(kOne, kZ) == expected);
    CHECK(enneper_chart<Rational>() == expected);
}

TEST_CASE("imaginary part chart") {
    MinimalCurve<Rational> c{{kZ, qpoly({{0, 0}, {0, 1}}), ComplexPoly<Rational>()}};
    VectorChart<Rational> expected;
    expected.set_coeff(0, 1, {1, 0, 0});
    expected.set_coeff(1, 0, {0, 1, 0});
    CHECK(imag_chart(c) == expected);
}

TEST_CASE("quartic terms of the f = z, g = z chart") {
    const auto x = chart_of(kZ, kZ);
    CHECK(x.coeff(4, 0) == Vec3<Rational>(Rational(-1, 8), 0, 0));
    CHECK(x.coeff(0, 4) == Vec3<Rational>(Rational(-1, 8), 0, 0));
    CHECK(x.coeff(2, 2) == Vec3<Rational>(Rational(3, 4), 0, 0));
    CHECK(x.degree_u() == 4);
    CHECK(x.degree_v() == 4);
}

TEST_CASE("fundamental forms at known points") {
    SUBCASE("Enneper at the origin") {
        const auto ff = fundamental_forms(enneper_chart<double>(), 0.0, 0.0);
        CHECK(ff.E == doctest::Approx(0.25));
        CHECK(ff.G == doctest::Approx(0.25));
        CHECK(ff.F == doctest::Approx(0.0));
        CHECK(std::abs(ff.H) < 1e-14);
        CHECK(ff.nu == doctest::Approx(4.0));
    }
    SUBCASE("plane") {
        const auto ff = fundamental_forms(plane_chart(), 0.3, -0.7);
        CHECK(ff.E == 1.0);
        CHECK(ff.G == 1.0);
        CHECK(ff.F == 0.0);
        CHECK(ff.K == 0.0);
        CHECK(ff.H == 0.0);
    }
    SUBCASE("f = z, g = z at (1, 0)") {
        const auto ff = fundamental_forms(cast_chart<double>(chart_of(kZ, kZ)), 1.0, 0.0);
        CHECK(ff.E == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(ff.G == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(ff.F) < 1e-14);
        CHECK(ff.nu == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("singular points are refused with the cross-product norm") {
    // f = z vanishes at the origin, so x_u = x_v = 0 there.
    try {
        fundamental_forms(cast_chart<double>(chart_of(kZ, kZ)), 0.0, 0.0);
        FAIL("expected SingularPointError");
    } catch (const SingularPointError& e) {
        CHECK(e.cross_norm() < 1e-12);
    }
}

TEST_CASE("closed forms") {
    const auto one = dpoly({{1, 0}}), z = dpoly({{0, 0}, {1, 0}});
    CHECK(first_form_closed(one, z, 0, 0).E == doctest::Approx(0.25));
    CHECK(first_form_closed(z, z, 1, 0).E == doctest::Approx(1.0));
    CHECK(first_form_closed(dpoly({{2, 0}}), dpoly({}), 0.4, 7.0).G == doctest::Approx(1.0));
    CHECK(first_form_closed(one, z, 0.2, 0.1).F == 0.0);
    CHECK(normal_curvature_closed(one, z, 0, 0) == doctest::Approx(4.0));
    CHECK(normal_curvature_closed(z, z, 1, 0) == doctest::Approx(1.0));
    CHECK(normal_curvature_closed(one, dpoly({{0.3, 0.2}}), 0.5, 0.5) == 0.0);
    CHECK_THROWS_AS(normal_curvature_closed(z, z, 0, 0), SingularPointError);
}

TEST_CASE("closed forms agree with the chart computation") {
    Rng rng(99);
    const auto pts = random_samples(300, 3);
    for (int k = 0; k < 10; ++k) {
        const auto f = random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(0, 2)));
        const auto g = random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(1, 2)));
        const ChartJet jet(cast_chart<double>(chart_of(f, g)));
        const auto fd = cast_poly<double>(f), gd = cast_poly<double>(g);
        for (const auto& p : pts) {
            const auto ff = fundamental_forms(jet, p.u, p.v);
            CHECK(rel(ff.E, first_form_closed(fd, gd, p.u, p.v).E) <= 1e-10);
            CHECK(rel(ff.nu, normal_curvature_closed(fd, gd, p.u, p.v)) <= 1e-9);
            CHECK(std::abs(ff.H) <= 1e-9);
            // nu = sqrt(-K) on minimal surfaces.
            CHECK(rel(ff.nu, std::sqrt(-ff.K)) <= 1e-10);
        }
    }
}

TEST_CASE("chart derivatives agree with finite differences") {
    Rng rng(17);
    const auto x = cast_chart<double>(chart_of(random_gaussian_poly(rng, 2), random_gaussian_poly(rng, 2)));
    const auto xu = x.du(), xv = x.dv();
    const double h = 1e-6;
    for (const auto& p : random_samples(100, 8)) {
        const Vec3d fd_u = (x.eval(p.u + h, p.v) - x.eval(p.u - h, p.v)) * (0.5 / h);
        const Vec3d fd_v = (x.eval(p.u, p.v + h) - x.eval(p.u, p.v - h)) * (0.5 / h);
        const Vec3d au = xu.eval(p.u, p.v), av = xv.eval(p.u, p.v);
        CHECK(max_abs(fd_u - au) <= 1e-6 * std::max(1.0, max_abs(au)));
        CHECK(max_abs(fd_v - av) <= 1e-6 * std::max(1.0, max_abs(av)));
    }
}

TEST_CASE("generator extraction") {
    SUBCASE("Enneper gives f = 1, g = z") {
        const auto p = extract_generators(enneper_chart<Rational>());
        CHECK(p.f == kOne);
        CHECK(p.g == kZ);
    }
    SUBCASE("round trips") {
        for (const auto& [f, g] : std::vector<std::pair<ComplexPoly<Rational>, ComplexPoly<Rational>>>{
                 {kZ, qpoly({{-1, 0}, {1, 0}})}, {qpoly({{1, 0}, {2, 0}}), qpoly({{0, 0}, {3, 0}})}}) {
            const auto p = extract_generators(chart_of(f, g));
            CHECK(p.f == f);
            CHECK(p.g == g);
        }
    }
    SUBCASE("float backend") {
        const auto p = extract_generators(cast_chart<double>(chart_of(qpoly({{1, 1}, {0.5, 0}}), qpoly({{0, 0}, {0, 2}}))));
        CHECK((p.f.coeff(0) - Complex<double>(1, 1)).abs() < 1e-12);
        CHECK((p.g.coeff(1) - Complex<double>(0, 2)).abs() < 1e-12);
    }
    SUBCASE("non-isothermal chart is rejected") {
        CHECK_THROWS_AS(extract_generators(bicubic_counterexample_chart<Rational>()), NotWeierstrassError);
    }
    SUBCASE("g that is not polynomial is rejected") {
        // Rotating the Enneper chart about the x axis by 90 degrees keeps it
        // isothermal and harmonic but turns g into a Moebius image of z.
        const auto e = enneper_chart<Rational>();
        VectorChart<Rational> rot({e.component(0), e.component(2) * Rational(-1), e.component(1)});
        try {
            extract_generators(rot);
            FAIL("expected NotWeierstrassError");
        } catch (const NotWeierstrassError& err) {
            CHECK(std::string(err.what()).find("not polynomial-Weierstrass") != std::string::npos);
        }
    }
}

TEST_CASE("isothermality") {
    const auto samples = grid_samples(21);
    const auto e = is_isothermal(enneper_chart<double>(), samples);
    CHECK(e.isothermal);
    CHECK(e.max_defect < 1e-14);
    CHECK(is_isothermal_exact(enneper_chart<Rational>()).isothermal);
    CHECK(is_isothermal_exact(enneper_chart<Rational>()).max_defect == 0.0);
    CHECK_FALSE(is_isothermal(bicubic_counterexample_chart<double>(), samples).isothermal);
    CHECK_FALSE(is_isothermal_exact(bicubic_counterexample_chart<Rational>()).isothermal);
    CHECK_FALSE(is_isothermal(plane_chart(2.0), samples).isothermal);
    CHECK(is_isothermal(plane_chart(2.0), samples).max_defect == doctest::Approx(3.0));
}

TEST_CASE("harmonicity defect") {
    CHECK(harmonicity_defect(enneper_chart<Rational>()) == 0.0);
    VectorChart<Rational> x;
    x.component(0).set(2, 0, 1);
    x.component(1).set(0, 1, 1);
    CHECK(harmonicity_defect(x) == 2.0);
    CHECK(harmonicity_defect(bicubic_counterexample_chart<Rational>()) > 0.0);
}

TEST_CASE("bi-cubic chart is minimal away from v = 0") {
    const ChartJet jet(bicubic_counterexample_chart<double>());
    for (const auto& p : random_samples(200, 21)) {
        if (std::abs(p.v) < 0.05) continue;
        CHECK(std::abs(fundamental_forms(jet, p.u, p.v).H) < 1e-9);
    }
    CHECK_THROWS_AS(fundamental_forms(jet, 0.4, 0.0), SingularPointError);
}

TEST_CASE("affine reparametrization") {
    const auto samples = grid_samples(11);
    CHECK(affine_reparam_F(enneper_chart<double>(), AffineMap{}, samples) < 1e-15);
    CHECK(affine_reparam_F(bicubic_counterexample_chart<double>(), AffineMap{}, samples) > 1e-3);
    // Rotations and scalings keep isothermal charts isothermal.
    const double c = std::cos(0.7), s = std::sin(0.7);
    CHECK(affine_reparam_F(enneper_chart<double>(), AffineMap{2 * c, -2 * s, 0.1, 2 * s, 2 * c, -0.3}, samples) < 1e-12);
    CHECK_THROWS_AS(affine_reparam_F(enneper_chart<double>(), AffineMap{1, 2, 0, 2, 4, 0}, samples),
                    DegenerateInputError);
}

TEST_CASE("bi-quartic classification") {
    Rng rng(4);
    for (int k = 0; k < 10; ++k) {
        const auto cls = classify_biquartic(chart_of(random_gaussian_poly(rng, 1), random_gaussian_poly(rng, 1)));
        CHECK(cls.bi_quartic);
        CHECK(cls.linear_pair());
    }
    const auto enn = classify_biquartic(enneper_chart<Rational>());
    CHECK_FALSE(enn.bi_quartic);
    CHECK(enn.degree_f == 0);
}

TEST_CASE("chart JSON round trip") {
    const auto x = chart_of(qpoly({{0.5, -1}, {1, 0}}), qpoly({{0, 0}, {1, 0}}));
    CHECK(chart_from_json<Rational>(chart_to_json(x)) == x);
    const auto d = cast_chart<double>(x);
    CHECK(chart_from_json<double>(chart_to_json(d)) == d);
    CHECK_THROWS_AS(chart_from_json<double>(R"({"degree_u":1,"degree_v":0,"coeffs":[{"i":1,"j":0,"v":[1,2]}]})"),
                    FormatError);
    CHECK_THROWS_AS(chart_from_json<double>("[]"), FormatError);
}

}  // TEST_SUITE
