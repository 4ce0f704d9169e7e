#include <doctest.h>

#include "helpers.hpp"
#include "minsurf/sampling.hpp"

using namespace minsurf;
using testing::dpoly;
using testing::qpoly;

TEST_SUITE("complex-poly") {

TEST_CASE("ring and calculus operations") {
    CHECK(qpoly({{0, 0}, {0, 0}, {1, 0}}).derivative() == qpoly({{0, 0}, {2, 0}}));
    CHECK(qpoly({{1, 0}}).antiderivative() == qpoly({{0, 0}, {1, 0}}));
    CHECK(qpoly({{1, 0}, {1, 0}}) * qpoly({{-1, 0}, {1, 0}}) == qpoly({{-1, 0}, {0, 0}, {1, 0}}));
    CHECK(qpoly({{1, 2}}) + qpoly({{-1, -2}}) == ComplexPoly<Rational>());
    CHECK(ComplexPoly<Rational>().degree() == -1);
}

TEST_CASE("antiderivative has zero constant term and inverts derivative") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        auto p = random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(1, 6)));
        p = p - ComplexPoly<Rational>::constant(p.coeff(0));
        CHECK(p.antiderivative().coeff(0).is_zero());
        CHECK(p.derivative().antiderivative() == p);
    }
}

TEST_CASE("float normalization strips tiny trailing coefficients") {
    const auto p = dpoly({{1, 0}, {2, 0}, {1e-15, -1e-15}});
    CHECK(p.degree() == 1);
    CHECK(dpoly({{5e-15, 0}}).is_zero());
    // Exact backend keeps any nonzero coefficient.
    const ComplexPoly<Rational> q({Complex<Rational>(Rational(1)), Complex<Rational>(Rational(1, 1000000000))});
    CHECK(q.degree() == 1);
}

TEST_CASE("non-finite coefficients are rejected") {
    CHECK_THROWS_AS(dpoly({{1, 0}, {std::nan(""), 0}}), DegenerateInputError);
    CHECK_THROWS_AS(dpoly({{INFINITY, 0}}), DegenerateInputError);
}

TEST_CASE("Horner agrees with the power sum") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        const auto p = cast_poly<double>(random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(0, 8)), 5));
        const Complex<double> z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto a = p.eval(z), b = p.eval_naive(z);
        const double scale = std::max(1.0, b.abs());
        CHECK((a - b).abs() <= 1e-12 * scale);
    }
}

TEST_CASE("Weierstrass curve derivatives") {
    SUBCASE("f = 1, g = z") {
        const auto d = weierstrass_curve(qpoly({{1, 0}}), qpoly({{0, 0}, {1, 0}})).derivative();
        const Rational h(1, 2);
        CHECK(d[0] == qpoly({{0.5, 0}, {0, 0}, {-0.5, 0}}));
        CHECK(d[1] == qpoly({{0, 0.5}, {0, 0}, {0, 0.5}}));
        CHECK(d[2] == qpoly({{0, 0}, {1, 0}}));
    }
    SUBCASE("f = z, g = z") {
        const auto c = weierstrass_curve(qpoly({{0, 0}, {1, 0}}), qpoly({{0, 0}, {1, 0}}));
        const auto d = c.derivative();
        CHECK(d[0] == qpoly({{0, 0}, {0.5, 0}, {0, 0}, {-0.5, 0}}));
        CHECK(d[1] == qpoly({{0, 0}, {0, 0.5}, {0, 0}, {0, 0.5}}));
        CHECK(d[2] == qpoly({{0, 0}, {0, 0}, {1, 0}}));
        // Based at z0 = 0.
        for (const auto& comp : c.components) CHECK(comp.coeff(0).is_zero());
    }
}

TEST_CASE("zero f is a degenerate generating pair") {
    try {
        weierstrass_curve(ComplexPoly<Rational>(), qpoly({{0, 0}, {1, 0}}));
        FAIL("expected an exception");
    } catch (const DegenerateInputError& e) {
        CHECK(std::string(e.what()).find("degenerate generating pair") != std::string::npos);
    }
}

TEST_CASE("isotropy defect") {
    MinimalCurve<Rational> iso{{qpoly({{0, 0}, {1, 0}}), qpoly({{0, 0}, {0, 1}}), ComplexPoly<Rational>()}};
    CHECK(isotropy_defect(iso) == 0.0);
    // Psi' = (z, z, 0): the square is 2 z^2.
    MinimalCurve<Rational> bad{{qpoly({{0, 0}, {0, 0}, {0.5, 0}}), qpoly({{0, 0}, {0, 0}, {0.5, 0}}),
                                ComplexPoly<Rational>()}};
    CHECK(isotropy_defect(bad) == doctest::Approx(2.0));
}

TEST_CASE("Weierstrass curves are isotropic for random pairs") {
    Rng rng(123);
    for (int k = 0; k < 40; ++k) {
        const auto f = random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(0, 3)));
        const auto g = random_gaussian_poly(rng, static_cast<int>(rng.uniform_int(0, 3)));
        CHECK(isotropy_defect(weierstrass_curve(f, g)) == 0.0);
        CHECK(isotropy_defect(weierstrass_curve(cast_poly<double>(f), cast_poly<double>(g))) <= 1e-12 * 1e4);
        if (g.degree() >= 1) {
            const auto d = weierstrass_curve(f, g).derivative();
            CHECK(d[0].degree() == (f * g * g).degree());
        }
    }
}

TEST_CASE("float isotropy stays at roundoff for unit-size coefficients") {
    const auto c = weierstrass_curve(dpoly({{0.3, -0.2}, {0.7, 0.1}}), dpoly({{0.1, 0.4}, {-0.6, 0.2}, {0.5, 0.5}}));
    CHECK(isotropy_defect(c) <= 1e-12);
}

TEST_CASE("JSON round trip") {
    const auto p = complex_poly_from_json<Rational>(R"([[1, 0], ["1/3", "-2/7"], [0.25, 0]])");
    CHECK(p.coeff(1).re == Rational(1, 3));
    CHECK(p.coeff(1).im == Rational(-2, 7));
    CHECK(p.coeff(2).re == Rational(1, 4));
    CHECK(complex_poly_from_json<Rational>(complex_poly_to_json(p)) == p);
    const auto d = complex_poly_from_json<double>("[[0,0],[1,0]]");
    CHECK(d == ComplexPoly<double>::identity());
    CHECK(complex_poly_from_json<double>(complex_poly_to_json(d)) == d);
    CHECK_THROWS_AS(complex_poly_from_json<double>("[[1]]"), FormatError);
    CHECK_THROWS_AS(complex_poly_from_json<double>("{\"a\":1}"), FormatError);
    CHECK_THROWS_AS(complex_poly_from_json<Rational>("[[\"1/0\", 0]]"), FormatError);
    CHECK_THROWS_AS(complex_poly_from_json<double>("[[1,0]"), FormatError);
}

TEST_CASE("exact rational parsing") {
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(rational_from_double(0.1) != Rational(1, 10));
    CHECK(to_double(rational_from_double(0.1)) == 0.1);
    CHECK_THROWS_AS(parse_rational("abc"), FormatError);
}

TEST_CASE("division") {
    const auto a = qpoly({{1, 0}, {2, 1}});
    const auto b = qpoly({{-1, 3}, {0, 0}, {1, 0}});
    const auto r = divide(a * b, a);
    CHECK(r.quotient == b);
    CHECK(r.remainder.is_zero());
    CHECK_THROWS_AS(divide(a, ComplexPoly<Rational>()), DegenerateInputError);
}

}  // TEST_SUITE
