#include <doctest.h>

#include "minsurf/canonical.hpp"
#include "minsurf/verify.hpp"

using namespace minsurf;

namespace {

CompletionTable tampered_table() {
    CompletionTable t = harmonic_completion_table();
    for (auto& r : t) {
        if (r.i == 3 && r.j == 3) r.weights[3] = -r.weights[3];
    }
    return t;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("individual criteria pass") {
    const VerifyOptions opt;
    CHECK(check_enneper_reproduction().passed);
    CHECK(check_completion_oracle(opt).passed);
    CHECK(check_reference_net(opt).passed);
    CHECK(check_symmetry_property(opt).passed);
    CHECK(check_ganchev_pde().passed);
    CHECK(check_substitution_residual(opt).passed);
    CHECK(check_homothety(opt).passed);
    CHECK(check_bicubic_non_isothermal(opt).passed);
}

TEST_CASE("tampered completion table is caught") {
    const auto table = tampered_table();
    VerifyOptions opt;
    opt.completion_table = &table;
    const auto r5 = check_completion_oracle(opt);
    CHECK_FALSE(r5.passed);
    CHECK(r5.id == 5);
    CHECK_FALSE(check_reference_net(opt).passed);
}

TEST_CASE("seeded inputs are reproducible") {
    const auto a = seeded_generating_pairs(42);
    const auto b = seeded_generating_pairs(42);
    REQUIRE(a.size() == 20);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].f == b[k].f);
        CHECK(a[k].g == b[k].g);
        CHECK(a[k].f.degree() <= 2);
        CHECK(a[k].g.degree() >= 1);
        CHECK(a[k].g.degree() <= 2);
    }
    CHECK(criterion_seed(42, 2) != criterion_seed(42, 3));
    CHECK(criterion_seed(42, 2) != criterion_seed(43, 2));
}

TEST_CASE("annulus samples keep the stencil off the cut") {
    const double h = 1e-3;
    const BranchSpec branch;
    for (const auto& p : pde_annulus_samples(h)) CHECK(branch.admits(cplx(p.u, p.v), 2 * h));
}

TEST_CASE("full run and deterministic report") {
    VerifyOptions opt;
    opt.include_determinism = false;
    const auto first = run_acceptance(opt);
    CHECK(first.results.size() == 11);
    CHECK(first.all_passed());
    const auto second = run_acceptance(opt);
    CHECK(render_report(first) == render_report(second));
    const std::string text = render_report(first);
    CHECK(text.find("Overall: PASS") != std::string::npos);
    CHECK(text.find("Seed: 42") != std::string::npos);

    auto broken = first;
    broken.results[4].passed = false;
    CHECK_FALSE(broken.all_passed());
    CHECK(broken.passed_count() == 10);
    CHECK(render_report(broken).find("Overall: FAIL") != std::string::npos);
}

}  // TEST_SUITE
