#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minsurf/bezier.hpp"
#include "minsurf/sampling.hpp"

namespace minsurf {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    /// Wall time; never rendered, so reports stay byte-identical between runs.
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Completion table under test; null means the library table. Lets tests
    /// check that a tampered table is caught.
    const CompletionTable* completion_table = nullptr;
    /// Criterion 12 re-runs 1-11 and compares the rendered rows.
    bool include_determinism = true;
};

struct VerifyReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<CriterionResult> results;
    std::vector<std::string> notes;

    bool all_passed() const;
    int passed_count() const;
};

/// Seed of the random stream used by criterion `id`.
std::uint64_t criterion_seed(std::uint64_t seed, int id);

CriterionResult check_enneper_reproduction();
CriterionResult check_minimality(const VerifyOptions& opt);
CriterionResult check_closed_forms(const VerifyOptions& opt);
CriterionResult check_generator_round_trip(const VerifyOptions& opt);
CriterionResult check_completion_oracle(const VerifyOptions& opt);
CriterionResult check_reference_net(const VerifyOptions& opt);
CriterionResult check_symmetry_property(const VerifyOptions& opt);
CriterionResult check_ganchev_pde();
CriterionResult check_substitution_residual(const VerifyOptions& opt);
CriterionResult check_homothety(const VerifyOptions& opt);
CriterionResult check_bicubic_non_isothermal(const VerifyOptions& opt);

/// Runs every criterion in order.
VerifyReport run_acceptance(const VerifyOptions& opt = {});

/// Markdown report: seed, one table row per criterion, notes, overall verdict.
std::string render_report(const VerifyReport& report);

/// The 20 seeded generating pairs of criteria 2 and 3 (deg f <= 2, 1 <= deg g <= 2).
std::vector<GeneratingPair<Rational>> seeded_generating_pairs(std::uint64_t seed, int count = 20);

/// Samples of the canonical annulus 0.5 <= |w| <= 2 that keep the 5-point
/// stencil of step h clear of the (i w)^(2/3) cut.
std::vector<SamplePoint> pde_annulus_samples(double h);

}  // namespace minsurf
