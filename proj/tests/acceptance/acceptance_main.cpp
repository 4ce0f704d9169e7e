// Runs the twelve acceptance criteria and prints one line per criterion.
// Thresholds live in minsurf/thresholds.hpp; runtime budgets in verify.cpp.

#include <cstdio>

#include "minsurf/verify.hpp"

int main() {
    minsurf::VerifyOptions opt;
    opt.seed = minsurf::kDefaultSeed;
    const auto report = minsurf::run_acceptance(opt);
    for (const auto& r : report.results) {
        std::printf("%s  criterion %2d  %-55s %8.3f s  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds, r.detail.c_str());
    }
    for (const auto& n : report.notes) std::printf("note: %s\n", n.c_str());
    std::printf("%d/%zu criteria passed\n", report.passed_count(), report.results.size());
    return report.all_passed() ? 0 : 1;
}
