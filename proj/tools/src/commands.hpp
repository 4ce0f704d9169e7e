#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "minsurf/mesh.hpp"

namespace minsurf::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kVerification = 3 };

enum class Backend { Rational, Float };

struct GenerateConfig {
    std::string f_json;
    std::string g_json;
    ParamDomain domain{};
    int samples = 101;
    std::string out;           // OBJ path
    std::string report;        // Markdown; defaults to <out>.report.md
    std::string nu_csv;        // optional normal-curvature field
    Backend backend = Backend::Rational;
    std::optional<std::uint64_t> seed;
};

struct CompleteConfig {
    std::string input;
    std::string out;
    std::string report;  // defaults to <out>.report.md
    Backend backend = Backend::Rational;
};

struct CanonicalConfig {
    std::optional<std::string> A;
    std::optional<std::string> C;
    std::optional<std::pair<double, double>> offset;
    double r0 = 0.5;
    double r1 = 2.0;
    int radial = 16;
    int angular = 64;
    std::string out;
};

struct VerifyConfig {
    std::string report;
    std::optional<std::uint64_t> seed;
};

int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_complete_bezier(const CompleteConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_canonical(const CanonicalConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: parses, validates and dispatches. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsurf::cli
