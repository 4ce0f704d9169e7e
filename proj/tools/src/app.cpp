#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "minsurf/errors.hpp"

namespace minsurf::cli {

namespace {

const std::map<std::string, Backend> kBackends = {{"rational", Backend::Rational}, {"float", Backend::Float}};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial minimal surfaces: generation, verification, canonical parameters, Bezier nets"};
    app.name("minsurf");
    app.require_subcommand(1);

    GenerateConfig gen;
    std::vector<double> gen_domain;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "Build a Weierstrass surface, export OBJ and a verification report");
    generate->add_option("--f", gen.f_json, "f as JSON [[re,im],...], lowest degree first")->required();
    generate->add_option("--g", gen.g_json, "g as JSON [[re,im],...], lowest degree first")->required();
    generate->add_option("--domain", gen_domain, "u0,u1,v0,v1 (default -1,1,-1,1)")->expected(4)->delimiter(',');
    generate->add_option("--samples", gen.samples, "mesh samples per side")->capture_default_str();
    generate->add_option("--out", gen.out, "OBJ output path")->required();
    generate->add_option("--report", gen.report, "Markdown report path (default <out>.report.md)");
    generate->add_option("--nu-csv", gen.nu_csv, "optional CSV of the normal curvature field");
    generate->add_option("--backend", gen.backend, "rational or float")
        ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));
    auto* gen_seed_opt = generate->add_option("--seed", gen_seed, "random seed (overrides MINSURF_SEED)");

    CompleteConfig comp;
    auto* complete = app.add_subcommand("complete-bezier", "Complete a harmonic bi-quartic net from nine given points");
    complete->add_option("--input", comp.input, "grid JSON")->required();
    complete->add_option("--out", comp.out, "completed grid JSON")->required();
    complete->add_option("--report", comp.report, "Markdown report path (default <out>.report.md)");
    complete->add_option("--backend", comp.backend, "rational or float")
        ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));

    CanonicalConfig canon;
    std::string canon_A, canon_C;
    std::vector<double> canon_offset, canon_annulus;
    auto* canonical = app.add_subcommand("canonical", "Normal curvature in canonical principal parameters");
    auto* a_opt = canonical->add_option("--A", canon_A, "leading coefficient of f = Az (real or 're,im')");
    auto* c_opt = canonical->add_option("--C", canon_C, "leading coefficient of g = Cz (real or 're,im')");
    auto* off_opt = canonical->add_option("--offset", canon_offset, "a b for g~ = z(w) + a + ib")->expected(2);
    off_opt->excludes(a_opt)->excludes(c_opt);
    canonical->add_option("--annulus", canon_annulus, "r0 r1 (default 0.5 2)")->expected(2);
    canonical->add_option("--radial", canon.radial, "radial sample count")->capture_default_str();
    canonical->add_option("--angular", canon.angular, "angular sample count")->capture_default_str();
    canonical->add_option("--out", canon.out, "CSV output path (u,v,nu,pde_defect)")->required();

    VerifyConfig ver;
    std::uint64_t ver_seed = 0;
    auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite and write a Markdown report");
    verify->add_option("--report", ver.report, "report path")->required();
    auto* ver_seed_opt = verify->add_option("--seed", ver_seed, "random seed (overrides MINSURF_SEED)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidation;
    }

    try {
        if (generate->parsed()) {
            if (!gen_domain.empty()) gen.domain = {gen_domain[0], gen_domain[1], gen_domain[2], gen_domain[3]};
            if (gen_seed_opt->count() > 0) gen.seed = gen_seed;
            return cmd_generate(gen, out, err);
        }
        if (complete->parsed()) return cmd_complete_bezier(comp, out, err);
        if (canonical->parsed()) {
            if (a_opt->count() > 0) canon.A = canon_A;
            if (c_opt->count() > 0) canon.C = canon_C;
            if (!canon_offset.empty()) canon.offset = std::pair{canon_offset[0], canon_offset[1]};
            if (!canon_annulus.empty()) {
                canon.r0 = canon_annulus[0];
                canon.r1 = canon_annulus[1];
            }
            return cmd_canonical(canon, out, err);
        }
        if (verify->parsed()) {
            if (ver_seed_opt->count() > 0) ver.seed = ver_seed;
            return cmd_verify_paper(ver, out, err);
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const DegenerateInputError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const Error& e) {
        err << "verification error: " << e.what() << "\n";
        return kVerification;
    }
    return kValidation;
}

}  // namespace minsurf::cli
