#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "minsurf/bezier.hpp"
#include "minsurf/canonical.hpp"
#include "minsurf/complex_poly.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/sampling.hpp"
#include "minsurf/thresholds.hpp"
#include "minsurf/verify.hpp"

namespace minsurf::cli {

namespace th = thresholds;

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void require_output_dir(const std::string& path, const std::string& what) {
    if (path.empty()) throw DegenerateInputError(what + " path is empty");
    const std::filesystem::path p(path);
    const auto dir = p.has_parent_path() ? p.parent_path() : std::filesystem::path(".");
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw IoError(what + " directory does not exist: " + dir.string());
    }
}

std::string report_path_for(const std::string& out, const std::string& explicit_path) {
    return explicit_path.empty() ? out + ".report.md" : explicit_path;
}

struct Metric {
    std::string name;
    double value;
    std::string threshold;
    bool pass;
};

std::string escape_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string metrics_table(const std::vector<Metric>& metrics) {
    std::string out = "| Check | Value | Threshold | Result |\n|---|---|---|---|\n";
    for (const auto& m : metrics) {
        out += "| " + escape_cell(m.name) + " | " + sci(m.value) + " | " + m.threshold + " | " + (m.pass ? "PASS" : "FAIL") + " |\n";
    }
    return out;
}

bool all_pass(const std::vector<Metric>& metrics) {
    return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.pass; });
}

cplx parse_complex(const std::string& text, const std::string& name) {
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {to_double(parse_rational(s)), 0.0};
        return {to_double(parse_rational(s.substr(0, comma))), to_double(parse_rational(s.substr(comma + 1)))};
    } catch (const std::exception& e) {
        throw FormatError(name + " must be a real number or 're,im', got '" + text + "'");
    }
}

struct GenerationOutcome {
    VectorChart<double> chart;
    ComplexPoly<double> f, g;
    double isotropy = 0;
    double isothermal_defect = 0;
    bool isothermal = false;
    std::string isothermal_kind;
};

template <Scalar T>
GenerationOutcome build_surface(const std::string& f_json, const std::string& g_json,
                                std::span<const SamplePoint> samples) {
    const auto f = complex_poly_from_json<T>(f_json);
    const auto g = complex_poly_from_json<T>(g_json);
    const auto curve = weierstrass_curve(f, g);
    const auto chart = real_chart(curve);
    GenerationOutcome o;
    o.chart = cast_chart<double>(chart);
    o.f = cast_poly<double>(f);
    o.g = cast_poly<double>(g);
    o.isotropy = isotropy_defect(curve);
    if constexpr (ScalarTraits<T>::exact) {
        const auto iso = is_isothermal_exact(chart);
        o.isothermal = iso.isothermal;
        o.isothermal_defect = iso.max_defect;
        o.isothermal_kind = "E-G, F as polynomials (exact)";
    } else {
        const auto iso = is_isothermal(o.chart, samples, th::kIsothermal);
        o.isothermal = iso.isothermal;
        o.isothermal_defect = iso.max_defect;
        o.isothermal_kind = "max |E-G|, |F| on samples";
    }
    return o;
}

}  // namespace

int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err) {
    // Validation: nothing is written until every input has been checked.
    if (cfg.samples < 2) throw DegenerateInputError("--samples must be at least 2");
    if (!(cfg.domain.u0 < cfg.domain.u1) || !(cfg.domain.v0 < cfg.domain.v1)) {
        throw DegenerateInputError("--domain must satisfy u0 < u1 and v0 < v1");
    }
    require_output_dir(cfg.out, "--out");
    const std::string report_path = report_path_for(cfg.out, cfg.report);
    require_output_dir(report_path, "--report");
    if (!cfg.nu_csv.empty()) require_output_dir(cfg.nu_csv, "--nu-csv");
    const std::uint64_t seed = resolve_seed(cfg.seed);

    Rng rng(seed);
    std::vector<SamplePoint> random_pts;
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.uniform(cfg.domain.u0, cfg.domain.u1);
        const double v = rng.uniform(cfg.domain.v0, cfg.domain.v1);
        random_pts.push_back({u, v});
    }

    const GenerationOutcome o = cfg.backend == Backend::Rational
                                    ? build_surface<Rational>(cfg.f_json, cfg.g_json, random_pts)
                                    : build_surface<double>(cfg.f_json, cfg.g_json, random_pts);

    SurfaceMesh mesh = sample_chart([&](double u, double v) { return o.chart.eval(u, v); }, cfg.domain, cfg.samples,
                                    cfg.samples);
    const ChartJet jet(o.chart);
    double max_h = 0;
    std::size_t singular = 0;
    auto scan = [&](double u, double v) {
        try {
            max_h = std::max(max_h, std::abs(fundamental_forms(jet, u, v).H));
        } catch (const SingularPointError&) {
            ++singular;
        }
    };
    for (const auto& p : mesh.params) scan(p.u, p.v);
    for (const auto& p : random_pts) scan(p.u, p.v);
    attach_scalar(mesh, "nu", [&](double u, double v) { return normal_curvature_closed(o.f, o.g, u, v); });

    const bool exact = cfg.backend == Backend::Rational;
    std::vector<Metric> metrics = {
        {"isotropy defect of Psi'", o.isotropy, exact ? "0 (exact)" : sci(th::kIsotropy),
         exact ? o.isotropy == 0.0 : o.isotropy <= th::kIsotropy},
        {"isothermality: " + o.isothermal_kind, o.isothermal_defect, exact ? "0 (exact)" : sci(th::kIsothermal),
         o.isothermal},
        {"max |H| at regular samples", max_h, sci(th::kMeanCurvature), max_h <= th::kMeanCurvature},
    };

    std::ostringstream report;
    report << "# minsurf generate\n\n"
           << "f = " << cfg.f_json << "\n\ng = " << cfg.g_json << "\n\n"
           << "Backend: " << (exact ? "rational" : "float") << "; domain [" << format_double(mesh.domain.u0) << ", "
           << format_double(mesh.domain.u1) << "] x [" << format_double(mesh.domain.v0) << ", "
           << format_double(mesh.domain.v1) << "]; " << cfg.samples << " x " << cfg.samples
           << " mesh; seed " << seed << "; " << singular << " singular sample(s) skipped\n\n"
           << metrics_table(metrics);
    if (!mesh.note.empty()) report << "\n" << mesh.note << "\n";

    export_obj(mesh, cfg.out);
    write_file_atomic(report_path, report.str());
    if (!cfg.nu_csv.empty()) export_csv_field(mesh, "nu", cfg.nu_csv);

    for (const auto& m : metrics) out << (m.pass ? "PASS " : "FAIL ") << m.name << ": " << sci(m.value) << "\n";
    out << "wrote " << cfg.out << " and " << report_path << "\n";
    if (!all_pass(metrics)) {
        err << "verification threshold breached\n";
        return kVerification;
    }
    return kOk;
}

namespace {

// True when the given slots are mirror symmetric through the plane.
template <Scalar T>
bool given_symmetric(const BezierGrid<T>& grid, SymmetryPlane plane) {
    for (const auto& [i, j] : kGivenSlots) {
        if (grid.at(4 - i, j) != reflect(grid.at(i, j), plane)) return false;
    }
    return true;
}

}  // namespace

int cmd_complete_bezier(const CompleteConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output_dir(cfg.out, "--out");
    const std::string report_path = report_path_for(cfg.out, cfg.report);
    require_output_dir(report_path, "--report");
    const std::string text = read_file(cfg.input);

    std::string grid_json;
    bool oracle_equal = false;
    double oracle_gap = 0;
    std::vector<Metric> metrics;
    std::ostringstream sym_lines;
    bool prop_ok = true;

    auto symmetry_section = [&](const auto& input, const auto& completed) {
        for (SymmetryPlane plane : {SymmetryPlane::Oxy, SymmetryPlane::Oxz, SymmetryPlane::Oyz}) {
            const bool in_sym = given_symmetric(input, plane);
            const auto s = check_symmetry(completed, plane);
            if (in_sym && !s.symmetric) prop_ok = false;
            sym_lines << "| " << to_string(plane) << " | " << (in_sym ? "yes" : "no") << " | "
                      << (s.symmetric ? "yes" : "no") << " | " << sci(s.max_defect) << " |\n";
        }
    };

    if (cfg.backend == Backend::Rational) {
        const auto input = grid_from_json<Rational>(text);
        const auto completed = complete_harmonic(input.given());
        const auto oracle = harmonic_oracle(input.given());
        oracle_equal = completed == oracle;
        grid_json = grid_to_json(completed);
        symmetry_section(input, completed);
    } else {
        const auto input = grid_from_json<double>(text);
        const auto completed = complete_harmonic(input.given());
        const auto oracle = cast_grid<double>(harmonic_oracle(cast_grid<Rational>(input).given()));
        double scale = 1;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                oracle_gap = std::max(oracle_gap, max_abs(completed.at(i, j) - oracle.at(i, j)));
                scale = std::max(scale, max_abs(oracle.at(i, j)));
            }
        oracle_equal = oracle_gap <= th::kBezierFloat * scale;
        grid_json = grid_to_json(completed);
        symmetry_section(input, completed);
    }

    std::ostringstream report;
    report << "# minsurf complete-bezier\n\nInput: " << cfg.input << "\n\nBackend: "
           << (cfg.backend == Backend::Rational ? "rational" : "float") << "\n\n"
           << "Oracle equality: " << (oracle_equal ? "PASS" : "FAIL")
           << (cfg.backend == Backend::Rational ? " (exact)" : " (max gap " + sci(oracle_gap) + ")") << "\n\n"
           << "| Plane | Input symmetric | Completed symmetric | Max defect |\n|---|---|---|---|\n"
           << sym_lines.str() << "\nSymmetric inputs give symmetric nets: " << (prop_ok ? "PASS" : "FAIL") << "\n";

    write_file_atomic(cfg.out, grid_json + "\n");
    write_file_atomic(report_path, report.str());
    out << (oracle_equal ? "PASS" : "FAIL") << " oracle equality\n"
        << (prop_ok ? "PASS" : "FAIL") << " symmetry preservation\n"
        << "wrote " << cfg.out << " and " << report_path << "\n";
    if (!oracle_equal || !prop_ok) {
        err << "verification failed\n";
        return kVerification;
    }
    return kOk;
}

int cmd_canonical(const CanonicalConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.offset && (cfg.A || cfg.C)) throw DegenerateInputError("--offset cannot be combined with --A/--C");
    const cplx A = cfg.A ? parse_complex(*cfg.A, "--A") : cplx(1.0);
    const cplx C = cfg.C ? parse_complex(*cfg.C, "--C") : cplx(1.0);
    if (std::abs(A) == 0.0) throw DegenerateInputError("--A must be nonzero");
    if (std::abs(C) == 0.0) throw DegenerateInputError("--C must be nonzero");
    const BranchSpec default_branch;
    if (!(cfg.r0 >= default_branch.excluded_radius) || !(cfg.r1 > cfg.r0)) {
        throw DegenerateInputError("--annulus needs " + format_double(default_branch.excluded_radius) +
                                   " <= r0 < r1");
    }
    if (cfg.radial < 1 || cfg.angular < 1) throw DegenerateInputError("sample counts must be positive");
    require_output_dir(cfg.out, "--out");

    const auto sub = canonical_substitution(A, C);
    NuField nu;
    if (cfg.offset) {
        const auto [a, b] = *cfg.offset;
        nu = [a, b](double u, double v) { return canonical_nu_offset_closed(a, b, u, v); };
    } else {
        const auto f = ComplexPoly<double>::monomial(1, Complex<double>::from_std(A));
        const auto g = ComplexPoly<double>::monomial(1, Complex<double>::from_std(C));
        nu = [sub, f, g](double u, double v) { return canonical_nu(sub, f, g, cplx(u, v)); };
    }

    const double h = th::kPdeStep;
    const auto samples = annulus_grid(cfg.r0, cfg.r1, cfg.radial, cfg.angular, sub.branch(), 2.0 * h);
    std::string csv = "u,v,nu,pde_defect\n";
    double max_defect = 0, max_residual = 0;
    for (const auto& p : samples) {
        const double d = ganchev_pde_defect(nu, p.u, p.v, h);
        max_defect = std::max(max_defect, d);
        max_residual = std::max(max_residual, sub.residual(cplx(p.u, p.v)));
        csv += format_double(p.u) + ',' + format_double(p.v) + ',' + format_double(nu(p.u, p.v)) + ',' +
               format_double(d) + '\n';
    }
    write_file_atomic(cfg.out, csv);

    const bool pde_ok = max_defect < th::kGanchevPde;
    const bool res_ok = max_residual < th::kSubstitutionResidual;
    out << (pde_ok ? "PASS" : "FAIL") << " max Ganchev PDE defect " << sci(max_defect) << " (threshold "
        << sci(th::kGanchevPde) << ", h = " << sci(h) << ")\n"
        << (res_ok ? "PASS" : "FAIL") << " max parameter-change residual " << sci(max_residual) << " (threshold "
        << sci(th::kSubstitutionResidual) << ")\n"
        << samples.size() << " points in " << format_double(cfg.r0) << " <= |w| <= " << format_double(cfg.r1)
        << "; wrote " << cfg.out << "\n";
    if (!pde_ok || !res_ok) {
        err << "verification threshold breached\n";
        return kVerification;
    }
    return kOk;
}

int cmd_verify_paper(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output_dir(cfg.report, "--report");
    VerifyOptions opt;
    opt.seed = resolve_seed(cfg.seed);
    const VerifyReport report = run_acceptance(opt);
    for (const auto& r : report.results) {
        out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << "\n";
    }
    write_file_atomic(cfg.report, render_report(report));
    out << report.passed_count() << "/" << report.results.size() << " criteria passed; wrote " << cfg.report << "\n";
    if (!report.all_passed()) {
        err << "acceptance failures\n";
        return kVerification;
    }
    return kOk;
}

}  // namespace minsurf::cli
