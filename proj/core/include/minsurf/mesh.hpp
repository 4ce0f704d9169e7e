#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minsurf/geometry.hpp"

namespace minsurf {

struct ParamDomain {
    double u0 = -1, u1 = 1, v0 = -1, v1 = 1;
};

/// Row-major grid of surface samples; quads connect neighbouring samples.
struct SurfaceMesh {
    int rows = 0;
    int cols = 0;
    ParamDomain domain;
    std::vector<SamplePoint> params;
    std::vector<Vec3d> vertices;
    /// Optional per-vertex fields (nu, K, H, ...); ordered by name for stable output.
    std::map<std::string, std::vector<double>> scalars;
    /// Number of times the domain was shrunk because the evaluator failed.
    int shrink_steps = 0;
    std::string note;

    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c); }
};

using PointEvaluator = std::function<Vec3d(double, double)>;
using ScalarField = std::function<double(double, double)>;

/// Samples evaluator on a rows x cols grid (rows along u). If the evaluator
/// throws minsurf::Error or returns a non-finite point, the domain is shrunk by
/// 10% about its centre and sampling restarts, at most `max_shrink` times; the
/// mesh records what happened. Throws DegenerateInputError for rows or cols < 2.
SurfaceMesh sample_chart(const PointEvaluator& evaluator, const ParamDomain& domain, int rows, int cols,
                         int max_shrink = 10);

/// Evaluates a field at every vertex parameter; points where it throws get NaN.
void attach_scalar(SurfaceMesh& mesh, const std::string& name, const ScalarField& field);

std::string obj_string(const SurfaceMesh& mesh);
/// CSV with header u,v,value. Throws Error when the field is missing.
std::string csv_field_string(const SurfaceMesh& mesh, const std::string& scalar);

void export_obj(const SurfaceMesh& mesh, const std::string& path);
void export_csv_field(const SurfaceMesh& mesh, const std::string& scalar, const std::string& path);

struct ObjData {
    std::vector<Vec3d> vertices;
    std::vector<std::array<int, 4>> faces;  // 1-based
};

ObjData read_obj(const std::string& path);
ObjData parse_obj(const std::string& text);

struct CsvRow {
    double u = 0, v = 0, value = 0;
};

std::vector<CsvRow> parse_csv_field(const std::string& text);
std::vector<CsvRow> read_csv_field(const std::string& path);

/// printf "%.17g": 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

/// Writes to a temporary sibling file and renames it over `path`. Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace minsurf
