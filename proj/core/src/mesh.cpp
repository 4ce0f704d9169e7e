#include "minsurf/mesh.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

bool finite(const Vec3d& p) { return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]); }

double parse_number(const std::string& token, const std::string& context) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || errno == ERANGE) {
        throw FormatError(context + ": cannot parse number '" + token + "'");
    }
    return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SurfaceMesh sample_chart(const PointEvaluator& evaluator, const ParamDomain& domain, int rows, int cols,
                         int max_shrink) {
    if (rows < 2 || cols < 2) throw DegenerateInputError("sample grid needs at least 2 x 2 points");
    ParamDomain d = domain;
    std::string last_failure;
    for (int attempt = 0; attempt <= max_shrink; ++attempt) {
        SurfaceMesh mesh;
        mesh.rows = rows;
        mesh.cols = cols;
        mesh.domain = d;
        mesh.shrink_steps = attempt;
        mesh.params.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
        mesh.vertices.reserve(mesh.params.capacity());
        bool ok = true;
        for (int r = 0; r < rows && ok; ++r) {
            const double u = d.u0 + (d.u1 - d.u0) * r / (rows - 1);
            for (int c = 0; c < cols; ++c) {
                const double v = d.v0 + (d.v1 - d.v0) * c / (cols - 1);
                try {
                    const Vec3d p = evaluator(u, v);
                    if (!finite(p)) throw Error("non-finite point");
                    mesh.params.push_back({u, v});
                    mesh.vertices.push_back(p);
                } catch (const Error& e) {
                    std::ostringstream os;
                    os << "evaluation failed at (" << format_double(u) << ", " << format_double(v)
                       << "): " << e.what();
                    last_failure = os.str();
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            if (attempt > 0) {
                std::ostringstream os;
                os << "domain shrunk " << attempt << " time(s) to [" << format_double(d.u0) << ", "
                   << format_double(d.u1) << "] x [" << format_double(d.v0) << ", " << format_double(d.v1)
                   << "]; first failure: " << last_failure;
                mesh.note = os.str();
            }
            return mesh;
        }
        const double cu = 0.5 * (d.u0 + d.u1), cv = 0.5 * (d.v0 + d.v1);
        d = {cu + 0.9 * (d.u0 - cu), cu + 0.9 * (d.u1 - cu), cv + 0.9 * (d.v0 - cv), cv + 0.9 * (d.v1 - cv)};
    }
    throw DegenerateInputError("sampling failed after shrinking the domain " + std::to_string(max_shrink) +
                               " times; " + last_failure);
}

void attach_scalar(SurfaceMesh& mesh, const std::string& name, const ScalarField& field) {
    std::vector<double> values;
    values.reserve(mesh.params.size());
    for (const auto& p : mesh.params) {
        try {
            values.push_back(field(p.u, p.v));
        } catch (const Error&) {
            values.push_back(std::nan(""));
        }
    }
    mesh.scalars[name] = std::move(values);
}

std::string obj_string(const SurfaceMesh& mesh) {
    if (mesh.vertices.size() != static_cast<std::size_t>(mesh.rows) * static_cast<std::size_t>(mesh.cols)) {
        throw Error("mesh vertex count does not match rows x cols");
    }
    std::string out;
    out.reserve(mesh.vertices.size() * 64);
    for (const auto& p : mesh.vertices) {
        out += "v " + format_double(p[0]) + ' ' + format_double(p[1]) + ' ' + format_double(p[2]) + '\n';
    }
    for (int r = 0; r + 1 < mesh.rows; ++r) {
        for (int c = 0; c + 1 < mesh.cols; ++c) {
            const std::size_t a = mesh.index(r, c) + 1, b = mesh.index(r + 1, c) + 1;
            const std::size_t cc = mesh.index(r + 1, c + 1) + 1, d = mesh.index(r, c + 1) + 1;
            out += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' + std::to_string(cc) + ' ' +
                   std::to_string(d) + '\n';
        }
    }
    return out;
}

std::string csv_field_string(const SurfaceMesh& mesh, const std::string& scalar) {
    const auto it = mesh.scalars.find(scalar);
    if (it == mesh.scalars.end()) throw Error("mesh has no scalar field '" + scalar + "'");
    std::string out = "u,v,value\n";
    for (std::size_t k = 0; k < mesh.params.size(); ++k) {
        out += format_double(mesh.params[k].u) + ',' + format_double(mesh.params[k].v) + ',' +
               format_double(it->second[k]) + '\n';
    }
    return out;
}

void export_obj(const SurfaceMesh& mesh, const std::string& path) { write_file_atomic(path, obj_string(mesh)); }

void export_csv_field(const SurfaceMesh& mesh, const std::string& scalar, const std::string& path) {
    write_file_atomic(path, csv_field_string(mesh, scalar));
}

ObjData parse_obj(const std::string& text) {
    ObjData out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string ctx = "OBJ line " + std::to_string(lineno);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tag == "v") {
            if (tok.size() != 3) throw FormatError(ctx + ": expected 3 coordinates");
            out.vertices.emplace_back(parse_number(tok[0], ctx), parse_number(tok[1], ctx), parse_number(tok[2], ctx));
        } else if (tag == "f") {
            if (tok.size() != 4) throw FormatError(ctx + ": expected a quad face");
            std::array<int, 4> f{};
            for (std::size_t k = 0; k < 4; ++k) {
                const double idx = parse_number(tok[k].substr(0, tok[k].find('/')), ctx);
                if (idx < 1 || idx != std::floor(idx)) throw FormatError(ctx + ": bad vertex index");
                f[k] = static_cast<int>(idx);
            }
            out.faces.push_back(f);
        } else {
            throw FormatError(ctx + ": unsupported record '" + tag + "'");
        }
    }
    for (const auto& f : out.faces)
        for (int idx : f)
            if (static_cast<std::size_t>(idx) > out.vertices.size()) throw FormatError("OBJ face index out of range");
    return out;
}

ObjData read_obj(const std::string& path) {
    try {
        return parse_obj(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::vector<CsvRow> parse_csv_field(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "u,v,value") throw FormatError("CSV header must be 'u,v,value'");
    std::vector<CsvRow> out;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string ctx = "CSV line " + std::to_string(lineno);
        const auto cells = split(line, ',');
        if (cells.size() != 3) throw FormatError(ctx + ": expected 3 columns");
        out.push_back({parse_number(cells[0], ctx), parse_number(cells[1], ctx), parse_number(cells[2], ctx)});
    }
    return out;
}

std::vector<CsvRow> read_csv_field(const std::string& path) {
    try {
        return parse_csv_field(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw IoError(path + ": output directory does not exist");
    const fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError(path + ": cannot open temporary file: " + std::strerror(errno));
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
        if (!os) {
            fs::remove(tmp, ec);
            throw IoError(path + ": write failed");
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        const std::string reason = ec.message();
        fs::remove(tmp, ec);
        throw IoError(path + ": rename failed: " + reason);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace minsurf
