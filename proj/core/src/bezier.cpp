#include "minsurf/bezier.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "json_scalar.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/thresholds.hpp"

namespace minsurf {

namespace {

constexpr std::array<int, 5> kBinom4 = {1, 4, 6, 4, 1};

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
    return r;
}

// Coefficient of u^k in B_i^4(u).
long bernstein_power(int i, int k) {
    if (k < i || k > 4) return 0;
    const long sign = ((k - i) % 2 == 0) ? 1 : -1;
    return sign * kBinom4[static_cast<std::size_t>(i)] * binom(4 - i, k - i);
}

template <Scalar T>
T scalar_from_rational(const Rational& r) {
    if constexpr (ScalarTraits<T>::exact) {
        return r;
    } else {
        return to_double(r);
    }
}

CompletionRow row(int i, int j, std::array<int, 9> numerators, int denominator) {
    CompletionRow r;
    r.i = i;
    r.j = j;
    for (std::size_t k = 0; k < 9; ++k) r.weights[k] = Rational(numerators[k], denominator);
    return r;
}

}  // namespace

bool is_given_slot(int i, int j) {
    return std::any_of(kGivenSlots.begin(), kGivenSlots.end(),
                       [&](const auto& s) { return s.first == i && s.second == j; });
}

// ---- grid -----------------------------------------------------------------

template <Scalar T>
std::size_t BezierGrid<T>::idx(int k) {
    if (k < 0 || k > 4) throw std::out_of_range("control point index out of range 0..4");
    return static_cast<std::size_t>(k);
}

template <Scalar T>
GivenPoints<T> BezierGrid<T>::given() const {
    GivenPoints<T> out;
    for (std::size_t k = 0; k < kGivenSlots.size(); ++k) out[k] = at(kGivenSlots[k].first, kGivenSlots[k].second);
    return out;
}

template <Scalar T>
BezierGrid<T> BezierGrid<T>::from_given(const GivenPoints<T>& given) {
    BezierGrid g;
    for (std::size_t k = 0; k < kGivenSlots.size(); ++k) g.at(kGivenSlots[k].first, kGivenSlots[k].second) = given[k];
    return g;
}

template <Scalar To, Scalar From>
BezierGrid<To> cast_grid(const BezierGrid<From>& grid) {
    BezierGrid<To> out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out.at(i, j) = cast_vec<To>(grid.at(i, j));
    return out;
}

template <Scalar T>
T bernstein(int i, const T& u) {
    if (i < 0 || i > 4) return T(0);
    T out(kBinom4[static_cast<std::size_t>(i)]);
    const T w = T(1) - u;
    for (int k = 0; k < i; ++k) out *= u;
    for (int k = i; k < 4; ++k) out *= w;
    return out;
}

template <Scalar T>
Vec3<T> eval_bezier(const BezierGrid<T>& grid, const T& u, const T& v) {
    std::array<T, 5> bu, bv;
    for (int k = 0; k < 5; ++k) {
        bu[static_cast<std::size_t>(k)] = bernstein(k, u);
        bv[static_cast<std::size_t>(k)] = bernstein(k, v);
    }
    Vec3<T> out(T(0), T(0), T(0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            out += grid.at(i, j) * (bu[static_cast<std::size_t>(i)] * bv[static_cast<std::size_t>(j)]);
    return out;
}

// ---- completion -----------------------------------------------------------

const CompletionTable& harmonic_completion_table() {
    // Columns: b00, b04, b10, b14, b20, b30, b34, b40, b44.
    static const CompletionTable table = {
        row(0, 1, {25, 8, -40, -8, 36, -16, 4, 4, -1}, 12),
        row(4, 1, {4, -1, -16, 4, 36, -40, -8, 25, 8}, 12),
        row(1, 1, {17, 7, -14, -4, 18, -8, 2, 5, 1}, 24),
        row(3, 1, {5, 1, -8, 2, 18, -14, -4, 17, 7}, 24),
        row(0, 2, {13, 8, -28, -8, 30, -16, 4, 4, -1}, 6),
        row(4, 2, {4, -1, -16, 4, 30, -28, -8, 13, 8}, 6),
        row(1, 2, {11, 7, -20, -4, 24, -14, 2, 5, 1}, 12),
        row(3, 2, {5, 1, -14, 2, 24, -20, -4, 11, 7}, 12),
        row(0, 3, {14, 19, -32, -16, 36, -20, 8, 5, -2}, 12),
        row(4, 3, {5, -2, -20, 8, 36, -32, -16, 14, 19}, 12),
        row(1, 3, {5, 7, -8, -1, 9, -5, 2, 2, 1}, 12),
        // The b14 weight is +2/12; the mirror image of the b13 row under
        // i -> 4 - i forces it, as does the unit row sum.
        row(3, 3, {2, 1, -5, 2, 9, -8, -1, 5, 7}, 12),
        row(2, 1, {3, 1, -4, 0, 8, -4, 0, 3, 1}, 8),
        row(2, 2, {7, 3, -16, 0, 24, -16, 0, 7, 3}, 12),
        row(2, 3, {7, 5, -16, 4, 24, -16, 4, 7, 5}, 24),
        row(2, 4, {1, -1, -4, 4, 6, -4, 4, 1, -1}, 6),
    };
    return table;
}

template <Scalar T>
BezierGrid<T> complete_harmonic(const GivenPoints<T>& given, const CompletionTable& table) {
    BezierGrid<T> out = BezierGrid<T>::from_given(given);
    for (const CompletionRow& r : table) {
        Vec3<T> p(T(0), T(0), T(0));
        for (std::size_t k = 0; k < 9; ++k) p += given[k] * scalar_from_rational<T>(r.weights[k]);
        out.at(r.i, r.j) = p;
    }
    return out;
}

BezierGrid<Rational> harmonic_oracle(const GivenPoints<Rational>& given) {
    // Monomial coefficients of B_i and B_i''.
    std::array<std::array<Rational, 5>, 5> c{}, c2{};
    for (int i = 0; i < 5; ++i) {
        for (int k = 0; k < 5; ++k) c[i][k] = Rational(bernstein_power(i, k));
        for (int k = 0; k + 2 < 5; ++k) c2[i][k] = Rational(bernstein_power(i, k + 2) * (k + 2) * (k + 1));
    }
    // Coefficient of u^p v^q in Delta(B_i(u) B_j(v)).
    auto lap = [&](int i, int j, int p, int q) { return c2[i][p] * c[j][q] + c[i][p] * c2[j][q]; };

    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!is_given_slot(i, j)) unknowns.emplace_back(i, j);
    const std::size_t n = unknowns.size();  // 16

    // Augmented system: one row per monomial u^p v^q, n unknowns, 3 right-hand sides.
    std::vector<std::vector<Rational>> m;
    for (int p = 0; p < 5; ++p) {
        for (int q = 0; q < 5; ++q) {
            std::vector<Rational> eq(n + 3);
            for (std::size_t k = 0; k < n; ++k) eq[k] = lap(unknowns[k].first, unknowns[k].second, p, q);
            for (std::size_t s = 0; s < kGivenSlots.size(); ++s) {
                const Rational w = lap(kGivenSlots[s].first, kGivenSlots[s].second, p, q);
                if (w == 0) continue;
                for (int d = 0; d < 3; ++d) eq[n + d] -= w * given[s][d];
            }
            m.push_back(std::move(eq));
        }
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) throw Error("harmonic completion system is singular");
        std::swap(m[piv], m[rank]);
        const Rational inv = 1 / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t k = col; k < n + 3; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < m.size(); ++r)
        for (int d = 0; d < 3; ++d)
            if (m[r][n + d] != 0) throw Error("harmonic completion system is inconsistent");

    BezierGrid<Rational> out = BezierGrid<Rational>::from_given(given);
    for (std::size_t k = 0; k < n; ++k)
        out.at(unknowns[k].first, unknowns[k].second) = {m[k][n], m[k][n + 1], m[k][n + 2]};
    return out;
}

// ---- symmetry -------------------------------------------------------------

std::string_view to_string(SymmetryPlane plane) {
    switch (plane) {
        case SymmetryPlane::Oxy: return "Oxy";
        case SymmetryPlane::Oxz: return "Oxz";
        case SymmetryPlane::Oyz: return "Oyz";
    }
    return "?";
}

SymmetryPlane parse_symmetry_plane(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "oxy") return SymmetryPlane::Oxy;
    if (lower == "oxz") return SymmetryPlane::Oxz;
    if (lower == "oyz") return SymmetryPlane::Oyz;
    throw FormatError("unknown symmetry plane '" + std::string(text) + "' (expected Oxy, Oxz or Oyz)");
}

int reflected_coordinate(SymmetryPlane plane) {
    switch (plane) {
        case SymmetryPlane::Oxy: return 2;
        case SymmetryPlane::Oxz: return 1;
        case SymmetryPlane::Oyz: return 0;
    }
    return 2;
}

template <Scalar T>
Vec3<T> reflect(const Vec3<T>& p, SymmetryPlane plane) {
    Vec3<T> out = p;
    const auto k = static_cast<std::size_t>(reflected_coordinate(plane));
    out[k] = -out[k];
    return out;
}

template <Scalar T>
SymmetryCheck check_symmetry(const BezierGrid<T>& grid, SymmetryPlane plane) {
    SymmetryCheck out;
    bool exact_match = true;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Vec3<T> d = grid.at(4 - i, j) - reflect(grid.at(i, j), plane);
            for (int k = 0; k < 3; ++k) {
                exact_match = exact_match && d[k] == T(0);
                out.max_defect = std::max(out.max_defect, std::abs(ScalarTraits<T>::to_double(d[k])));
            }
        }
    }
    if constexpr (ScalarTraits<T>::exact) {
        out.symmetric = exact_match;
    } else {
        out.symmetric = out.max_defect <= thresholds::kBezierFloat;
    }
    return out;
}

template <Scalar T>
BezierGrid<T> symmetrize(const BezierGrid<T>& grid, SymmetryPlane plane) {
    BezierGrid<T> out;
    const T half = T(1) / T(2);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out.at(i, j) = (grid.at(i, j) + reflect(grid.at(4 - i, j), plane)) * half;
    return out;
}

// ---- basis change ---------------------------------------------------------

template <Scalar T>
BezierGrid<T> monomial_to_bezier(const VectorChart<T>& chart, const ParamRect<T>& domain) {
    if (chart.degree_u() > 4 || chart.degree_v() > 4) {
        throw DegenerateInputError("chart degree exceeds 4; no bi-quartic Bezier form");
    }
    const T su = domain.u1 - domain.u0;
    const T sv = domain.v1 - domain.v0;
    if (ScalarTraits<T>::is_zero(su) || ScalarTraits<T>::is_zero(sv)) {
        throw DegenerateInputError("empty parameter rectangle");
    }
    const VectorChart<T> local = chart.remap(domain.u0, su, domain.v0, sv);
    // b_ij = sum_{k<=i, l<=j} C(i,k)/C(4,k) C(j,l)/C(4,l) a_kl
    BezierGrid<T> out;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            Vec3<T> b(T(0), T(0), T(0));
            for (int k = 0; k <= i; ++k) {
                for (int l = 0; l <= j; ++l) {
                    const Rational w(binom(i, k) * binom(j, l), kBinom4[static_cast<std::size_t>(k)] *
                                                                    kBinom4[static_cast<std::size_t>(l)]);
                    b += local.coeff(k, l) * scalar_from_rational<T>(w);
                }
            }
            out.at(i, j) = b;
        }
    }
    return out;
}

template <Scalar T>
VectorChart<T> bezier_to_monomial(const BezierGrid<T>& grid) {
    VectorChart<T> out;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            for (int k = i; k < 5; ++k) {
                for (int l = j; l < 5; ++l) {
                    const T w(bernstein_power(i, k) * bernstein_power(j, l));
                    out.add_coeff(k, l, grid.at(i, j) * w);
                }
            }
        }
    }
    return out;
}

// ---- reference net --------------------------------------------------------

BezierGrid<Rational> reference_harmonic_net() {
    // Entries times 3.
    static const std::array<std::array<std::array<int, 3>, 5>, 5> thirds = {{
        {{{512, -176, 128}, {128, 424, 152}, {-384, 128, 32}, {-128, -296, -104}, {256, -80, -128}}},
        {{{-64, -536, -88}, {224, -44, 32}, {0, 0, 8}, {160, -20, -32}, {64, 280, 40}}},
        {{{-512, 0, -160}, {0, 0, -8}, {-128, 0, 0}, {0, 0, -8}, {-256, 0, 96}}},
        {{{-64, 536, -88}, {224, 44, 32}, {0, 0, 8}, {160, 20, -32}, {64, -280, 40}}},
        {{{512, 176, 128}, {128, -424, 152}, {-384, -128, 32}, {-128, 296, -104}, {256, 80, -128}}},
    }};
    BezierGrid<Rational> g;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const auto& e = thirds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            g.at(i, j) = {Rational(e[0], 3), Rational(e[1], 3), Rational(e[2], 3)};
        }
    return g;
}

std::optional<DomainMatch> search_parent_domain(const BezierGrid<Rational>& grid, const ComplexPoly<double>& f,
                                                const ComplexPoly<double>& g, std::span<const double> scales,
                                                double beta_extent, double tolerance) {
    using cd = std::complex<double>;
    static const std::array<double, 5> kDefaultScales = {1, 2, 4, 8, 16};
    if (scales.empty()) scales = kDefaultScales;

    const VectorChart<double> chart = cast_chart<double>(bezier_to_monomial(grid));
    const VectorChart<double> xu = chart.du();
    std::vector<std::pair<cd, double>> samples;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double u = 0.125 + 0.25 * a;
            const double v = 0.125 + 0.25 * b;
            const Vec3d d = xu.eval(u, v);
            samples.emplace_back(cd(u, v), dot(d, d));
        }

    std::optional<DomainMatch> best;
    const int steps = static_cast<int>(std::floor(2.0 * beta_extent));
    for (double scale : scales) {
        for (int k = 0; k < 4; ++k) {
            const cd alpha = scale * std::pow(cd(0, 1), k);
            for (bool conj : {false, true}) {
                for (int bi = -steps; bi <= steps; ++bi) {
                    for (int bj = -steps; bj <= steps; ++bj) {
                        const cd beta(0.5 * bi, 0.5 * bj);
                        double worst = 0.0;
                        for (const auto& [s, e_net] : samples) {
                            const cd z = alpha * (conj ? std::conj(s) : s) + beta;
                            const FirstForm ff = first_form_closed(f, g, z.real(), z.imag());
                            const double predicted = std::norm(alpha) * ff.E;
                            worst = std::max(worst, std::abs(e_net - predicted) / std::max(std::abs(e_net), 1e-300));
                            if (best && worst >= best->max_rel_defect) break;
                        }
                        if (worst <= tolerance && (!best || worst < best->max_rel_defect)) {
                            best = DomainMatch{alpha, beta, conj, worst};
                        }
                    }
                }
            }
        }
    }
    return best;
}

// ---- JSON -----------------------------------------------------------------

template <Scalar T>
std::string grid_to_json(const BezierGrid<T>& grid) {
    nlohmann::json points = nlohmann::json::array();
    for (int i = 0; i < 5; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (int j = 0; j < 5; ++j) {
            const Vec3<T>& p = grid.at(i, j);
            r.push_back({scalar_to_json(p[0]), scalar_to_json(p[1]), scalar_to_json(p[2])});
        }
        points.push_back(std::move(r));
    }
    nlohmann::ordered_json out;
    out["points"] = std::move(points);
    out["given_mask"] = std::string(kGivenMaskId);
    return out.dump(2);
}

template <Scalar T>
BezierGrid<T> grid_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("grid JSON does not parse: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("grid JSON must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "points" && key != "given_mask") throw FormatError("unknown grid field '" + key + "'");
    }
    if (doc.contains("given_mask")) {
        if (!doc["given_mask"].is_string() || doc["given_mask"].get<std::string>() != kGivenMaskId) {
            throw FormatError("unsupported given_mask; expected \"" + std::string(kGivenMaskId) + "\"");
        }
    }
    if (!doc.contains("points")) throw FormatError("grid JSON lacks \"points\"");
    const auto& pts = doc["points"];
    if (!pts.is_array() || pts.size() != 5) throw FormatError("\"points\" must be a 5x5 array");
    BezierGrid<T> grid;
    for (int i = 0; i < 5; ++i) {
        const auto& r = pts[static_cast<std::size_t>(i)];
        if (!r.is_array() || r.size() != 5) throw FormatError("\"points\" must be a 5x5 array");
        for (int j = 0; j < 5; ++j) {
            const auto& p = r[static_cast<std::size_t>(j)];
            const std::string slot = "b" + std::to_string(i) + std::to_string(j);
            if (p.is_null()) {
                if (is_given_slot(i, j)) throw FormatError("given slot " + slot + " is null");
                continue;
            }
            if (!p.is_array() || p.size() != 3) throw FormatError("control point " + slot + " must be [x, y, z]");
            try {
                grid.at(i, j) = {json_to_scalar<T>(p[0]), json_to_scalar<T>(p[1]), json_to_scalar<T>(p[2])};
            } catch (const Error& e) {
                throw FormatError("control point " + slot + ": " + e.what());
            }
        }
    }
    return grid;
}

#define MINSURF_INSTANTIATE(T)                                                                        \
    template class BezierGrid<T>;                                                                     \
    template T bernstein<T>(int, const T&);                                                           \
    template Vec3<T> eval_bezier<T>(const BezierGrid<T>&, const T&, const T&);                        \
    template BezierGrid<T> complete_harmonic<T>(const GivenPoints<T>&, const CompletionTable&);       \
    template Vec3<T> reflect<T>(const Vec3<T>&, SymmetryPlane);                                       \
    template SymmetryCheck check_symmetry<T>(const BezierGrid<T>&, SymmetryPlane);                    \
    template BezierGrid<T> symmetrize<T>(const BezierGrid<T>&, SymmetryPlane);                        \
    template BezierGrid<T> monomial_to_bezier<T>(const VectorChart<T>&, const ParamRect<T>&);         \
    template VectorChart<T> bezier_to_monomial<T>(const BezierGrid<T>&);                              \
    template std::string grid_to_json<T>(const BezierGrid<T>&);                                       \
    template BezierGrid<T> grid_from_json<T>(const std::string&);

MINSURF_INSTANTIATE(double)
MINSURF_INSTANTIATE(Rational)
#undef MINSURF_INSTANTIATE

template BezierGrid<double> cast_grid<double, Rational>(const BezierGrid<Rational>&);
template BezierGrid<Rational> cast_grid<Rational, double>(const BezierGrid<double>&);
template BezierGrid<double> cast_grid<double, double>(const BezierGrid<double>&);
template BezierGrid<Rational> cast_grid<Rational, Rational>(const BezierGrid<Rational>&);

}  // namespace minsurf
