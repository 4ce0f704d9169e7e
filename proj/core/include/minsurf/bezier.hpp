#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minsurf/chart.hpp"
#include "minsurf/complex_poly.hpp"

namespace minsurf {

// Control-net layout used throughout (i = u index, j = v index):
//
//        j=0   j=1   j=2   j=3   j=4
//   i=0   G     .     .     .     G
//   i=1   G     .     .     .     G
//   i=2   G     .     .     .     .
//   i=3   G     .     .     .     G
//   i=4   G     .     .     .     G
//
// G marks the nine given slots; the sixteen dots are completed.

inline constexpr std::string_view kGivenMaskId = "monterde-variant-fig2";

/// Given slots in the fixed order b00, b04, b10, b14, b20, b30, b34, b40, b44.
inline constexpr std::array<std::pair<int, int>, 9> kGivenSlots = {{
    {0, 0}, {0, 4}, {1, 0}, {1, 4}, {2, 0}, {3, 0}, {3, 4}, {4, 0}, {4, 4},
}};

bool is_given_slot(int i, int j);

template <Scalar T>
using GivenPoints = std::array<Vec3<T>, 9>;

/// 5x5 net of a bi-quartic tensor-product Bezier surface.
template <Scalar T>
class BezierGrid {
public:
    BezierGrid() = default;

    const Vec3<T>& at(int i, int j) const { return pts_[idx(i)][idx(j)]; }
    Vec3<T>& at(int i, int j) { return pts_[idx(i)][idx(j)]; }

    GivenPoints<T> given() const;
    /// Net holding `given` in the given slots and zeros elsewhere.
    static BezierGrid from_given(const GivenPoints<T>& given);

    friend bool operator==(const BezierGrid& a, const BezierGrid& b) { return a.pts_ == b.pts_; }

private:
    static std::size_t idx(int k);
    std::array<std::array<Vec3<T>, 5>, 5> pts_{};
};

template <Scalar To, Scalar From>
BezierGrid<To> cast_grid(const BezierGrid<From>& grid);

/// C(4, i) u^i (1 - u)^(4 - i), and 0 for i outside 0..4.
template <Scalar T>
T bernstein(int i, const T& u);

template <Scalar T>
Vec3<T> eval_bezier(const BezierGrid<T>& grid, const T& u, const T& v);

/// Linear completion rule: each of the sixteen free points is a rational
/// combination of the nine given points (in kGivenSlots order).
struct CompletionRow {
    int i = 0, j = 0;
    std::array<Rational, 9> weights;
};

using CompletionTable = std::array<CompletionRow, 16>;

/// Closed-form completion of harmonic bi-quartic nets.
const CompletionTable& harmonic_completion_table();

/// Applies a completion table to the nine given points.
template <Scalar T>
BezierGrid<T> complete_harmonic(const GivenPoints<T>& given,
                                const CompletionTable& table = harmonic_completion_table());

/// Independent completion: imposes Delta x = 0 on the monomial expansion of the
/// net and solves for the sixteen free points by exact elimination. Throws
/// Error if the system is singular or inconsistent.
BezierGrid<Rational> harmonic_oracle(const GivenPoints<Rational>& given);

enum class SymmetryPlane { Oxy, Oxz, Oyz };

std::string_view to_string(SymmetryPlane plane);
/// Accepts "Oxy", "Oxz", "Oyz" (case-insensitive).
SymmetryPlane parse_symmetry_plane(std::string_view text);

/// Coordinate negated by the reflection: z for Oxy, y for Oxz, x for Oyz.
int reflected_coordinate(SymmetryPlane plane);

template <Scalar T>
Vec3<T> reflect(const Vec3<T>& p, SymmetryPlane plane);

struct SymmetryCheck {
    bool symmetric = false;
    double max_defect = 0;
};

/// Rows i and 4 - i must be mirror images through the plane (so row 2 lies in
/// it). Exact on rationals; 1e-10 on floats.
template <Scalar T>
SymmetryCheck check_symmetry(const BezierGrid<T>& grid, SymmetryPlane plane);

/// (grid + mirror(grid)) / 2, with mirror reflecting every point and swapping rows i and 4 - i.
template <Scalar T>
BezierGrid<T> symmetrize(const BezierGrid<T>& grid, SymmetryPlane plane);

template <Scalar T>
struct ParamRect {
    T u0{0}, u1{1}, v0{0}, v1{1};
};

/// Bezier net of chart restricted to the rectangle, reparametrized over [0,1]^2.
/// Throws DegenerateInputError when a degree exceeds 4 or the rectangle is empty.
template <Scalar T>
BezierGrid<T> monomial_to_bezier(const VectorChart<T>& chart, const ParamRect<T>& domain = {});

/// Monomial chart in the [0,1]^2 Bezier parameters.
template <Scalar T>
VectorChart<T> bezier_to_monomial(const BezierGrid<T>& grid);

/// Harmonic net of the f = z, g = z - 1 surface, symmetric about Oxz.
BezierGrid<Rational> reference_harmonic_net();

/// Affine parameter map Z = alpha s + beta (or alpha conj(s) + beta) from the
/// Bezier parameters s = u + iv to the z plane of a generating pair.
struct DomainMatch {
    std::complex<double> alpha;
    std::complex<double> beta;
    bool conjugate = false;
    double max_rel_defect = 0;
};

/// Searches alpha in {scale i^k}, beta on a half-integer lattice, optional
/// conjugation, for a map under which the net's first form equals
/// |alpha|^2 E_(f,g)(Z) at interior sample points. Returns the best candidate
/// with defect below `tolerance`, or nothing.
std::optional<DomainMatch> search_parent_domain(const BezierGrid<Rational>& grid, const ComplexPoly<double>& f,
                                                const ComplexPoly<double>& g,
                                                std::span<const double> scales = {},
                                                double beta_extent = 8.0, double tolerance = 1e-9);

/// {"points": 5x5 [x,y,z], "given_mask": "monterde-variant-fig2"}; rationals as "p/q" strings.
template <Scalar T>
std::string grid_to_json(const BezierGrid<T>& grid);

/// Entries may be numbers or rational strings; non-given slots may be null
/// (read as zero). Throws FormatError on malformed input.
template <Scalar T>
BezierGrid<T> grid_from_json(const std::string& text);

}  // namespace minsurf
