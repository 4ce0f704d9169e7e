#pragma once

// Numerical thresholds shared by the library, the CLI and the acceptance suite.

namespace minsurf::thresholds {

inline constexpr double kPolyZero = 1e-14;          // float polynomial normalization
inline constexpr double kIsotropy = 1e-12;          // (Psi')^2 coefficients, float backend
inline constexpr double kRegularity = 1e-12;        // |x_u x x_v| below this is singular
inline constexpr double kIsothermal = 1e-9;         // max |E - G|, |F| on samples
inline constexpr double kMeanCurvature = 1e-9;      // max |H| on samples
inline constexpr double kFirstFormRel = 1e-10;      // E vs closed form, relative
inline constexpr double kNormalCurvatureRel = 1e-9; // sqrt(-K) vs closed form, relative
inline constexpr double kDivisionRemainder = 1e-10; // float remainder norm in g = phi3 / f
inline constexpr double kDegenerateJacobian = 1e-12;
inline constexpr double kAffineNonIsothermal = 1e-6;

inline constexpr double kSubstitutionResidual = 1e-8; // (z')^2 + 1/(f g')
inline constexpr double kGanchevPde = 1e-4;            // |lap ln nu + 2 nu| at h = 1e-3
inline constexpr double kPdeStep = 1e-3;
inline constexpr double kCanonicalFirstForm = 1e-6;    // E nu - 1, F, G nu - 1
inline constexpr double kCanonicalSecondForm = 1e-5;   // (L, M, N) - (1, 0, -1)
inline constexpr double kHomothetyRel = 1e-10;
inline constexpr double kDistinctNu = 1e-6;

inline constexpr double kBezierFloat = 1e-10;          // float completion vs oracle

inline constexpr double kBranchRadius = 0.05;          // excluded disk around w = 0
inline constexpr double kAnnulusOuter = 2.0;
inline constexpr double kSubstitutionAnnulusInner = 0.1;
inline constexpr double kPdeAnnulusInner = 0.5;

inline constexpr double kQuadratureTol = 1e-10;

}  // namespace minsurf::thresholds
