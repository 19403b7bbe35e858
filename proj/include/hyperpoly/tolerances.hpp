#pragma once

namespace hyperpoly {

/// Numerical tolerances shared by every predicate in the library.
///
/// Predicates take a Tolerances record explicitly; nothing downstream
/// hardcodes a threshold.
struct Tolerances {
  double eps_norm = 1e-10;      ///< hyperboloid / unit-norm constraint
  double eps_side = 1e-9;       ///< side-of-geodesic deadband
  double eps_sep = 1e-12;       ///< minimum distance between distinct points
  double eps_id = 1e-7;         ///< identity checks (on-circle, tie, cusp boundary)
  double eps_boundary = 1e-9;   ///< distance of Poincare input from the ideal boundary
  double eps_class = 1e-12;     ///< relative causal-character threshold for cycles
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace hyperpoly
