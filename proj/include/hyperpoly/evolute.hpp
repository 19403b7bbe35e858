#pragma once

#include <cstddef>
#include <vector>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

/// Closed polygonal curve through the circumcenters O_i, indexed like P.
/// May self-intersect.
struct Evolute {
  std::vector<HPoint> centers;
  std::vector<double> left_angles;  ///< left_angle(O_{i-1}, O_i, O_{i+1})
  std::vector<bool> cusp;
  std::vector<double> gap;          ///< signed angle difference O_i minus V_i

  std::size_t size() const { return centers.size(); }
};

/// Throws ConstructionError if some consecutive triple of P has no
/// circumcircle, consecutive centers coincide, or an evolute angle is
/// undefined. Also throws whatever detect_cusps throws.
Evolute build_evolute(const HPolygon& p);

/// cusp[i] iff |angle(O_i) - angle(V_i)| > pi. Throws DegenerateError if a
/// difference lies within eps_id of pi.
std::vector<bool> detect_cusps(const HPolygon& p, const Evolute& e);

struct Theorem3Report {
  bool asserted = false;               ///< false for non-convex input (exploratory only)
  std::vector<std::size_t> mismatches; ///< indices where extremal != cusp
  bool pass() const { return mismatches.empty(); }
};

/// Compares extremality from the curvature graph with cusps of the evolute.
Theorem3Report theorem3_check(const HPolygon& p);
Theorem3Report theorem3_check(const HPolygon& p, const CurvatureGraph& g, const Evolute& e);

}  // namespace hyperpoly
