#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/evolute.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

enum class DensitySource { Polygon, Evolute };

struct DensityValue {
  double value = 0.0;
  DensitySource source = DensitySource::Polygon;
};

/// (1 / 2pi) * sum(pi - angle_i) over left angles.
double density_from_angles(std::span<const double> left_angles);

DensityValue density(const HPolygon& p);
DensityValue density(const Evolute& e);

/// Area of a geodesic triangle: pi minus its angle sum.
double triangle_area(const HPoint& a, const HPoint& b, const HPoint& c,
                     const Tolerances& tol = kDefaultTolerances);

/// Area by fan triangulation from V_0. Throws ValidationError unless p is convex.
double polygon_area(const HPolygon& p);

/// Quadrilateral M_{i-1}, V_i, M_i, O_i where M_{i-1}, M_i are the midpoints
/// of the edges meeting at V_i and O_i is the circumcenter of C_i.
struct DefectRecord {
  std::size_t index = 0;
  double delta = 0.0;       ///< pi - angle(V_i) - alpha
  double alpha = 0.0;       ///< interior angle of the quadrilateral at O_i
  double quad_area = 0.0;   ///< sum of the two triangle defects across diagonal V_i O_i
  double angle_at_prev_midpoint = 0.0;
  double angle_at_next_midpoint = 0.0;
};

/// Throws DegenerateError if O_i coincides with V_i or a midpoint.
DefectRecord quadrilateral_defect(const HPolygon& p, const Evolute& e, std::size_t i);

/// |delta - quad_area| and both midpoint angles' distance from pi/2 are
/// within eps_id.
bool defect_consistent(const DefectRecord& d, const Tolerances& tol = kDefaultTolerances);

struct Theorem5Terms {
  double density_polygon = 0.0;
  double density_evolute = 0.0;
  int extremal_count = 0;
  double defect_sum = 0.0;

  /// |2 den(P) - 2 den(E) - N - defect_sum / pi|
  double residual() const;
};

/// Each term of the identity from its own code path: densities from left
/// angles, N from the curvature graph, defects from the quadrilaterals.
/// Throws ValidationError unless p is convex with at least 4 vertices.
Theorem5Terms theorem5_terms(const HPolygon& p);
double theorem5_residual(const HPolygon& p);

/// den(E(P)) <= -1 + slack.
bool theorem4_check(const HPolygon& p, double slack);
bool theorem4_check(const HPolygon& p);

struct Theorem6Result {
  int extremal_count = 0;
  bool pass = false;  ///< extremal_count >= 4 and even
};

/// Throws ValidationError unless p is convex with at least 4 vertices.
Theorem6Result theorem6_check(const HPolygon& p);
Theorem6Result theorem6_check(int extremal_count);

}  // namespace hyperpoly
