#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperpoly/circumcircle.hpp"
#include "hyperpoly/geom.hpp"

namespace hyperpoly {

/// Closed polygonal curve V_0 .. V_{n-1} with cyclic indexing.
///
/// Vertices are stored without a duplicated closing vertex. Left angles and
/// the circumcycles of consecutive triples are computed at construction;
/// either may be absent when the triple is degenerate.
class HPolygon {
 public:
  /// Throws SizeError for n < 3 and DegenerateError if two consecutive
  /// vertices coincide. Keeps the given traversal order.
  explicit HPolygon(std::vector<HPoint> vertices, const Tolerances& tol = kDefaultTolerances);

  /// As the constructor, but reverses a simple clockwise vertex list so the
  /// traversal is counterclockwise.
  static HPolygon counterclockwise(std::vector<HPoint> vertices,
                                   const Tolerances& tol = kDefaultTolerances);

  static HPolygon from_poincare(std::span<const Vec2> coords,
                                const Tolerances& tol = kDefaultTolerances);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<HPoint>& vertices() const { return vertices_; }
  const Tolerances& tolerances() const { return tol_; }

  /// Vertex at a cyclic index; any integer is reduced mod n.
  const HPoint& vertex(std::ptrdiff_t i) const { return vertices_[wrap(i)]; }
  std::size_t wrap(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }

  /// Left angle at V_i (between V_{i-1} and V_{i+1}). Throws DegenerateError
  /// if the path folds back at V_i.
  double left_angle(std::ptrdiff_t i) const;
  bool has_left_angle(std::ptrdiff_t i) const { return left_angles_[wrap(i)].has_value(); }

  /// Cycle through V_{i-1}, V_i, V_{i+1}. Throws DegenerateError if undefined.
  const Cycle& circumcycle(std::ptrdiff_t i) const;

  /// Circle C_i. Throws ConstructionError if the triple has no circumcircle.
  const Circle& circumcircle(std::ptrdiff_t i) const;

  HPolygon reversed() const;
  /// Re-indexed copy whose vertex 0 is this polygon's vertex `shift`.
  HPolygon rotated(std::ptrdiff_t shift) const;

 private:
  std::vector<HPoint> vertices_;
  Tolerances tol_;
  std::vector<std::optional<double>> left_angles_;
  std::vector<std::optional<Cycle>> cycles_;
};

/// Twice the signed area of the polygon's Klein image; positive when the
/// traversal is counterclockwise. Klein geodesics are chords, so for a simple
/// polygon the sign is the orientation.
double klein_signed_area2(const HPolygon& p);

enum class VertexSign { Positive, Negative };
const char* to_string(VertexSign s);

/// Positive iff the left angle at V_i is at most pi. Throws DegenerateError if
/// the triple is collinear.
VertexSign vertex_sign(const HPolygon& p, std::ptrdiff_t i);

bool is_convex(const HPolygon& p);

/// M_i = midpoint(V_i, V_{i+1}) for every edge i.
std::vector<HPoint> edge_midpoints(const HPolygon& p);

/// True iff the closed geodesic segments [p0,p1] and [q0,q1] share a point.
bool segments_intersect(const HPoint& p0, const HPoint& p1, const HPoint& q0, const HPoint& q1,
                        const Tolerances& tol = kDefaultTolerances);

struct ValidationOptions {
  /// Restrict the concyclicity check to quadruples of consecutive vertices.
  bool fast_generic = false;
};

using Witness = std::vector<std::size_t>;

struct ValidationReport {
  bool simple = true;
  bool generic_circle = true;  ///< no four vertices on a common circle
  bool generic_line = true;    ///< no three vertices on a common geodesic
  bool coherent = true;
  bool convex = true;
  bool all_non_ideal = true;

  std::optional<Witness> simple_witness;
  std::optional<Witness> generic_circle_witness;
  std::optional<Witness> generic_line_witness;
  std::optional<Witness> coherent_witness;
  std::optional<Witness> convex_witness;
  std::optional<Witness> non_ideal_witness;

  bool generic() const { return generic_circle && generic_line; }
  /// Simple, generic and coherent: the polygon admits an evolute.
  bool admissible() const { return all_non_ideal && simple && generic() && coherent; }
  bool all_pass() const { return admissible() && convex; }
};

/// Runs every admissibility predicate. Throws SizeError for n < 3.
ValidationReport validate(const HPolygon& p, const ValidationOptions& opts = {});

}  // namespace hyperpoly
