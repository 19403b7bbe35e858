#pragma once

#include <cstddef>
#include <vector>

#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

/// Direction of the curvature comparison between V_i and V_{i+1}.
/// Up means V_i has smaller curvature than V_{i+1}; Down the reverse.
enum class EdgeDir { Up, Down };

enum class Extremal { None, Max, Min };

const char* to_string(EdgeDir d);
const char* to_string(Extremal e);

/// Directed cycle graph induced by the discrete curvature ordering.
///
/// The arrow on edge (V_i, V_{i+1}) points from the vertex of greater
/// curvature to the lesser, so a curvature minimum has both arrows entering
/// and a maximum has both arrows exiting.
struct CurvatureGraph {
  std::vector<EdgeDir> edge_dir;   ///< edge_dir[i] relates V_i and V_{i+1}
  std::vector<Extremal> extremal;
  int l_plus = 0;   ///< locally minimal vertices (all edges enter)
  int l_minus = 0;  ///< locally maximal vertices (all edges exit)

  std::size_t size() const { return edge_dir.size(); }
  int extremal_count() const { return l_plus + l_minus; }
};

/// Labels extrema and counts them from raw edge directions (n >= 3).
CurvatureGraph graph_from_directions(std::vector<EdgeDir> dirs);

/// Curvature ordering of V_i against V_{i+1}: decided by whether V_{i+2}
/// lies inside or outside C_i, with the sense flipped by the signs of the two
/// vertices. Throws TieError if V_{i+2} is on C_i.
EdgeDir compare(const HPolygon& p, std::ptrdiff_t i);

/// Up iff r_i > r_next. Throws TieError when |r_i - r_next| < eps_id.
EdgeDir radii_direction(double r_i, double r_next, const Tolerances& tol = kDefaultTolerances);

/// Radius comparison R_i vs R_{i+1}; only meaningful on convex polygons
/// (throws ValidationError otherwise).
EdgeDir radii_compare(const HPolygon& p, std::ptrdiff_t i);

CurvatureGraph build_graph(const HPolygon& p);

/// 1 minus the number of edges exiting vertex i.
int vertex_index(const CurvatureGraph& g, std::size_t i);

/// Sum of indices is zero and l_plus == l_minus.
bool poincare_hopf_check(const CurvatureGraph& g);

}  // namespace hyperpoly
