#include "hyperpoly/curvature.hpp"

#include <cmath>
#include <string>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

const char* to_string(EdgeDir d) { return d == EdgeDir::Up ? "up" : "down"; }

const char* to_string(Extremal e) {
  switch (e) {
    case Extremal::None: return "none";
    case Extremal::Max: return "max";
    case Extremal::Min: return "min";
  }
  return "?";
}

CurvatureGraph graph_from_directions(std::vector<EdgeDir> dirs) {
  const std::size_t n = dirs.size();
  if (n < 3) throw SizeError("curvature graph needs at least 3 vertices");
  CurvatureGraph g;
  g.edge_dir = std::move(dirs);
  g.extremal.assign(n, Extremal::None);
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeDir in = g.edge_dir[(i + n - 1) % n];
    const EdgeDir out = g.edge_dir[i];
    if (in == EdgeDir::Up && out == EdgeDir::Down) {
      g.extremal[i] = Extremal::Max;
      ++g.l_minus;
    } else if (in == EdgeDir::Down && out == EdgeDir::Up) {
      g.extremal[i] = Extremal::Min;
      ++g.l_plus;
    }
  }
  return g;
}

EdgeDir compare(const HPolygon& p, std::ptrdiff_t i) {
  const Circle& c = p.circumcircle(i);
  const CirclePosition w = point_vs_circle(c, p.vertex(i + 2), p.tolerances());
  if (w == CirclePosition::On) {
    throw TieError("compare: vertex " + std::to_string(p.wrap(i + 2)) + " lies on circle C_" +
                   std::to_string(p.wrap(i)));
  }
  const bool outside = w == CirclePosition::Outside;
  const bool next_positive = vertex_sign(p, i + 1) == VertexSign::Positive;

  if (vertex_sign(p, i) == VertexSign::Positive) {
    // V_i > V_{i+1} iff (V_{i+1} positive, V_{i+2} outside) or (negative, inside).
    const bool greater = next_positive ? outside : !outside;
    return greater ? EdgeDir::Down : EdgeDir::Up;
  }
  // Negative V_i: greater/less and outside/inside exchange roles.
  const bool less = next_positive ? !outside : outside;
  return less ? EdgeDir::Up : EdgeDir::Down;
}

EdgeDir radii_direction(double r_i, double r_next, const Tolerances& tol) {
  if (std::abs(r_i - r_next) < tol.eps_id) {
    throw TieError("radii_compare: circumradii tie within eps_id");
  }
  return r_i > r_next ? EdgeDir::Up : EdgeDir::Down;
}

EdgeDir radii_compare(const HPolygon& p, std::ptrdiff_t i) {
  if (!is_convex(p)) {
    throw ValidationError("radii_compare is only defined for convex polygons");
  }
  return radii_direction(p.circumcircle(i).radius, p.circumcircle(i + 1).radius, p.tolerances());
}

CurvatureGraph build_graph(const HPolygon& p) {
  std::vector<EdgeDir> dirs;
  dirs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) dirs.push_back(compare(p, static_cast<std::ptrdiff_t>(i)));
  return graph_from_directions(std::move(dirs));
}

int vertex_index(const CurvatureGraph& g, std::size_t i) {
  const std::size_t n = g.size();
  int exiting = 0;
  if (g.edge_dir[i % n] == EdgeDir::Down) ++exiting;           // arrow V_i -> V_{i+1}
  if (g.edge_dir[(i + n - 1) % n] == EdgeDir::Up) ++exiting;   // arrow V_i -> V_{i-1}
  return 1 - exiting;
}

bool poincare_hopf_check(const CurvatureGraph& g) {
  int total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += vertex_index(g, i);
  return total == 0 && g.l_plus == g.l_minus;
}

}  // namespace hyperpoly
