#include "hyperpoly/evolute.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

Evolute build_evolute(const HPolygon& p) {
  const Tolerances& tol = p.tolerances();
  const std::size_t n = p.size();
  Evolute e;
  e.centers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    e.centers.push_back(p.circumcircle(static_cast<std::ptrdiff_t>(i)).center);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (hdist(e.centers[i], e.centers[(i + 1) % n], tol) <= tol.eps_sep) {
      throw ConstructionError("evolute: centers " + std::to_string(i) + " and " +
                              std::to_string((i + 1) % n) + " coincide");
    }
  }
  e.left_angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      e.left_angles.push_back(
          left_angle(e.centers[(i + n - 1) % n], e.centers[i], e.centers[(i + 1) % n], tol));
    } catch (const DegenerateError& err) {
      throw ConstructionError("evolute: angle at center " + std::to_string(i) + ": " + err.what());
    }
  }
  e.gap.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    e.gap.push_back(e.left_angles[i] - p.left_angle(static_cast<std::ptrdiff_t>(i)));
  }
  e.cusp = detect_cusps(p, e);
  return e;
}

std::vector<bool> detect_cusps(const HPolygon& p, const Evolute& e) {
  const Tolerances& tol = p.tolerances();
  std::vector<bool> cusp(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double diff = std::abs(e.left_angles[i] - p.left_angle(static_cast<std::ptrdiff_t>(i)));
    if (std::abs(diff - std::numbers::pi) < tol.eps_id) {
      throw DegenerateError("detect_cusps: angle difference at " + std::to_string(i) +
                            " is within eps_id of pi");
    }
    cusp[i] = diff > std::numbers::pi;
  }
  return cusp;
}

Theorem3Report theorem3_check(const HPolygon& p, const CurvatureGraph& g, const Evolute& e) {
  Theorem3Report r;
  r.asserted = is_convex(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((g.extremal[i] != Extremal::None) != e.cusp[i]) r.mismatches.push_back(i);
  }
  return r;
}

Theorem3Report theorem3_check(const HPolygon& p) {
  return theorem3_check(p, build_graph(p), build_evolute(p));
}

}  // namespace hyperpoly
