#include "hyperpoly/identities.hpp"

#include <cmath>
#include <numbers>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

constexpr double kPi = std::numbers::pi;

void require_convex_4(const HPolygon& p, const char* what) {
  if (p.size() < 4) throw ValidationError(std::string(what) + " needs at least 4 vertices");
  if (!is_convex(p)) throw ValidationError(std::string(what) + " needs a convex polygon");
}

}  // namespace

double density_from_angles(std::span<const double> left_angles) {
  double sum = 0.0;
  for (double a : left_angles) sum += kPi - a;
  return sum / (2.0 * kPi);
}

DensityValue density(const HPolygon& p) {
  std::vector<double> angles;
  angles.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) angles.push_back(p.left_angle(static_cast<std::ptrdiff_t>(i)));
  return {density_from_angles(angles), DensitySource::Polygon};
}

DensityValue density(const Evolute& e) {
  return {density_from_angles(e.left_angles), DensitySource::Evolute};
}

double triangle_area(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerances& tol) {
  return kPi - unsigned_angle(a, b, c, tol) - unsigned_angle(b, c, a, tol) -
         unsigned_angle(c, a, b, tol);
}

double polygon_area(const HPolygon& p) {
  if (!is_convex(p)) throw ValidationError("polygon_area needs a convex polygon");
  double area = 0.0;
  for (std::size_t j = 1; j + 1 < p.size(); ++j) {
    area += triangle_area(p.vertices()[0], p.vertices()[j], p.vertices()[j + 1], p.tolerances());
  }
  return area;
}

DefectRecord quadrilateral_defect(const HPolygon& p, const Evolute& e, std::size_t i) {
  const Tolerances& tol = p.tolerances();
  const auto k = static_cast<std::ptrdiff_t>(i);
  const HPoint& v = p.vertex(k);
  const HPoint& o = e.centers[p.wrap(k)];
  const HPoint m_prev = midpoint(p.vertex(k - 1), v, tol);
  const HPoint m_next = midpoint(v, p.vertex(k + 1), tol);

  DefectRecord d;
  d.index = p.wrap(k);
  d.alpha = unsigned_angle(o, m_prev, m_next, tol);
  d.delta = kPi - p.left_angle(k) - d.alpha;
  d.quad_area = triangle_area(v, m_prev, o, tol) + triangle_area(v, o, m_next, tol);
  d.angle_at_prev_midpoint = unsigned_angle(m_prev, v, o, tol);
  d.angle_at_next_midpoint = unsigned_angle(m_next, v, o, tol);
  return d;
}

bool defect_consistent(const DefectRecord& d, const Tolerances& tol) {
  return std::abs(d.delta - d.quad_area) < tol.eps_id &&
         std::abs(d.angle_at_prev_midpoint - kPi / 2) < tol.eps_id &&
         std::abs(d.angle_at_next_midpoint - kPi / 2) < tol.eps_id;
}

double Theorem5Terms::residual() const {
  return std::abs(2.0 * density_polygon - 2.0 * density_evolute - extremal_count -
                  defect_sum / kPi);
}

Theorem5Terms theorem5_terms(const HPolygon& p) {
  require_convex_4(p, "theorem5_terms");
  const Evolute e = build_evolute(p);
  Theorem5Terms t;
  t.density_polygon = density(p).value;
  t.density_evolute = density(e).value;
  t.extremal_count = build_graph(p).extremal_count();
  for (std::size_t i = 0; i < p.size(); ++i) t.defect_sum += quadrilateral_defect(p, e, i).delta;
  return t;
}

double theorem5_residual(const HPolygon& p) { return theorem5_terms(p).residual(); }

bool theorem4_check(const HPolygon& p, double slack) {
  return density(build_evolute(p)).value <= -1.0 + slack;
}

bool theorem4_check(const HPolygon& p) { return theorem4_check(p, p.tolerances().eps_id); }

Theorem6Result theorem6_check(int extremal_count) {
  return {extremal_count, extremal_count >= 4 && extremal_count % 2 == 0};
}

Theorem6Result theorem6_check(const HPolygon& p) {
  require_convex_4(p, "theorem6_check");
  return theorem6_check(build_graph(p).extremal_count());
}

}  // namespace hyperpoly
