#include "hyperpoly/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

Vec3 unit_spacelike(const Vec3& v, double eps, const char* what) {
  const double n2 = mink_dot(v, v);
  if (!(n2 > eps * eps)) {
    throw DegenerateError(std::string(what) + ": points coincide");
  }
  return v / std::sqrt(n2);
}

}  // namespace

HPoint HPoint::from_coords(const Vec3& v, const Tolerances& tol) {
  if (!std::isfinite(v.x0) || !std::isfinite(v.x1) || !std::isfinite(v.x2)) {
    throw DomainError("hyperboloid point has non-finite coordinates");
  }
  if (!(v.x0 > 0.0)) {
    throw DomainError("hyperboloid point is not on the upper sheet (x0 <= 0)");
  }
  const double defect = mink_dot(v, v) + 1.0;
  const double scale = std::max(1.0, v.x0 * v.x0);
  if (std::abs(defect) > tol.eps_norm * scale) {
    throw DomainError("hyperboloid point is off the sheet: <p,p> + 1 = " + std::to_string(defect));
  }
  return normalize(v);
}

HPoint HPoint::normalize(const Vec3& v) {
  const double n2 = -mink_dot(v, v);
  if (!(n2 > 0.0) || !(v.x0 > 0.0)) {
    throw DomainError("vector is not future timelike");
  }
  return HPoint(v / std::sqrt(n2));
}

double mink_dot(const HPoint& a, const HPoint& b) { return mink_dot(a.coords(), b.coords()); }

double hdist(const HPoint& p, const HPoint& q, const Tolerances& tol) {
  const double c = -mink_dot(p, q);
  if (c < 1.0 - tol.eps_norm) {
    throw DomainError("hdist: -<p,q> below 1, inputs are off the model");
  }
  // Chord form 2 asinh(|p-q|/2) keeps precision for nearby points.
  const Vec3 d = p.coords() - q.coords();
  const double chord2 = std::max(0.0, mink_dot(d, d));
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

HPoint from_poincare(const Vec2& u, const Tolerances& tol) {
  if (!std::isfinite(u.x) || !std::isfinite(u.y)) {
    throw BoundaryError("Poincare coordinate is not finite");
  }
  const double r2 = u.x * u.x + u.y * u.y;
  if (std::sqrt(r2) >= 1.0 - tol.eps_boundary) {
    throw BoundaryError("Poincare coordinate lies on or outside the ideal boundary");
  }
  const double s = 1.0 - r2;
  return HPoint::normalize({(1.0 + r2) / s, 2.0 * u.x / s, 2.0 * u.y / s});
}

Vec2 to_poincare(const HPoint& p) {
  const double s = 1.0 + p.x0();
  return {p.x1() / s, p.x2() / s};
}

Vec2 to_klein(const HPoint& p) { return {p.x1() / p.x0(), p.x2() / p.x0()}; }

GeodesicNormal geodesic_normal(const HPoint& p, const HPoint& q, const Tolerances& tol) {
  if (hdist(p, q, tol) <= tol.eps_sep) {
    throw DegenerateError("geodesic_normal: points coincide");
  }
  const Vec3 n = mink_cross(p.coords(), q.coords());
  const double n2 = mink_dot(n, n);
  if (!(n2 > 0.0)) {
    throw DegenerateError("geodesic_normal: points coincide");
  }
  return {n / std::sqrt(n2)};
}

int side_of(const HPoint& x, const GeodesicNormal& n, const Tolerances& tol) {
  const double s = side_value(x, n);
  if (std::abs(s) <= tol.eps_side) return 0;
  return s > 0.0 ? 1 : -1;
}

HPoint midpoint(const HPoint& p, const HPoint& q, const Tolerances& tol) {
  if (hdist(p, q, tol) <= tol.eps_sep) {
    throw DegenerateError("midpoint: points coincide");
  }
  return HPoint::normalize(p.coords() + q.coords());
}

TangentVector tangent_direction(const HPoint& at, const HPoint& toward, const Tolerances& tol) {
  if (hdist(at, toward, tol) <= tol.eps_sep) {
    throw DegenerateError("tangent_direction: points coincide");
  }
  const Vec3 v = toward.coords() + mink_dot(toward, at) * at.coords();
  return {at, unit_spacelike(v, 0.0, "tangent_direction")};
}

HPoint geodesic_flow(const TangentVector& t, double distance) {
  return HPoint::normalize(std::cosh(distance) * t.base.coords() + std::sinh(distance) * t.v);
}

namespace {

// Signed angle from u to w, both unit tangents at `at`; counterclockwise positive.
double signed_tangent_angle(const HPoint& at, const Vec3& u, const Vec3& w) {
  return std::atan2(det3(at.coords(), u, w), mink_dot(u, w));
}

}  // namespace

double unsigned_angle(const HPoint& at, const HPoint& a, const HPoint& b, const Tolerances& tol) {
  const TangentVector ta = tangent_direction(at, a, tol);
  const TangentVector tb = tangent_direction(at, b, tol);
  return std::abs(signed_tangent_angle(at, ta.v, tb.v));
}

double left_angle(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerances& tol) {
  const Vec3 t_back = tangent_direction(b, a, tol).v;
  const Vec3 t_out = tangent_direction(b, c, tol).v;
  const double fold = signed_tangent_angle(b, t_back, t_out);
  if (std::abs(fold) <= tol.eps_side) {
    throw DegenerateError("left_angle: path folds back on itself");
  }
  // The region left of A -> B -> C is swept counterclockwise from the
  // outgoing ray to the backward ray.
  double angle = signed_tangent_angle(b, t_out, t_back);
  if (angle <= 0.0) angle += 2.0 * std::numbers::pi;
  return angle;
}

}  // namespace hyperpoly
