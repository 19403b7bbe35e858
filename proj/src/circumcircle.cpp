#include "hyperpoly/circumcircle.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

CycleKind kind_of(const Cycle& c) { return static_cast<CycleKind>(c.index()); }

const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Circle: return "circle";
    case CycleKind::Horocycle: return "horocycle";
    case CycleKind::Hypercycle: return "hypercycle";
    case CycleKind::Collinear: return "collinear";
  }
  return "?";
}

const char* to_string(CirclePosition p) {
  switch (p) {
    case CirclePosition::Inside: return "inside";
    case CirclePosition::On: return "on";
    case CirclePosition::Outside: return "outside";
  }
  return "?";
}

double collinearity(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerances& tol) {
  // |det[a,b,c]| = sinh(d(c, ab)) * sinh(|ab|), and the same for each side.
  const double longest =
      std::max({std::sinh(hdist(a, b, tol)), std::sinh(hdist(b, c, tol)), std::sinh(hdist(c, a, tol))});
  if (longest == 0.0) return 0.0;
  return std::abs(det3(a.coords(), b.coords(), c.coords())) / longest;
}

Cycle circumscribe(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerances& tol) {
  if (hdist(a, b, tol) <= tol.eps_sep || hdist(b, c, tol) <= tol.eps_sep ||
      hdist(c, a, tol) <= tol.eps_sep) {
    throw DegenerateError("circumscribe: coincident points");
  }
  if (collinearity(a, b, c, tol) <= tol.eps_side) {
    return Collinear{};
  }

  const Vec3 n1 = a.coords() - b.coords();
  const Vec3 n2 = b.coords() - c.coords();
  Vec3 v = mink_cross(n1, n2);
  const double s = mink_dot(v, v);
  const double scale = euclid_norm2(v);
  if (s > tol.eps_class * scale) return Hypercycle{};
  if (s >= -tol.eps_class * scale) return Horocycle{};

  if (v.x0 < 0.0) v = -v;
  const HPoint center = HPoint::normalize(v);
  // Average the three distances; they agree to rounding.
  const double r = (hdist(center, a, tol) + hdist(center, b, tol) + hdist(center, c, tol)) / 3.0;
  return Circle{center, r};
}

CirclePosition point_vs_circle(const Circle& c, const HPoint& x, const Tolerances& tol) {
  const double d = hdist(c.center, x, tol) - c.radius;
  if (std::abs(d) <= tol.eps_id) return CirclePosition::On;
  return d < 0.0 ? CirclePosition::Inside : CirclePosition::Outside;
}

bool is_coherent_at(const HPoint& vprev, const HPoint& v, const HPoint& vnext, const HPoint& o,
                    const Tolerances& tol) {
  const GeodesicNormal to_prev = geodesic_normal(v, vprev, tol);
  const GeodesicNormal to_next = geodesic_normal(v, vnext, tol);
  const int o_prev = side_of(o, to_prev, tol);
  const int o_next = side_of(o, to_next, tol);
  if (o_prev == 0 || o_next == 0) return false;
  return o_prev == side_of(vnext, to_prev, tol) && o_next == side_of(vprev, to_next, tol);
}

}  // namespace hyperpoly
