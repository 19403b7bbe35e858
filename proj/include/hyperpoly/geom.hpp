#pragma once

#include <array>
#include <cmath>

#include "hyperpoly/tolerances.hpp"

namespace hyperpoly {

/// A vector of Minkowski space R^{2,1}, signature (-,+,+).
struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  constexpr Vec3 operator-() const { return {-x0, -x1, -x2}; }
  constexpr Vec3 operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  constexpr Vec3 operator/(double s) const { return {x0 / s, x1 / s, x2 / s}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  constexpr bool operator==(const Vec2&) const = default;
};

/// Lorentzian inner product -a0*b0 + a1*b1 + a2*b2.
constexpr double mink_dot(const Vec3& a, const Vec3& b) {
  return -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

/// Euclidean cross product composed with the metric sign flip, so that
/// mink_dot(mink_cross(a, b), a) == mink_dot(mink_cross(a, b), b) == 0.
constexpr Vec3 mink_cross(const Vec3& a, const Vec3& b) {
  return {-(a.x1 * b.x2 - a.x2 * b.x1), a.x2 * b.x0 - a.x0 * b.x2, a.x0 * b.x1 - a.x1 * b.x0};
}

/// Euclidean determinant det[a, b, c]; invariant under proper orthochronous
/// Lorentz transformations.
constexpr double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x0 * (b.x1 * c.x2 - b.x2 * c.x1) - a.x1 * (b.x0 * c.x2 - b.x2 * c.x0) +
         a.x2 * (b.x0 * c.x1 - b.x1 * c.x0);
}

inline double euclid_norm2(const Vec3& v) { return v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2; }

/// Point of the hyperbolic plane on the upper sheet <p,p> = -1.
class HPoint {
 public:
  /// Default is the origin (1, 0, 0).
  HPoint() = default;

  /// Checked construction: finite coordinates, x0 > 0, |<p,p> + 1| < eps_norm
  /// relative to the coordinate scale. Renormalizes the accepted point.
  static HPoint from_coords(const Vec3& v, const Tolerances& tol = kDefaultTolerances);

  /// Projects an arbitrary future-timelike vector onto the sheet.
  static HPoint normalize(const Vec3& v);

  const Vec3& coords() const { return v_; }
  double x0() const { return v_.x0; }
  double x1() const { return v_.x1; }
  double x2() const { return v_.x2; }

 private:
  explicit HPoint(const Vec3& v) : v_(v) {}
  Vec3 v_{1.0, 0.0, 0.0};
};

/// Unit spacelike tangent vector at a base point.
struct TangentVector {
  HPoint base;
  Vec3 v;
};

/// Unit spacelike normal of the plane cutting out a geodesic.
struct GeodesicNormal {
  Vec3 n;
  GeodesicNormal operator-() const { return {-n}; }
};

double mink_dot(const HPoint& a, const HPoint& b);

/// Hyperbolic distance. Throws DomainError if -<p,q> < 1 - eps_norm.
double hdist(const HPoint& p, const HPoint& q, const Tolerances& tol = kDefaultTolerances);

/// Throws BoundaryError when |u| >= 1 - eps_boundary.
HPoint from_poincare(const Vec2& u, const Tolerances& tol = kDefaultTolerances);
Vec2 to_poincare(const HPoint& p);

/// Beltrami-Klein coordinates (x1, x2) / x0; geodesics are straight chords.
Vec2 to_klein(const HPoint& p);

GeodesicNormal geodesic_normal(const HPoint& p, const HPoint& q,
                               const Tolerances& tol = kDefaultTolerances);

/// Sign of <x, n>: +1 is the left of the directed geodesic p -> q that produced n.
int side_of(const HPoint& x, const GeodesicNormal& n, const Tolerances& tol = kDefaultTolerances);

/// Signed sinh-distance from x to the geodesic of n.
inline double side_value(const HPoint& x, const GeodesicNormal& n) {
  return mink_dot(x.coords(), n.n);
}

HPoint midpoint(const HPoint& p, const HPoint& q, const Tolerances& tol = kDefaultTolerances);

TangentVector tangent_direction(const HPoint& at, const HPoint& toward,
                                const Tolerances& tol = kDefaultTolerances);

/// Point at distance t along the geodesic leaving t.base in direction t.v.
HPoint geodesic_flow(const TangentVector& t, double distance);

/// Unsigned angle in [0, pi] at `at` between the geodesics toward a and b.
double unsigned_angle(const HPoint& at, const HPoint& a, const HPoint& b,
                      const Tolerances& tol = kDefaultTolerances);

/// Angle on the left of the directed path A -> B -> C, in (0, 2pi).
/// Equals pi minus the signed turn at B (left turns positive).
/// Throws DegenerateError on coincident points or a fold-back.
double left_angle(const HPoint& a, const HPoint& b, const HPoint& c,
                  const Tolerances& tol = kDefaultTolerances);

}  // namespace hyperpoly
