#pragma once

#include <variant>

#include "hyperpoly/geom.hpp"

namespace hyperpoly {

struct Circle {
  HPoint center;
  double radius = 0.0;
};
struct Horocycle {};
struct Hypercycle {};
struct Collinear {};

/// Constant-curvature cycle through three points.
using Cycle = std::variant<Circle, Horocycle, Hypercycle, Collinear>;

enum class CycleKind { Circle, Horocycle, Hypercycle, Collinear };

CycleKind kind_of(const Cycle& c);
const char* to_string(CycleKind k);

enum class CirclePosition { Inside, On, Outside };
const char* to_string(CirclePosition p);

/// Scale-free collinearity measure of a triple: sinh of the distance from the
/// vertex opposite the longest side to that side's geodesic.
double collinearity(const HPoint& a, const HPoint& b, const HPoint& c,
                    const Tolerances& tol = kDefaultTolerances);

/// Classifies the cycle through a, b, c. The center is the (normalized)
/// intersection direction of the two bisector planes <x, a-b> = 0 and
/// <x, b-c> = 0; its causal character decides circle / horocycle / hypercycle.
/// Collinearity is tested first. Throws DegenerateError on coincident inputs.
Cycle circumscribe(const HPoint& a, const HPoint& b, const HPoint& c,
                   const Tolerances& tol = kDefaultTolerances);

CirclePosition point_vs_circle(const Circle& c, const HPoint& x,
                               const Tolerances& tol = kDefaultTolerances);

/// True iff o lies strictly inside the wedge at v spanned by the rays toward
/// vprev and vnext.
bool is_coherent_at(const HPoint& vprev, const HPoint& v, const HPoint& vnext, const HPoint& o,
                    const Tolerances& tol = kDefaultTolerances);

}  // namespace hyperpoly
