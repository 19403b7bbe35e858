#include "hyperpoly/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

HPolygon::HPolygon(std::vector<HPoint> vertices, const Tolerances& tol)
    : vertices_(std::move(vertices)), tol_(tol) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw SizeError("polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (hdist(vertices_[i], vertices_[(i + 1) % n], tol_) <= tol_.eps_sep) {
      throw DegenerateError("consecutive vertices " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % n) + " coincide");
    }
  }
  left_angles_.resize(n);
  cycles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    try {
      left_angles_[i] = hyperpoly::left_angle(vertex(k - 1), vertex(k), vertex(k + 1), tol_);
    } catch (const DegenerateError&) {
    }
    try {
      cycles_[i] = circumscribe(vertex(k - 1), vertex(k), vertex(k + 1), tol_);
    } catch (const DegenerateError&) {
    }
  }
}

HPolygon HPolygon::from_poincare(std::span<const Vec2> coords, const Tolerances& tol) {
  std::vector<HPoint> pts;
  pts.reserve(coords.size());
  for (const Vec2& u : coords) pts.push_back(hyperpoly::from_poincare(u, tol));
  return HPolygon(std::move(pts), tol);
}

namespace {

bool check_simple(const HPolygon& p, std::optional<Witness>* witness);

}  // namespace

HPolygon HPolygon::counterclockwise(std::vector<HPoint> vertices, const Tolerances& tol) {
  HPolygon p(std::move(vertices), tol);
  bool simple = false;
  try {
    simple = check_simple(p, nullptr);
  } catch (const DegenerateError&) {
  }
  if (simple && klein_signed_area2(p) < 0.0) return p.reversed();
  return p;
}

double HPolygon::left_angle(std::ptrdiff_t i) const {
  const auto& a = left_angles_[wrap(i)];
  if (!a) {
    throw DegenerateError("left angle undefined at vertex " + std::to_string(wrap(i)));
  }
  return *a;
}

const Cycle& HPolygon::circumcycle(std::ptrdiff_t i) const {
  const auto& c = cycles_[wrap(i)];
  if (!c) {
    throw DegenerateError("circumcycle undefined at vertex " + std::to_string(wrap(i)));
  }
  return *c;
}

const Circle& HPolygon::circumcircle(std::ptrdiff_t i) const {
  const Cycle& c = circumcycle(i);
  if (const auto* circle = std::get_if<Circle>(&c)) return *circle;
  throw ConstructionError("vertex " + std::to_string(wrap(i)) + " has no circumcircle (" +
                          to_string(kind_of(c)) + ")");
}

HPolygon HPolygon::reversed() const {
  std::vector<HPoint> pts;
  pts.reserve(size());
  const auto n = static_cast<std::ptrdiff_t>(size());
  for (std::ptrdiff_t i = 0; i < n; ++i) pts.push_back(vertex(-i));
  return HPolygon(std::move(pts), tol_);
}

HPolygon HPolygon::rotated(std::ptrdiff_t shift) const {
  std::vector<HPoint> pts;
  pts.reserve(size());
  const auto n = static_cast<std::ptrdiff_t>(size());
  for (std::ptrdiff_t i = 0; i < n; ++i) pts.push_back(vertex(i + shift));
  return HPolygon(std::move(pts), tol_);
}

double klein_signed_area2(const HPolygon& p) {
  double a = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Vec2 u = to_klein(p.vertex(i));
    const Vec2 w = to_klein(p.vertex(i + 1));
    a += u.x * w.y - u.y * w.x;
  }
  return a;
}

const char* to_string(VertexSign s) {
  return s == VertexSign::Positive ? "positive" : "negative";
}

VertexSign vertex_sign(const HPolygon& p, std::ptrdiff_t i) {
  const Tolerances& tol = p.tolerances();
  if (collinearity(p.vertex(i - 1), p.vertex(i), p.vertex(i + 1), tol) <= tol.eps_side) {
    throw DegenerateError("vertex_sign: collinear triple at vertex " + std::to_string(p.wrap(i)));
  }
  return p.left_angle(i) <= std::numbers::pi ? VertexSign::Positive : VertexSign::Negative;
}

bool is_convex(const HPolygon& p) {
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (vertex_sign(p, i) != VertexSign::Positive) return false;
  }
  return true;
}

std::vector<HPoint> edge_midpoints(const HPolygon& p) {
  std::vector<HPoint> out;
  out.reserve(p.size());
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out.push_back(midpoint(p.vertex(i), p.vertex(i + 1), p.tolerances()));
  }
  return out;
}

namespace {

// x is assumed to lie on the geodesic through a and b.
bool on_segment(const HPoint& x, const HPoint& a, const HPoint& b, const Tolerances& tol) {
  const double ab = hdist(a, b, tol);
  return hdist(a, x, tol) <= ab + tol.eps_side && hdist(b, x, tol) <= ab + tol.eps_side;
}

}  // namespace

bool segments_intersect(const HPoint& p0, const HPoint& p1, const HPoint& q0, const HPoint& q1,
                        const Tolerances& tol) {
  const GeodesicNormal np = geodesic_normal(p0, p1, tol);
  const GeodesicNormal nq = geodesic_normal(q0, q1, tol);
  const int d1 = side_of(q0, np, tol);
  const int d2 = side_of(q1, np, tol);
  const int d3 = side_of(p0, nq, tol);
  const int d4 = side_of(p1, nq, tol);

  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q0, p0, p1, tol)) return true;
  if (d2 == 0 && on_segment(q1, p0, p1, tol)) return true;
  if (d3 == 0 && on_segment(p0, q0, q1, tol)) return true;
  if (d4 == 0 && on_segment(p1, q0, q1, tol)) return true;
  return false;
}

namespace {

bool check_simple(const HPolygon& p, std::optional<Witness>* witness) {
  const Tolerances& tol = p.tolerances();
  const std::size_t n = p.size();
  const auto at = [&](std::size_t i) -> const HPoint& { return p.vertices()[i % n]; };

  // Adjacent edges meet only at their shared vertex unless the path folds back.
  for (std::size_t i = 0; i < n; ++i) {
    const HPoint& prev = at(i + n - 1);
    const HPoint& v = at(i);
    const HPoint& next = at(i + 1);
    const GeodesicNormal nrm = geodesic_normal(prev, v, tol);
    if (side_of(next, nrm, tol) == 0 &&
        mink_dot(tangent_direction(v, prev, tol).v, tangent_direction(v, next, tol).v) > 0.0) {
      if (witness) *witness = Witness{(i + n - 1) % n, i};
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing vertex
      if (segments_intersect(at(i), at(i + 1), at(j), at(j + 1), tol)) {
        if (witness) *witness = Witness{i, j};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ValidationReport validate(const HPolygon& p, const ValidationOptions& opts) {
  const std::size_t n = p.size();
  if (n < 3) throw SizeError("validate: polygon needs at least 3 vertices");
  const Tolerances& tol = p.tolerances();
  const auto& v = p.vertices();
  ValidationReport r;

  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& c = v[i].coords();
    if (!std::isfinite(c.x0) || !std::isfinite(c.x1) || !std::isfinite(c.x2)) {
      r.all_non_ideal = false;
      r.non_ideal_witness = Witness{i};
      break;
    }
  }

  try {
    r.simple = check_simple(p, &r.simple_witness);
  } catch (const DegenerateError&) {
    // Coincident non-consecutive vertices: the curve touches itself.
    r.simple = false;
    for (std::size_t a = 0; a < n && !r.simple_witness; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (hdist(v[a], v[b], tol) <= tol.eps_sep) {
          r.simple_witness = Witness{a, b};
          break;
        }
      }
    }
    if (!r.simple_witness) r.simple_witness = Witness{0};
  }

  // Every triple must be non-collinear.
  for (std::size_t a = 0; a < n && r.generic_line; ++a) {
    for (std::size_t b = a + 1; b < n && r.generic_line; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        bool collinear = true;
        try {
          collinear = collinearity(v[a], v[b], v[c], tol) <= tol.eps_side;
        } catch (const Error&) {
        }
        if (collinear) {
          r.generic_line = false;
          r.generic_line_witness = Witness{a, b, c};
          break;
        }
      }
    }
  }

  // Returns the circle through a, b, c if there is one; coincident points
  // count as concyclic with anything.
  const auto circle_of = [&](std::size_t a, std::size_t b, std::size_t c,
                             bool& degenerate) -> std::optional<Circle> {
    degenerate = false;
    try {
      const Cycle cyc = circumscribe(v[a], v[b], v[c], tol);
      if (const auto* circle = std::get_if<Circle>(&cyc)) return *circle;
    } catch (const DegenerateError&) {
      degenerate = true;
    }
    return std::nullopt;
  };
  const auto concyclic = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    bool degenerate = false;
    const auto circle = circle_of(a, b, c, degenerate);
    return degenerate || (circle && point_vs_circle(*circle, v[d], tol) == CirclePosition::On);
  };
  if (opts.fast_generic) {
    for (std::size_t i = 0; i < n && n >= 4; ++i) {
      if (concyclic(i, (i + 1) % n, (i + 2) % n, (i + 3) % n)) {
        Witness w{i, (i + 1) % n, (i + 2) % n, (i + 3) % n};
        std::sort(w.begin(), w.end());
        r.generic_circle = false;
        r.generic_circle_witness = w;
        break;
      }
    }
  } else {
    for (std::size_t a = 0; a < n && r.generic_circle; ++a) {
      for (std::size_t b = a + 1; b < n && r.generic_circle; ++b) {
        for (std::size_t c = b + 1; c < n && r.generic_circle; ++c) {
          bool degenerate = false;
          const auto circle = circle_of(a, b, c, degenerate);
          if (!circle && !degenerate) continue;
          for (std::size_t d = c + 1; d < n; ++d) {
            if (degenerate || point_vs_circle(*circle, v[d], tol) == CirclePosition::On) {
              r.generic_circle = false;
              r.generic_circle_witness = Witness{a, b, c, d};
              break;
            }
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    bool ok = false;
    try {
      const Circle& c = p.circumcircle(k);
      ok = is_coherent_at(p.vertex(k - 1), p.vertex(k), p.vertex(k + 1), c.center, tol);
    } catch (const Error&) {
    }
    if (!ok) {
      r.coherent = false;
      r.coherent_witness = Witness{i};
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool positive = false;
    try {
      positive = vertex_sign(p, static_cast<std::ptrdiff_t>(i)) == VertexSign::Positive;
    } catch (const DegenerateError&) {
    }
    if (!positive) {
      r.convex = false;
      r.convex_witness = Witness{i};
      break;
    }
  }
  return r;
}

}  // namespace hyperpoly
