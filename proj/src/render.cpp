#include "hyperpoly/render.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/evolute.hpp"

namespace hyperpoly {

namespace {

constexpr double kSize = 800.0;
constexpr double kCenter = 400.0;
constexpr double kScale = 380.0;

struct Pixel {
  double x;
  double y;
};

Pixel to_pixel(const Vec2& u) { return {kCenter + kScale * u.x, kCenter - kScale * u.y}; }
Pixel to_pixel(const HPoint& p) { return to_pixel(to_poincare(p)); }

std::string polyline(const std::vector<Pixel>& pts) {
  std::string d;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    d += fmt::format("{}{:.3f},{:.3f}", k == 0 ? "M" : " L", pts[k].x, pts[k].y);
  }
  return d;
}

std::vector<Pixel> sample_geodesic(const HPoint& a, const HPoint& b, int samples) {
  const TangentVector t = tangent_direction(a, b);
  const double len = hdist(a, b);
  std::vector<Pixel> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k < samples; ++k) pts.push_back(to_pixel(geodesic_flow(t, len * k / samples)));
  pts.push_back(to_pixel(b));
  return pts;
}

// Arc of the circle orthogonal to the unit circle through a and b, or a
// straight segment when a, b and the disk center are aligned.
std::string geodesic_arc(const HPoint& a, const HPoint& b) {
  const Vec2 p = to_poincare(a);
  const Vec2 q = to_poincare(b);
  const Pixel pa = to_pixel(p);
  const Pixel pb = to_pixel(q);
  const double det = p.x * q.y - p.y * q.x;
  if (std::abs(det) < 1e-12) {
    return fmt::format("M{:.3f},{:.3f} L{:.3f},{:.3f}", pa.x, pa.y, pb.x, pb.y);
  }
  // Center c solves c.p = (1 + |p|^2) / 2 and c.q = (1 + |q|^2) / 2.
  const double rp = 0.5 * (1.0 + p.x * p.x + p.y * p.y);
  const double rq = 0.5 * (1.0 + q.x * q.x + q.y * q.y);
  const Vec2 c{(rp * q.y - rq * p.y) / det, (p.x * rq - q.x * rp) / det};
  const double radius = std::hypot(p.x - c.x, p.y - c.y) * kScale;
  // Sweep direction in pixel space (y axis flipped).
  const Pixel pc = to_pixel(c);
  const double cross = (pa.x - pc.x) * (pb.y - pc.y) - (pa.y - pc.y) * (pb.x - pc.x);
  return fmt::format("M{:.3f},{:.3f} A{:.3f},{:.3f} 0 0 {} {:.3f},{:.3f}", pa.x, pa.y, radius,
                     radius, cross > 0.0 ? 1 : 0, pb.x, pb.y);
}

std::string edge_path(const HPoint& a, const HPoint& b, const RenderOptions& opts) {
  return opts.exact_arcs ? geodesic_arc(a, b) : polyline(sample_geodesic(a, b, opts.samples_per_edge));
}

std::string circle_path(const Circle& c, const HPoint& on_circle, const RenderOptions& opts) {
  const Vec3 e1 = tangent_direction(c.center, on_circle).v;
  const Vec3 e2 = mink_cross(c.center.coords(), e1);
  std::vector<Pixel> pts;
  for (int k = 0; k < opts.samples_per_circle; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / opts.samples_per_circle;
    const TangentVector t{c.center, std::cos(phi) * e1 + std::sin(phi) * e2};
    pts.push_back(to_pixel(geodesic_flow(t, c.radius)));
  }
  return polyline(pts) + " Z";
}

}  // namespace

std::string render_svg(const HPolygon& p, const RenderOptions& opts) {
  const std::size_t n = p.size();
  std::optional<CurvatureGraph> graph;
  std::optional<Evolute> evolute;
  try {
    graph = build_graph(p);
  } catch (const Error&) {
  }
  try {
    evolute = build_evolute(p);
  } catch (const Error&) {
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" "
      "height=\"{0:.0f}\" viewBox=\"0 0 {0:.0f} {0:.0f}\">\n",
      kSize);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += fmt::format(
      "<circle class=\"disk\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" "
      "stroke=\"#444\" stroke-width=\"1.5\"/>\n",
      kCenter, kCenter, kScale);

  if (opts.circles) {
    out += "<g fill=\"none\" stroke=\"#9ab\" stroke-width=\"0.75\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      try {
        const Circle& c = p.circumcircle(k);
        out += fmt::format("<path class=\"circumcircle\" d=\"{}\"/>\n",
                           circle_path(c, p.vertex(k), opts));
      } catch (const Error&) {
      }
    }
    out += "</g>\n";
  }

  out += "<g fill=\"none\" stroke=\"#1a4f9c\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    out += fmt::format("<path class=\"polygon-edge\" d=\"{}\"/>\n",
                       edge_path(p.vertex(k), p.vertex(k + 1), opts));
  }
  out += "</g>\n";

  if (evolute) {
    out += "<g fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.25\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += fmt::format("<path class=\"evolute-edge\" d=\"{}\"/>\n",
                         edge_path(evolute->centers[i], evolute->centers[(i + 1) % n], opts));
    }
    out += "</g>\n";
  }

  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Pixel v = to_pixel(p.vertices()[i]);
    const Extremal e = graph ? graph->extremal[i] : Extremal::None;
    if (e == Extremal::Max) {
      out += fmt::format("<circle class=\"vertex-max\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"6\" fill=\"#f1c40f\"/>\n",
                         v.x, v.y);
    } else if (e == Extremal::Min) {
      out += fmt::format(
          "<rect class=\"vertex-min\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"11\" height=\"11\" fill=\"#27ae60\"/>\n",
          v.x - 5.5, v.y - 5.5);
    } else {
      out += fmt::format("<circle class=\"vertex\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"#1a4f9c\"/>\n",
                         v.x, v.y);
    }
  }
  if (evolute) {
    for (std::size_t i = 0; i < n; ++i) {
      const Pixel o = to_pixel(evolute->centers[i]);
      if (evolute->cusp[i]) {
        out += fmt::format(
            "<path class=\"cusp\" d=\"M{:.3f},{:.3f} L{:.3f},{:.3f} L{:.3f},{:.3f} Z\" fill=\"#c0392b\"/>\n",
            o.x, o.y - 6.0, o.x - 5.2, o.y + 3.0, o.x + 5.2, o.y + 3.0);
      } else {
        out += fmt::format("<circle class=\"evolute-vertex\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"2\" fill=\"#c0392b\"/>\n",
                           o.x, o.y);
      }
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hyperpoly
