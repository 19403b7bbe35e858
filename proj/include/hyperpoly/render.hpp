#pragma once

#include <string>

#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

struct RenderOptions {
  bool circles = false;          ///< draw every circumcircle C_i
  bool exact_arcs = false;       ///< SVG arc commands instead of sampled polylines
  int samples_per_edge = 64;
  int samples_per_circle = 128;
};

/// SVG 1.1 scene in the Poincare disk: boundary circle, polygon edges as
/// geodesics, the evolute, optional circumcircles, and glyphs for extremal
/// vertices (circle = max, square = min) and cusps (triangle). Output bytes
/// depend only on the polygon and options. The evolute and markers are
/// omitted when they cannot be built.
std::string render_svg(const HPolygon& p, const RenderOptions& opts = {});

}  // namespace hyperpoly
