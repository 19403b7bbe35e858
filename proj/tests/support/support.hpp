#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hyperpoly/generator.hpp"
#include "hyperpoly/geom.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly::testing {

inline std::string data_path(const std::string& name) {
  return std::string(HYPERPOLY_TEST_DATA) + "/" + name;
}

/// Linear map of R^{2,1} preserving the Minkowski form and the upper sheet.
struct Isometry {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  Vec3 apply(const Vec3& v) const {
    return {m[0][0] * v.x0 + m[0][1] * v.x1 + m[0][2] * v.x2,
            m[1][0] * v.x0 + m[1][1] * v.x1 + m[1][2] * v.x2,
            m[2][0] * v.x0 + m[2][1] * v.x1 + m[2][2] * v.x2};
  }
  HPoint operator()(const HPoint& p) const { return HPoint::normalize(apply(p.coords())); }

  Isometry then(const Isometry& g) const {
    Isometry r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        r.m[i][j] = 0.0;
        for (int k = 0; k < 3; ++k) r.m[i][j] += g.m[i][k] * m[k][j];
      }
    }
    return r;
  }
};

inline Isometry boost_x1(double t) {
  Isometry g;
  g.m = {{{std::cosh(t), std::sinh(t), 0}, {std::sinh(t), std::cosh(t), 0}, {0, 0, 1}}};
  return g;
}

inline Isometry rotation(double theta) {
  Isometry g;
  g.m = {{{1, 0, 0}, {0, std::cos(theta), -std::sin(theta)}, {0, std::sin(theta), std::cos(theta)}}};
  return g;
}

/// Rotation, boost of rapidity up to `max_rapidity`, rotation.
inline Isometry random_isometry(SplitMix64& rng, double max_rapidity = 1.5) {
  const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double t = rng.uniform(-max_rapidity, max_rapidity);
  const double b = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return rotation(a).then(boost_x1(t)).then(rotation(b));
}

/// Reflection in the perpendicular bisector of p and q; exchanges them.
inline Isometry swap_isometry(const HPoint& p, const HPoint& q) {
  const Vec3 d = p.coords() - q.coords();
  const Vec3 m = d / std::sqrt(mink_dot(d, d));
  const Vec3 jm{-m.x0, m.x1, m.x2};  // x -> <x, m> as a row vector
  const std::array<double, 3> mv{m.x0, m.x1, m.x2};
  const std::array<double, 3> jv{jm.x0, jm.x1, jm.x2};
  Isometry g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g.m[i][j] = (i == j ? 1.0 : 0.0) - 2.0 * mv[i] * jv[j];
  }
  return g;
}

inline HPoint random_point(SplitMix64& rng, double max_poincare_radius) {
  const double r = max_poincare_radius * std::sqrt(rng.uniform01());
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return from_poincare({r * std::cos(phi), r * std::sin(phi)});
}

inline HPoint polar_point(double rho, double phi) {
  return HPoint::normalize({std::cosh(rho), std::sinh(rho) * std::cos(phi), std::sinh(rho) * std::sin(phi)});
}

inline HPolygon transformed(const HPolygon& p, const Isometry& g) {
  std::vector<HPoint> v;
  for (const auto& x : p.vertices()) v.push_back(g(x));
  return HPolygon(v, p.tolerances());
}

/// Causal character of the bisector intersection direction, recomputed in
/// long double from raw coordinates: negative for circles, positive for
/// hypercycles. Returned relative to the Euclidean norm of the direction.
inline long double bisector_character(const HPoint& a, const HPoint& b, const HPoint& c) {
  using L = long double;
  const L n1[3] = {L(a.x0()) - b.x0(), L(a.x1()) - b.x1(), L(a.x2()) - b.x2()};
  const L n2[3] = {L(b.x0()) - c.x0(), L(b.x1()) - c.x1(), L(b.x2()) - c.x2()};
  // Plane {x : <x, n> = 0} has Euclidean normal (-n0, n1, n2).
  const L e1[3] = {-n1[0], n1[1], n1[2]};
  const L e2[3] = {-n2[0], n2[1], n2[2]};
  const L v[3] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                  e1[0] * e2[1] - e1[1] * e2[0]};
  const L s = -v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  return s / (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

/// Nelder-Mead on a function of two variables; the initial simplex extends
/// `step` along each axis.
inline std::array<double, 2> nelder_mead(const std::function<double(double, double)>& f,
                                         std::array<double, 2> start, std::array<double, 2> step,
                                         int iterations) {
  using P = std::array<double, 2>;
  std::array<P, 3> s{start, P{start[0] + step[0], start[1]}, P{start[0], start[1] + step[1]}};
  std::array<double, 3> fv{};
  for (int i = 0; i < 3; ++i) fv[i] = f(s[i][0], s[i][1]);
  const auto at = [](const P& a, const P& b, double t) {
    return P{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  for (int it = 0; it < iterations; ++it) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return fv[x] < fv[y]; });
    const int best = idx[0], mid = idx[1], worst = idx[2];
    const P centroid{(s[best][0] + s[mid][0]) / 2, (s[best][1] + s[mid][1]) / 2};
    const P refl = at(centroid, s[worst], -1.0);
    const double fr = f(refl[0], refl[1]);
    if (fr < fv[best]) {
      const P exp = at(centroid, s[worst], -2.0);
      const double fe = f(exp[0], exp[1]);
      if (fe < fr) s[worst] = exp, fv[worst] = fe;
      else s[worst] = refl, fv[worst] = fr;
    } else if (fr < fv[mid]) {
      s[worst] = refl, fv[worst] = fr;
    } else {
      const P con = at(centroid, s[worst], 0.5);
      const double fc = f(con[0], con[1]);
      if (fc < fv[worst]) {
        s[worst] = con, fv[worst] = fc;
      } else {
        for (int i : {mid, worst}) {
          s[i] = at(s[best], s[i], 0.5);
          fv[i] = f(s[i][0], s[i][1]);
        }
      }
    }
  }
  int b = 0;
  for (int i = 1; i < 3; ++i) {
    if (fv[i] < fv[b]) b = i;
  }
  return s[b];
}

/// Smallest (max - min) of the three distances found by a polar grid search
/// followed by local refinement, searching centers up to distance `rho_max`
/// from the origin.
inline double equidistant_spread(const HPoint& a, const HPoint& b, const HPoint& c,
                                 double rho_max = 6.0) {
  const auto dist = [](const HPoint& p, double x0, double x1, double x2) {
    const double d = -(-p.x0() * x0 + p.x1() * x1 + p.x2() * x2);
    return std::acosh(std::max(1.0, d));
  };
  const auto spread = [&](double rho, double phi) {
    rho = std::clamp(rho, 0.0, rho_max);
    const double x0 = std::cosh(rho), x1 = std::sinh(rho) * std::cos(phi), x2 = std::sinh(rho) * std::sin(phi);
    const double da = dist(a, x0, x1, x2), db = dist(b, x0, x1, x2), dc = dist(c, x0, x1, x2);
    return std::max({da, db, dc}) - std::min({da, db, dc});
  };
  const auto squared = [&](double rho, double phi) {
    rho = std::clamp(rho, 0.0, rho_max);
    const double x0 = std::cosh(rho), x1 = std::sinh(rho) * std::cos(phi), x2 = std::sinh(rho) * std::sin(phi);
    const double da = dist(a, x0, x1, x2), db = dist(b, x0, x1, x2), dc = dist(c, x0, x1, x2);
    return (da - db) * (da - db) + (db - dc) * (db - dc) + (da - dc) * (da - dc);
  };
  constexpr int kRho = 60;
  constexpr int kPhi = 72;
  std::vector<std::pair<double, std::array<double, 2>>> cells;
  for (int i = 0; i <= kRho; ++i) {
    for (int j = 0; j < kPhi; ++j) {
      const double rho = rho_max * i / kRho;
      const double phi = 2.0 * std::numbers::pi * j / kPhi;
      cells.push_back({spread(rho, phi), {rho, phi}});
      if (i == 0) break;
    }
  }
  // The centroid of the three points starts the search near small circles,
  // which fall between grid cells.
  const double g0 = a.x0() + b.x0() + c.x0(), g1 = a.x1() + b.x1() + c.x1(), g2 = a.x2() + b.x2() + c.x2();
  const double g = std::sqrt(g0 * g0 - g1 * g1 - g2 * g2);
  const std::array<double, 2> centroid{std::acosh(std::max(1.0, g0 / g)), std::atan2(g2, g1)};
  cells.push_back({spread(centroid[0], centroid[1]), centroid});
  constexpr std::size_t kStarts = 4;
  std::partial_sort(cells.begin(), cells.begin() + kStarts, cells.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
  double best = cells.front().first;
  for (std::size_t k = 0; k < kStarts; ++k) {
    auto p = cells[k].second;
    std::array<double, 2> step{rho_max / kRho, 2.0 * std::numbers::pi / kPhi};
    for (int round = 0; round < 6; ++round) {
      p = nelder_mead(squared, p, step, 200);
      step = {0.1 * step[0], 0.1 * step[1]};
    }
    best = std::min(best, spread(p[0], p[1]));
  }
  return best;
}

/// Euclidean shoelace area of Poincare coordinates.
inline double shoelace(const std::vector<Vec2>& u) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec2& a = u[i];
    const Vec2& b = u[(i + 1) % u.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

}  // namespace hyperpoly::testing
