#include "hyperpoly/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/evolute.hpp"

namespace hyperpoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Accepts a candidate or bumps the first failing rejection counter. The
// O(n) local predicates run before the full validation pass.
bool accept(const HPolygon& p, GenStats& stats) {
  const Tolerances& tol = p.tolerances();
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    bool ok = false;
    try {
      ok = is_coherent_at(p.vertex(i - 1), p.vertex(i), p.vertex(i + 1), p.circumcircle(i).center, tol);
    } catch (const Error&) {
    }
    if (!ok) {
      ++stats.rejected_coherent;
      return false;
    }
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!p.has_left_angle(i) || p.left_angle(i) >= std::numbers::pi) {
      ++stats.rejected_convex;
      return false;
    }
  }

  const ValidationReport r = validate(p);
  if (!r.all_non_ideal || !r.simple) {
    ++stats.rejected_simple;
    return false;
  }
  if (!r.generic()) {
    ++stats.rejected_generic;
    return false;
  }
  if (!r.coherent) {
    ++stats.rejected_coherent;
    return false;
  }
  if (!r.convex) {
    ++stats.rejected_convex;
    return false;
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (std::abs(p.circumcircle(i).radius - p.circumcircle(i + 1).radius) <= 10.0 * tol.eps_id) {
      ++stats.rejected_generic;
      return false;
    }
  }
  try {
    (void)build_graph(p);
    (void)build_evolute(p);
  } catch (const Error&) {
    ++stats.rejected_generic;
    return false;
  }
  return true;
}

void check_spec(const GenSpec& spec, const Tolerances& tol) {
  // A triangle has one circumcircle shared by all three vertices, so the
  // adjacent-radii separation can never hold.
  if (spec.n < 4) throw std::invalid_argument("GenSpec: n must be at least 4");
  if (spec.max_attempts < 1) throw std::invalid_argument("GenSpec: max_attempts must be positive");
  if (spec.family == Family::PerturbedRegular) {
    if (!(spec.radius > 0.0) || spec.radius + spec.jitter >= 1.0 - tol.eps_boundary) {
      throw std::invalid_argument("GenSpec: perturbed-regular radius out of range");
    }
    if (!(spec.jitter >= 0.0)) throw std::invalid_argument("GenSpec: jitter must be non-negative");
    return;
  }
  if (!(spec.r_min > 0.0 && spec.r_min <= spec.r_max && spec.r_max < 1.0 - tol.eps_boundary)) {
    throw std::invalid_argument("GenSpec: radial range must satisfy 0 < r_min <= r_max < 1");
  }
  if (spec.family == Family::Shrink && !(spec.lambda > 0.0 && spec.lambda <= 1.0)) {
    throw std::invalid_argument("GenSpec: lambda must lie in (0, 1]");
  }
}

[[noreturn]] void exhausted(const GenSpec& spec, const GenStats& stats) {
  throw GenerationExhausted(
      "no acceptable polygon after " + std::to_string(stats.attempts) + " attempts (n=" +
      std::to_string(spec.n) + ", seed=" + std::to_string(spec.seed) +
      "; rejected simple=" + std::to_string(stats.rejected_simple) +
      " generic=" + std::to_string(stats.rejected_generic) +
      " coherent=" + std::to_string(stats.rejected_coherent) +
      " convex=" + std::to_string(stats.rejected_convex) + ")",
      stats);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t k) {
  SplitMix64 a(base ^ (n << 32));
  SplitMix64 b(a() + k);
  return b();
}

const char* to_string(Family f) {
  switch (f) {
    case Family::ConvexRandom: return "convex_random";
    case Family::PerturbedRegular: return "perturbed_regular";
    case Family::Shrink: return "shrink";
  }
  return "?";
}

GenSpec default_spec(int n, std::uint64_t seed) {
  GenSpec s;
  s.n = n;
  s.seed = seed;
  // Radial noise has to stay small against the smallest angular gap or most
  // candidates fail coherence; the band narrows as n grows.
  const double half_width = 0.2 / std::max(n, 4);
  s.r_min = 0.5 - half_width;
  s.r_max = 0.5 + half_width;
  return s;
}

Generated random_convex_polygon(const GenSpec& spec, const Tolerances& tol) {
  check_spec(spec, tol);
  SplitMix64 rng(spec.seed);
  GenStats stats;
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<double> angles(n);
  std::vector<Vec2> coords(n);
  while (stats.attempts < spec.max_attempts) {
    ++stats.attempts;
    for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 0; i < n; ++i) {
      const double r = rng.uniform(spec.r_min, spec.r_max);
      coords[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
    }
    try {
      HPolygon p = HPolygon::from_poincare(coords, tol);
      if (accept(p, stats)) return {std::move(p), stats};
    } catch (const DegenerateError&) {
      ++stats.rejected_simple;  // two consecutive angles drew the same value
    }
  }
  exhausted(spec, stats);
}

Generated perturbed_regular(int n, double jitter, std::uint64_t seed, double radius,
                            const Tolerances& tol, int max_attempts) {
  GenSpec spec;
  spec.family = Family::PerturbedRegular;
  spec.n = n;
  spec.jitter = jitter;
  spec.seed = seed;
  spec.radius = radius;
  spec.max_attempts = max_attempts;
  check_spec(spec, tol);

  SplitMix64 rng(seed);
  GenStats stats;
  std::vector<Vec2> coords(static_cast<std::size_t>(n));
  while (stats.attempts < max_attempts) {
    ++stats.attempts;
    for (int i = 0; i < n; ++i) {
      const double theta = kTwoPi * i / n;
      const double dir = rng.uniform(0.0, kTwoPi);
      const double mag = jitter * rng.uniform01();
      coords[static_cast<std::size_t>(i)] = {radius * std::cos(theta) + mag * std::cos(dir),
                                             radius * std::sin(theta) + mag * std::sin(dir)};
    }
    HPolygon p = HPolygon::from_poincare(coords, tol);
    if (accept(p, stats)) return {std::move(p), stats};
  }
  exhausted(spec, stats);
}

Generated generate(const GenSpec& spec, const Tolerances& tol) {
  switch (spec.family) {
    case Family::ConvexRandom:
      return random_convex_polygon(spec, tol);
    case Family::PerturbedRegular:
      return perturbed_regular(spec.n, spec.jitter, spec.seed, spec.radius, tol, spec.max_attempts);
    case Family::Shrink: {
      check_spec(spec, tol);
      Generated g = random_convex_polygon(spec, tol);
      return {shrink(g.polygon, spec.lambda), g.stats};
    }
  }
  throw std::invalid_argument("unknown family");
}

HPolygon shrink(const HPolygon& p, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("shrink: lambda must lie in (0, 1]");
  if (lambda == 1.0) return p;
  std::vector<Vec2> coords;
  coords.reserve(p.size());
  for (const HPoint& v : p.vertices()) {
    const Vec2 u = to_poincare(v);
    coords.push_back({lambda * u.x, lambda * u.y});
  }
  HPolygon out = HPolygon::from_poincare(coords, p.tolerances());
  if (!validate(out).all_pass()) {
    throw ValidationError("shrink: scaled polygon fails validation");
  }
  return out;
}

}  // namespace hyperpoly
