#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/evolute.hpp"
#include "hyperpoly/generator.hpp"
#include "hyperpoly/identities.hpp"
#include "hyperpoly/io.hpp"
#include "support.hpp"

using namespace hyperpoly;
using namespace hyperpoly::testing;

namespace {

long rejections(const GenStats& s) {
  return s.rejected_simple + s.rejected_generic + s.rejected_coherent + s.rejected_convex;
}

bool same_vertices(const HPolygon& a, const HPolygon& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.vertices()[i].coords() == b.vertices()[i].coords())) return false;
  }
  return true;
}

double defect_sum(const HPolygon& p) { return theorem5_terms(p).defect_sum; }

}  // namespace

TEST_SUITE("generator") {

TEST_CASE("splitmix64 reference outputs") {
  // Published reference stream for seed 0.
  SplitMix64 rng(0);
  CHECK(rng() == 0xE220A8397B1DCDAFULL);
  CHECK(rng() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng() == 0x06C45D188009454FULL);
  SplitMix64 u(99);
  for (int k = 0; k < 10000; ++k) {
    const double x = u.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(7, 4, 0) == derive_seed(7, 4, 0));
  CHECK(derive_seed(7, 4, 0) != derive_seed(7, 4, 1));
  CHECK(derive_seed(7, 4, 0) != derive_seed(7, 5, 0));
  CHECK(derive_seed(7, 4, 0) != derive_seed(8, 4, 0));
}

TEST_CASE("generation is deterministic") {
  GenSpec spec;
  spec.n = 4;
  spec.seed = 42;
  spec.r_min = 0.2;
  spec.r_max = 0.4;
  const Generated a = random_convex_polygon(spec);
  const Generated b = random_convex_polygon(spec);
  CHECK(same_vertices(a.polygon, b.polygon));
  CHECK(a.stats.attempts == b.stats.attempts);
  CHECK(a.stats.rejected_coherent == b.stats.rejected_coherent);
}

TEST_CASE("returned polygons pass validation and account for every attempt") {
  for (int n = 4; n <= 12; ++n) {
    for (std::uint64_t k = 0; k < 30; ++k) {
      const Generated g = random_convex_polygon(default_spec(n, derive_seed(61, static_cast<std::uint64_t>(n), k)));
      CHECK(g.polygon.size() == static_cast<std::size_t>(n));
      CHECK(validate(g.polygon).all_pass());
      CHECK(g.stats.attempts == 1 + rejections(g.stats));
      for (std::size_t i = 0; i < g.polygon.size(); ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i);
        CHECK(std::abs(g.polygon.circumcircle(j).radius - g.polygon.circumcircle(j + 1).radius) > 1e-6);
      }
    }
  }
}

TEST_CASE("far-out radii trigger coherence rejections") {
  GenSpec spec;
  spec.n = 12;
  spec.r_min = 0.5;
  spec.r_max = 0.95;
  spec.max_attempts = 100;
  long coherent = 0;
  long attempts = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    spec.seed = derive_seed(62, 12, k);
    GenStats stats;
    try {
      stats = random_convex_polygon(spec).stats;
    } catch (const GenerationExhausted& e) {
      stats = e.stats();
      CHECK(stats.attempts == spec.max_attempts);
      CHECK(stats.attempts == rejections(stats));
    }
    coherent += stats.rejected_coherent;
    attempts += stats.attempts;
  }
  CHECK(coherent > 0);
  CHECK(coherent > attempts / 10);
}

TEST_CASE("perturbed regular polygons") {
  CHECK_THROWS_AS(perturbed_regular(6, 0.0, 1, 0.5, kDefaultTolerances, 50), ExhaustionError);
  for (int n = 4; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Generated g = perturbed_regular(n, 1e-2, seed);
      CHECK(validate(g.polygon).all_pass());
      CHECK(theorem6_check(g.polygon).pass);
      CHECK(g.stats.attempts == 1 + rejections(g.stats));
      // Every vertex stays within the jitter of the regular position.
      for (std::size_t i = 0; i < g.polygon.size(); ++i) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        const Vec2 u = to_poincare(g.polygon.vertices()[i]);
        CHECK(std::hypot(u.x - 0.5 * std::cos(phi), u.y - 0.5 * std::sin(phi)) <= 1e-2 + 1e-12);
      }
    }
  }
}

TEST_CASE("pinned fixture regenerates from its seed") {
  const HPolygon pinned = to_polygon(read_document(data_path("perturbed_hexagon.json")));
  const Generated g = perturbed_regular(6, 1e-2, derive_seed(2024, 6, 0));
  REQUIRE(g.polygon.size() == pinned.size());
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    CHECK(hdist(g.polygon.vertices()[i], pinned.vertices()[i]) < 1e-12);
  }
}

TEST_CASE("shrink") {
  const Generated g = random_convex_polygon(default_spec(7, 63));
  CHECK(same_vertices(shrink(g.polygon, 1.0), g.polygon));
  const HPolygon small = shrink(g.polygon, 0.01);
  CHECK(defect_sum(small) < defect_sum(g.polygon));
  CHECK(std::abs(density(small).value - 1.0) < 1e-4);
  for (std::size_t i = 0; i < small.size(); ++i) {
    const Vec2 a = to_poincare(small.vertices()[i]);
    const Vec2 b = to_poincare(g.polygon.vertices()[i]);
    CHECK(std::abs(a.x - 0.01 * b.x) < 1e-15);
    CHECK(std::abs(a.y - 0.01 * b.y) < 1e-15);
  }
  CHECK_THROWS_AS(shrink(g.polygon, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(shrink(g.polygon, 1.5), std::invalid_argument);
}

TEST_CASE("generate dispatches on family") {
  GenSpec spec = default_spec(6, 64);
  spec.family = Family::Shrink;
  spec.lambda = 0.1;
  const Generated s = generate(spec);
  spec.family = Family::ConvexRandom;
  const Generated c = generate(spec);
  CHECK(same_vertices(s.polygon, shrink(c.polygon, 0.1)));
  spec.family = Family::PerturbedRegular;
  CHECK(validate(generate(spec).polygon).all_pass());
}

TEST_CASE("invalid specs are rejected") {
  GenSpec spec = default_spec(6, 1);
  spec.n = 3;
  CHECK_THROWS_AS(random_convex_polygon(spec), std::invalid_argument);
  spec = default_spec(6, 1);
  spec.r_max = 1.0;
  CHECK_THROWS_AS(random_convex_polygon(spec), std::invalid_argument);
  spec = default_spec(6, 1);
  spec.r_min = 0.7;
  spec.r_max = 0.6;
  CHECK_THROWS_AS(random_convex_polygon(spec), std::invalid_argument);
  CHECK_THROWS_AS(perturbed_regular(6, -1.0, 1), std::invalid_argument);
}

TEST_CASE("extremal counts above four occur") {
  std::map<int, int> histogram;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const Generated g = random_convex_polygon(default_spec(8, derive_seed(65, 8, k)));
    ++histogram[build_graph(g.polygon).extremal_count()];
  }
  CHECK(histogram.rbegin()->first >= 6);
  CHECK(histogram.begin()->first >= 4);
}

}  // TEST_SUITE
