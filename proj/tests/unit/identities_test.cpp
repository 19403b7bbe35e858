#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/evolute.hpp"
#include "hyperpoly/identities.hpp"
#include "hyperpoly/io.hpp"
#include "support.hpp"

using namespace hyperpoly;
using namespace hyperpoly::testing;

namespace {

constexpr double kPi = std::numbers::pi;

HPolygon load(const std::string& name) { return to_polygon(read_document(data_path(name))); }

std::vector<HPolygon> corpus(std::uint64_t seed, int count) {
  std::vector<HPolygon> out;
  for (int k = 0; k < count; ++k) {
    const int n = 4 + k % 9;
    out.push_back(random_convex_polygon(default_spec(n, derive_seed(seed, n, k))).polygon);
  }
  return out;
}

HPolygon scaled(const HPolygon& p, double lambda) {
  std::vector<Vec2> u;
  for (const HPoint& v : p.vertices()) u.push_back({lambda * to_poincare(v).x, lambda * to_poincare(v).y});
  return HPolygon::from_poincare(u);
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("density from angles") {
  // A Euclidean square: four right angles.
  const std::vector<double> square(4, kPi / 2.0);
  CHECK(density_from_angles(square) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> straight(5, kPi);
  CHECK(density_from_angles(straight) == 0.0);
}

TEST_CASE("triangle density is one plus area over two pi") {
  const HPolygon t = HPolygon::from_poincare(std::vector<Vec2>{{0.5, 0.1}, {-0.3, 0.4}, {-0.2, -0.5}});
  const double s = t.left_angle(0) + t.left_angle(1) + t.left_angle(2);
  const double d = density(t).value;
  CHECK(density(t).source == DensitySource::Polygon);
  CHECK(std::abs(d - (3.0 * kPi - s) / (2.0 * kPi)) < 1e-14);
  CHECK(std::abs(polygon_area(t) - (kPi - s)) < 1e-14);
  CHECK(std::abs(d - 1.0 - polygon_area(t) / (2.0 * kPi)) < 1e-14);
  CHECK(d > 1.0);
}

TEST_CASE("tiny triangle area matches the Euclidean area") {
  const std::vector<Vec2> u{{1e-3 * 0.5, 1e-3 * 0.1}, {-1e-3 * 0.3, 1e-3 * 0.4}, {-1e-3 * 0.2, -1e-3 * 0.5}};
  const HPolygon t = HPolygon::from_poincare(u);
  // The disk metric is 2|du|/(1-|u|^2): area element 4 du at the origin.
  const double euclid = 4.0 * shoelace(u);
  CHECK(std::abs(polygon_area(t) - euclid) / euclid < 1e-4);
}

TEST_CASE("area is additive across a diagonal") {
  const HPolygon q = load("convex_quad.json");
  const double whole = polygon_area(q);
  const double a = triangle_area(q.vertex(0), q.vertex(1), q.vertex(2));
  const double b = triangle_area(q.vertex(0), q.vertex(2), q.vertex(3));
  const double c = triangle_area(q.vertex(1), q.vertex(2), q.vertex(3));
  const double d = triangle_area(q.vertex(1), q.vertex(3), q.vertex(0));
  CHECK(std::abs(whole - (a + b)) < 1e-10);
  CHECK(std::abs(whole - (c + d)) < 1e-10);
  CHECK_THROWS_AS(polygon_area(load("dart.json")), ValidationError);
}

TEST_CASE("Gauss-Bonnet density") {
  for (const HPolygon& p : corpus(51, 1000)) {
    const double d = density(p).value;
    CHECK(d > 1.0);
    CHECK(std::abs(d - 1.0 - polygon_area(p) / (2.0 * kPi)) < 1e-8);
  }
}

TEST_CASE("Euclidean limit of the density") {
  const HPolygon p = load("perturbed_hexagon.json");
  double last = INFINITY;
  for (double lambda : {1.0, 0.5, 0.1, 0.01}) {
    const double d = density(scaled(p, lambda)).value;
    CHECK(d < last);
    last = d;
  }
  CHECK(std::abs(last - 1.0) < 1e-4);
}

TEST_CASE("quadrilateral defects") {
  for (const HPolygon& p : corpus(52, 500)) {
    const Evolute e = build_evolute(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const DefectRecord d = quadrilateral_defect(p, e, i);
      CHECK(d.index == i);
      CHECK(std::abs(d.angle_at_prev_midpoint - kPi / 2.0) < 1e-9);
      CHECK(std::abs(d.angle_at_next_midpoint - kPi / 2.0) < 1e-9);
      CHECK(std::abs(d.delta - d.quad_area) < 1e-8);
      CHECK(std::abs(d.delta - (kPi - p.left_angle(static_cast<std::ptrdiff_t>(i)) - d.alpha)) < 1e-15);
      CHECK(d.delta > 0.0);
      CHECK(defect_consistent(d));
    }
  }
}

TEST_CASE("defects vanish in the Euclidean limit") {
  const HPolygon p = load("perturbed_hexagon.json");
  double last = INFINITY;
  for (double lambda : {1.0, 0.5, 0.1, 0.01}) {
    const HPolygon q = scaled(p, lambda);
    const Evolute e = build_evolute(q);
    double worst = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) worst = std::max(worst, quadrilateral_defect(q, e, i).delta);
    CHECK(worst < last);
    last = worst;
  }
  CHECK(last < 1e-3);
}

TEST_CASE("the central identity holds with independently computed terms") {
  double worst = 0.0;
  for (const HPolygon& p : corpus(53, 1000)) {
    const Theorem5Terms t = theorem5_terms(p);
    const Evolute e = build_evolute(p);
    CHECK(t.density_polygon == density(p).value);
    CHECK(t.density_evolute == density(e).value);
    CHECK(t.extremal_count == build_graph(p).extremal_count());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += quadrilateral_defect(p, e, i).delta;
    CHECK(std::abs(t.defect_sum - sum) < 1e-15 * p.size());
    const double r = theorem5_residual(p);
    CHECK(r == t.residual());
    CHECK(r < 1e-7);
    worst = std::max(worst, r);
  }
  MESSAGE("largest residual: " << worst);
}

TEST_CASE("per-vertex decomposition and the alpha form") {
  for (const HPolygon& p : corpus(54, 500)) {
    const CurvatureGraph g = build_graph(p);
    const Evolute e = build_evolute(p);
    double alpha = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const DefectRecord d = quadrilateral_defect(p, e, i);
      alpha += d.alpha;
      const double expected = g.extremal[i] == Extremal::None ? d.delta : kPi + d.delta;
      CHECK(std::abs(e.gap[i] - expected) < 1e-8);
    }
    CHECK(std::abs(alpha / kPi - 2.0 * density(e).value - g.extremal_count()) < 1e-7);
  }
}

TEST_CASE("evolute density is at most minus one") {
  for (const HPolygon& p : corpus(55, 1000)) {
    CHECK(density(build_evolute(p)).value <= -1.0 + 1e-9);
    CHECK(theorem4_check(p));
    CHECK(density(build_evolute(p)).source == DensitySource::Evolute);
  }
}

TEST_CASE("Euclidean limit of the evolute density") {
  const HPolygon p = load("perturbed_hexagon.json");
  const HPolygon q = scaled(p, 0.01);
  const int n_ext = build_graph(q).extremal_count();
  CHECK(std::abs(density(build_evolute(q)).value - (1.0 - n_ext / 2.0)) < 1e-3);
}

TEST_CASE("four-vertex count") {
  CHECK_FALSE(theorem6_check(2).pass);
  CHECK_FALSE(theorem6_check(3).pass);
  CHECK(theorem6_check(4).pass);
  CHECK_FALSE(theorem6_check(5).pass);
  CHECK(theorem6_check(6).pass);
  for (const HPolygon& p : corpus(56, 1000)) {
    const Theorem6Result r = theorem6_check(p);
    CHECK(r.pass);
    CHECK(r.extremal_count >= 4);
    CHECK(r.extremal_count % 2 == 0);
  }
}

TEST_CASE("four-vertex count near the concyclic family") {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Generated g = perturbed_regular(n, 1e-2, seed);
      CHECK(theorem6_check(g.polygon).pass);
    }
  }
}

TEST_CASE("scope guards") {
  CHECK_THROWS_AS(theorem5_residual(load("dart.json")), ValidationError);
  const HPolygon t = HPolygon::from_poincare(std::vector<Vec2>{{0.5, 0.1}, {-0.3, 0.4}, {-0.2, -0.5}});
  CHECK_THROWS_AS(theorem5_terms(t), ValidationError);
}

}  // TEST_SUITE
