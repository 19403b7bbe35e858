#include "hyperpoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/evolute.hpp"
#include "hyperpoly/identities.hpp"
#include "hyperpoly/io.hpp"

namespace hyperpoly {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotAsserted: return "not asserted";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

std::vector<std::pair<std::string, const CheckResult*>> AnalysisReport::checks() const {
  return {{"proposition1", &proposition1}, {"proposition2", &proposition2},
          {"theorem3", &theorem3},         {"theorem4", &theorem4},
          {"theorem5", &theorem5},         {"theorem6", &theorem6},
          {"gauss_bonnet", &gauss_bonnet}, {"defects", &defects},
          {"decomposition", &decomposition}, {"rearranged", &rearranged}};
}

bool AnalysisReport::all_pass() const {
  for (const auto& [name, c] : checks()) {
    if (c->status == CheckStatus::Fail || c->status == CheckStatus::Error) return false;
  }
  return true;
}

AnalysisReport analyze(const HPolygon& p, const AnalysisOptions& opts) {
  const std::size_t n = p.size();
  const auto idx = [](std::size_t i) { return static_cast<std::ptrdiff_t>(i); };
  AnalysisReport r;
  r.n = n;
  r.thresholds = opts.thresholds;
  r.validation = validate(p, {opts.fast_generic});
  const bool convex_valid = r.validation.all_pass();
  r.asserted = convex_valid && n >= 4;
  // A simple polygon with a reflex vertex is labelled non-convex even when
  // another predicate also fails.
  if (r.validation.all_non_ideal && r.validation.simple && !r.validation.convex) {
    r.scope_note = "not asserted (non-convex)";
  } else if (!convex_valid) {
    r.scope_note = "not asserted (invalid polygon)";
  } else if (n < 4) {
    r.scope_note = "not asserted (n < 4)";
  }

  r.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    VertexRecord& v = r.vertices[i];
    v.index = i;
    if (p.has_left_angle(idx(i))) v.left_angle = p.left_angle(idx(i));
    try {
      v.sign = vertex_sign(p, idx(i));
    } catch (const Error&) {
    }
    try {
      const Circle& c = p.circumcircle(idx(i));
      v.radius = c.radius;
      v.center = to_poincare(c.center);
    } catch (const Error&) {
    }
  }

  std::optional<CurvatureGraph> graph;
  try {
    graph = build_graph(p);
    if (opts.inject_edge_flip && *opts.inject_edge_flip < n) {
      auto dirs = graph->edge_dir;
      auto& d = dirs[*opts.inject_edge_flip];
      d = d == EdgeDir::Up ? EdgeDir::Down : EdgeDir::Up;
      graph = graph_from_directions(std::move(dirs));
    }
  } catch (const Error& e) {
    r.errors.push_back(std::string("curvature graph: ") + e.what());
  }
  if (graph) {
    for (std::size_t i = 0; i < n; ++i) {
      r.vertices[i].edge_dir = graph->edge_dir[i];
      r.vertices[i].extremal = graph->extremal[i];
      r.vertices[i].vertex_index = vertex_index(*graph, i);
    }
    r.extremal_count = graph->extremal_count();
    r.l_plus = graph->l_plus;
    r.l_minus = graph->l_minus;
  }

  if (convex_valid) {
    try {
      for (std::size_t i = 0; i < n; ++i) r.vertices[i].radii_dir = radii_compare(p, idx(i));
    } catch (const Error& e) {
      r.errors.push_back(std::string("radii comparison: ") + e.what());
    }
  }

  std::optional<Evolute> evolute;
  try {
    evolute = build_evolute(p);
  } catch (const Error& e) {
    r.errors.push_back(std::string("evolute: ") + e.what());
  }
  if (evolute) {
    for (std::size_t i = 0; i < n; ++i) {
      r.vertices[i].evolute_left_angle = evolute->left_angles[i];
      r.vertices[i].cusp = evolute->cusp[i];
      r.vertices[i].gap = evolute->gap[i];
    }
    r.density_evolute = density(*evolute).value;
  }
  try {
    r.density_polygon = density(p).value;
  } catch (const Error& e) {
    r.errors.push_back(std::string("density: ") + e.what());
  }

  if (convex_valid) {
    try {
      r.area = polygon_area(p);
    } catch (const Error& e) {
      r.errors.push_back(std::string("area: ") + e.what());
    }
    if (evolute) {
      try {
        double dsum = 0.0;
        double asum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const DefectRecord d = quadrilateral_defect(p, *evolute, i);
          VertexRecord& v = r.vertices[i];
          v.delta = d.delta;
          v.alpha = d.alpha;
          v.quad_area = d.quad_area;
          v.angle_at_prev_midpoint = d.angle_at_prev_midpoint;
          v.angle_at_next_midpoint = d.angle_at_next_midpoint;
          dsum += d.delta;
          asum += d.alpha;
        }
        r.defect_sum = dsum;
        r.alpha_sum = asum;
      } catch (const Error& e) {
        r.errors.push_back(std::string("quadrilateral defects: ") + e.what());
      }
    }
  }

  // Every check is evaluated when its inputs exist; it only counts as
  // pass/fail for asserted (valid convex, n >= 4) inputs.
  const CheckThresholds& th = opts.thresholds;
  const auto settle = [&](CheckResult& c, bool computable, bool pass) {
    if (!computable) {
      c.status = r.asserted ? CheckStatus::Error : CheckStatus::NotAsserted;
      c.note = r.asserted ? "inputs unavailable" : r.scope_note;
      return;
    }
    if (!r.asserted) {
      c.status = CheckStatus::NotAsserted;
      c.note = r.scope_note;
      return;
    }
    c.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  };

  {
    CheckResult& c = r.proposition1;
    const bool ok = graph && convex_valid &&
                    std::all_of(r.vertices.begin(), r.vertices.end(),
                                [](const VertexRecord& v) { return v.radii_dir.has_value(); });
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) {
        if (r.vertices[i].edge_dir != r.vertices[i].radii_dir) c.mismatches.push_back(i);
      }
      c.value = static_cast<double>(c.mismatches.size());
    }
    settle(c, ok, c.mismatches.empty());
  }
  {
    CheckResult& c = r.proposition2;
    bool pass = false;
    if (graph) {
      int total = 0;
      for (std::size_t i = 0; i < n; ++i) total += vertex_index(*graph, i);
      c.value = total;
      pass = poincare_hopf_check(*graph);
    }
    // Holds for any cycle graph, so it is asserted whenever the graph exists.
    if (graph) {
      c.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
      settle(c, false, false);
    }
  }
  {
    CheckResult& c = r.theorem3;
    const bool ok = graph && evolute;
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) {
        const bool extremal = graph->extremal[i] != Extremal::None;
        bool bad = extremal != evolute->cusp[i];
        if (convex_valid) {
          const double g = evolute->gap[i];
          bad = bad || (extremal ? !(g > kPi) : !(g > 0.0 && g < kPi));
        }
        if (bad) c.mismatches.push_back(i);
      }
      c.value = static_cast<double>(c.mismatches.size());
    }
    settle(c, ok, c.mismatches.empty());
  }
  {
    CheckResult& c = r.theorem4;
    if (r.density_evolute) c.value = *r.density_evolute;
    settle(c, r.density_evolute.has_value(),
           r.density_evolute && *r.density_evolute <= -1.0 + th.theorem4_slack);
  }
  {
    CheckResult& c = r.theorem5;
    const bool ok = r.density_polygon && r.density_evolute && r.extremal_count && r.defect_sum;
    if (ok) {
      Theorem5Terms t{*r.density_polygon, *r.density_evolute, *r.extremal_count, *r.defect_sum};
      c.value = t.residual();
    }
    settle(c, ok, ok && *c.value < th.theorem5_residual);
  }
  {
    CheckResult& c = r.theorem6;
    if (r.extremal_count) c.value = *r.extremal_count;
    settle(c, r.extremal_count.has_value(),
           r.extremal_count && theorem6_check(*r.extremal_count).pass);
  }
  {
    CheckResult& c = r.gauss_bonnet;
    const bool ok = r.density_polygon && r.area;
    if (ok) c.value = std::abs(*r.density_polygon - 1.0 - *r.area / (2.0 * kPi));
    settle(c, ok, ok && *c.value < th.gauss_bonnet);
  }
  {
    CheckResult& c = r.defects;
    const bool ok = r.defect_sum.has_value();
    double worst_area = 0.0;
    bool pass = true;
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) {
        const VertexRecord& v = r.vertices[i];
        const double area_err = std::abs(*v.delta - *v.quad_area);
        const double right_err = std::max(std::abs(*v.angle_at_prev_midpoint - kPi / 2),
                                          std::abs(*v.angle_at_next_midpoint - kPi / 2));
        worst_area = std::max(worst_area, area_err);
        if (!(area_err < th.defect_area && right_err < th.right_angle && *v.delta > 0.0)) {
          c.mismatches.push_back(i);
          pass = false;
        }
      }
      c.value = worst_area;
    }
    settle(c, ok, pass);
  }
  {
    CheckResult& c = r.decomposition;
    const bool ok = r.defect_sum && graph && evolute;
    if (ok) {
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double expected =
            (graph->extremal[i] != Extremal::None ? kPi : 0.0) + *r.vertices[i].delta;
        const double err = std::abs(evolute->gap[i] - expected);
        worst = std::max(worst, err);
        if (!(err < th.decomposition)) c.mismatches.push_back(i);
      }
      c.value = worst;
    }
    settle(c, ok, c.mismatches.empty());
  }
  {
    CheckResult& c = r.rearranged;
    const bool ok = r.alpha_sum && r.density_evolute && r.extremal_count;
    if (ok) c.value = std::abs(*r.alpha_sum / kPi - 2.0 * *r.density_evolute - *r.extremal_count);
    settle(c, ok, ok && *c.value < th.rearranged);
  }
  return r;
}

namespace {

using nlohmann::json;

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename E>
json opt_enum(const std::optional<E>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

json to_json(const CheckResult& c) {
  // Unasserted checks carry their reason in the status, e.g.
  // "not asserted (non-convex)".
  const bool reason = c.status == CheckStatus::NotAsserted && !c.note.empty();
  json j = {{"status", reason ? c.note : std::string(to_string(c.status))},
            {"value", opt(c.value)}};
  if (!c.mismatches.empty()) j["mismatches"] = c.mismatches;
  if (!c.note.empty() && !reason) j["note"] = c.note;
  return j;
}

}  // namespace

json to_json(const CheckThresholds& t) {
  return {{"theorem5_residual", t.theorem5_residual}, {"theorem4_slack", t.theorem4_slack},
          {"gauss_bonnet", t.gauss_bonnet},           {"defect_area", t.defect_area},
          {"right_angle", t.right_angle},             {"decomposition", t.decomposition},
          {"rearranged", t.rearranged}};
}

json to_json(const AnalysisReport& r) {
  json vertices = json::array();
  for (const VertexRecord& v : r.vertices) {
    vertices.push_back({
        {"index", v.index},
        {"left_angle", opt(v.left_angle)},
        {"sign", opt_enum(v.sign)},
        {"radius", opt(v.radius)},
        {"center", v.center ? json::array({v.center->x, v.center->y}) : json(nullptr)},
        {"edge_dir", opt_enum(v.edge_dir)},
        {"radii_dir", opt_enum(v.radii_dir)},
        {"extremal", opt_enum(v.extremal)},
        {"vertex_index", opt(v.vertex_index)},
        {"evolute_left_angle", opt(v.evolute_left_angle)},
        {"cusp", opt(v.cusp)},
        {"gap", opt(v.gap)},
        {"delta", opt(v.delta)},
        {"alpha", opt(v.alpha)},
        {"quad_area", opt(v.quad_area)},
        {"angle_at_prev_midpoint", opt(v.angle_at_prev_midpoint)},
        {"angle_at_next_midpoint", opt(v.angle_at_next_midpoint)},
    });
  }
  json checks = json::object();
  for (const auto& [name, c] : r.checks()) checks[name] = to_json(*c);

  json j = {
      {"schema", kSchemaVersion},
      {"n", r.n},
      {"asserted", r.asserted},
      {"validation", to_json(r.validation)},
      {"vertices", vertices},
      {"aggregates",
       {{"density_polygon", opt(r.density_polygon)},
        {"density_evolute", opt(r.density_evolute)},
        {"area", opt(r.area)},
        {"extremal_count", opt(r.extremal_count)},
        {"l_plus", opt(r.l_plus)},
        {"l_minus", opt(r.l_minus)},
        {"defect_sum", opt(r.defect_sum)},
        {"alpha_sum", opt(r.alpha_sum)}}},
      {"checks", checks},
      {"thresholds", to_json(r.thresholds)},
      {"errors", r.errors},
      {"all_pass", r.all_pass()},
  };
  if (!r.scope_note.empty()) j["scope_note"] = r.scope_note;
  return j;
}

}  // namespace hyperpoly
