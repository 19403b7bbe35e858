#include "hyperpoly/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hyperpoly/analysis.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/generator.hpp"
#include "hyperpoly/io.hpp"
#include "hyperpoly/render.hpp"

namespace hyperpoly::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string tolerances_path;
  Tolerances tol;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

struct Loaded {
  PolygonDocument doc;
  HPolygon polygon;
  bool reversed;
};

Loaded load(const std::string& path, const Tolerances& tol) {
  PolygonDocument doc = read_document(path, tol);
  HPolygon as_given = to_polygon(doc, tol);
  HPolygon ccw = HPolygon::counterclockwise(as_given.vertices(), tol);
  const bool reversed = !(ccw.vertices()[1].coords() == as_given.vertices()[1].coords());
  return {std::move(doc), std::move(ccw), reversed};
}

json orientation_json(bool reversed) {
  return reversed ? "reversed to counterclockwise" : "as given";
}

// validate -----------------------------------------------------------------

struct ValidateArgs {
  std::string input;
  std::string out;
  bool fast_generic = false;
};

int cmd_validate(const ValidateArgs& a, const Common& c, std::ostream& out) {
  const Loaded l = load(a.input, c.tol);
  const ValidationReport r = validate(l.polygon, {a.fast_generic});
  json j = {{"schema", kSchemaVersion},
            {"command", "validate"},
            {"orientation", orientation_json(l.reversed)},
            {"validation", to_json(r)},
            {"tolerances", to_json(c.tol)}};
  write_output(a.out, j.dump(2) + "\n", out);
  return r.all_pass() ? kPass : kCheckedFailure;
}

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string out;
  bool force = false;
  bool fast_generic = false;
};

int cmd_analyze(const AnalyzeArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.input, c.tol);
  AnalysisOptions opts;
  opts.fast_generic = a.fast_generic;
  const AnalysisReport r = analyze(l.polygon, opts);
  if (!r.validation.all_pass() && !a.force) {
    err << "polygon failed validation; rerun with --force for an exploratory report\n";
    json j = {{"schema", kSchemaVersion},
              {"command", "analyze"},
              {"orientation", orientation_json(l.reversed)},
              {"validation", to_json(r.validation)},
              {"tolerances", to_json(c.tol)}};
    write_output(a.out, j.dump(2) + "\n", out);
    return kCheckedFailure;
  }
  json j = to_json(r);
  j["command"] = "analyze";
  j["orientation"] = orientation_json(l.reversed);
  j["tolerances"] = to_json(c.tol);
  j["document"] = to_json(l.doc);
  write_output(a.out, j.dump(2) + "\n", out);
  return r.all_pass() ? kPass : kCheckedFailure;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  int count = 100;
  std::string n_range = "4..12";
  std::uint64_t seed = 0;
  bool json_stdout = false;
  std::string out;
  unsigned jobs = 1;
  bool fast_generic = false;
  bool inject_edge_flip = false;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string lo = s.substr(0, dots);
    const std::string hi = s.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(s);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range must look like a..b, got '" + s + "'");
  }
}

struct PolygonOutcome {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> generation_error;
  GenStats stats;
  std::optional<AnalysisReport> report;
  std::optional<PolygonDocument> doc;
};

struct CheckTally {
  long pass = 0;
  long fail = 0;
  std::optional<double> max_value;

  void add(const CheckResult& c) {
    if (c.status == CheckStatus::NotAsserted) return;
    if (c.status == CheckStatus::Pass) ++pass;
    else ++fail;
    if (c.value) max_value = max_value ? std::max(*max_value, *c.value) : *c.value;
  }
  json to_json() const {
    return {{"pass", pass}, {"fail", fail},
            {"max_value", max_value ? json(*max_value) : json(nullptr)}};
  }
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_range(a.n_range);
  if (lo > hi) throw UsageError("--n-range is empty");
  if (lo < 4) {
    throw UsageError("verify needs n >= 4: the four-vertex bound concerns polygons with at least four vertices");
  }
  if (a.count < 1) throw UsageError("--count must be positive");

  std::vector<PolygonOutcome> outcomes;
  for (int n = lo; n <= hi; ++n) {
    for (int k = 0; k < a.count; ++k) {
      PolygonOutcome o;
      o.n = n;
      o.k = k;
      o.seed = derive_seed(a.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
      outcomes.push_back(o);
    }
  }

  const auto work = [&](PolygonOutcome& o) {
    try {
      Generated g = random_convex_polygon(default_spec(o.n, o.seed), c.tol);
      o.stats = g.stats;
      AnalysisOptions opts;
      opts.fast_generic = a.fast_generic;
      if (a.inject_edge_flip && o.n == lo && o.k == 0) opts.inject_edge_flip = 0;
      o.report = analyze(g.polygon, opts);
      if (!o.report->all_pass() || !o.report->asserted) o.doc = to_document(g.polygon);
    } catch (const Error& e) {
      o.generation_error = e.what();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(outcomes.size())));
  if (jobs == 1) {
    for (auto& o : outcomes) work(o);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < outcomes.size(); i = next++) work(outcomes[i]);
      });
    }
  }

  // Aggregate in (n, k) order.
  std::vector<std::string> check_names;
  for (const auto& [name, ptr] : AnalysisReport{}.checks()) check_names.push_back(name);
  std::map<std::string, CheckTally> totals;
  json per_n = json::array();
  const PolygonOutcome* first_failure = nullptr;
  long polygons = 0;
  for (int n = lo; n <= hi; ++n) {
    std::map<std::string, CheckTally> tallies;
    std::map<int, long> histogram;
    GenStats gen;
    long failures = 0;
    for (const auto& o : outcomes) {
      if (o.n != n) continue;
      ++polygons;
      gen.attempts += o.stats.attempts;
      gen.rejected_simple += o.stats.rejected_simple;
      gen.rejected_generic += o.stats.rejected_generic;
      gen.rejected_coherent += o.stats.rejected_coherent;
      gen.rejected_convex += o.stats.rejected_convex;
      const bool ok = o.report && o.report->asserted && o.report->all_pass();
      if (!ok) {
        ++failures;
        if (!first_failure) first_failure = &o;
      }
      if (!o.report) continue;
      if (o.report->extremal_count) ++histogram[*o.report->extremal_count];
      for (const auto& [name, check] : o.report->checks()) {
        tallies[name].add(*check);
        totals[name].add(*check);
      }
    }
    json hist = json::object();
    for (const auto& [N, cnt] : histogram) hist[std::to_string(N)] = cnt;
    json checks = json::object();
    for (const auto& name : check_names) checks[name] = tallies[name].to_json();
    per_n.push_back({{"n", n},
                     {"polygons", a.count},
                     {"failures", failures},
                     {"generation", to_json(gen)},
                     {"extremal_histogram", hist},
                     {"checks", checks}});
  }

  json total_checks = json::object();
  for (const auto& name : check_names) total_checks[name] = totals[name].to_json();
  json summary = {{"schema", kSchemaVersion},
                  {"command", "verify"},
                  {"prng", std::string(SplitMix64::kName)},
                  {"seed", a.seed},
                  {"count", a.count},
                  {"n_range", {lo, hi}},
                  {"tolerances", to_json(c.tol)},
                  {"thresholds", to_json(kDefaultThresholds)},
                  {"per_n", per_n},
                  {"totals", {{"polygons", polygons}, {"checks", total_checks}}},
                  {"all_pass", first_failure == nullptr},
                  {"first_failure", nullptr}};
  if (first_failure) {
    json f = {{"n", first_failure->n}, {"k", first_failure->k}, {"seed", first_failure->seed}};
    if (first_failure->generation_error) f["error"] = *first_failure->generation_error;
    if (first_failure->report) {
      json failed = json::array();
      for (const auto& [name, check] : first_failure->report->checks()) {
        if (check->status != CheckStatus::Pass) failed.push_back(name);
      }
      f["failed_checks"] = failed;
    }
    if (first_failure->doc) f["document"] = to_json(*first_failure->doc);
    summary["first_failure"] = f;
  }

  if (!a.out.empty()) write_output(a.out, summary.dump(2) + "\n", out);
  if (a.json_stdout) {
    out << summary.dump(2) << "\n";
  } else {
    out << fmt::format("verified {} polygons, n in {}..{}, seed {}\n", polygons, lo, hi, a.seed);
    out << fmt::format("{:<16}{:>14}{:>16}\n", "check", "pass/total", "max value");
    for (const auto& name : check_names) {
      const CheckTally& t = totals[name];
      out << fmt::format("{:<16}{:>14}{:>16}\n", name, fmt::format("{}/{}", t.pass, t.pass + t.fail),
                         t.max_value ? fmt::format("{:.3e}", *t.max_value) : std::string("-"));
    }
    out << (first_failure ? "FAIL\n" : "ALL PASS\n");
  }
  if (first_failure) {
    err << fmt::format("first failing polygon: n={} k={} seed={}\n", first_failure->n,
                       first_failure->k, first_failure->seed);
    if (first_failure->generation_error) err << *first_failure->generation_error << "\n";
    if (first_failure->doc) err << to_json(*first_failure->doc).dump() << "\n";
    return kCheckedFailure;
  }
  return kPass;
}

// generate -----------------------------------------------------------------

struct GenerateArgs {
  int n = 6;
  int count = 1;
  std::uint64_t seed = 0;
  std::string family = "convex";
  std::optional<double> r_min;
  std::optional<double> r_max;
  double jitter = 1e-2;
  double radius = 0.5;
  double lambda = 1.0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, const Common& c, std::ostream& out) {
  if (a.count < 1) throw UsageError("--count must be positive");
  std::string lines;
  for (int k = 0; k < a.count; ++k) {
    GenSpec spec = default_spec(a.n, derive_seed(a.seed, static_cast<std::uint64_t>(a.n),
                                                 static_cast<std::uint64_t>(k)));
    if (a.family == "convex") {
      spec.family = Family::ConvexRandom;
    } else if (a.family == "perturbed") {
      spec.family = Family::PerturbedRegular;
    } else if (a.family == "shrink") {
      spec.family = Family::Shrink;
    } else {
      throw UsageError("--family must be convex, perturbed or shrink");
    }
    if (a.r_min) spec.r_min = *a.r_min;
    if (a.r_max) spec.r_max = *a.r_max;
    spec.jitter = a.jitter;
    spec.radius = a.radius;
    spec.lambda = a.lambda;
    Generated g = [&] {
      try {
        return generate(spec, c.tol);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    PolygonDocument doc = to_document(g.polygon);
    doc.metadata = {{"prng", std::string(SplitMix64::kName)},
                    {"corpus_seed", a.seed},
                    {"index", k},
                    {"spec", to_json(spec)},
                    {"stats", to_json(g.stats)}};
    lines += to_json(doc).dump() + "\n";
  }
  write_output(a.out, lines, out);
  return kPass;
}

// render -------------------------------------------------------------------

struct RenderArgs {
  std::string input;
  std::string out;
  bool circles = false;
  bool exact_arcs = false;
  bool force = false;
};

int cmd_render(const RenderArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.input, c.tol);
  if (!a.force && !validate(l.polygon).admissible()) {
    err << "polygon failed validation; rerun with --force to draw it anyway\n";
    return kCheckedFailure;
  }
  RenderOptions opts;
  opts.circles = a.circles;
  opts.exact_arcs = a.exact_arcs;
  write_output(a.out, render_svg(l.polygon, opts), out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete curvature, evolutes and four-vertex checks for hyperbolic polygons",
               "hyperpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--tolerances", common.tolerances_path, "JSON file overriding numerical tolerances");

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check a polygon document against the admissibility predicates");
  validate_cmd->add_option("input", va.input, "Polygon document (JSON)")->required();
  validate_cmd->add_option("--out", va.out, "Write the report here instead of stdout");
  validate_cmd->add_flag("--fast-generic", va.fast_generic, "Only test consecutive quadruples for concyclicity");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full curvature / evolute / identity report for one polygon");
  analyze_cmd->add_option("input", aa.input, "Polygon document (JSON)")->required();
  analyze_cmd->add_option("--out", aa.out, "Write the report here instead of stdout");
  analyze_cmd->add_flag("--force", aa.force, "Report on polygons that fail validation (nothing asserted)");
  analyze_cmd->add_flag("--fast-generic", aa.fast_generic, "Only test consecutive quadruples for concyclicity");

  VerifyArgs vf;
  auto* verify_cmd = app.add_subcommand("verify", "Generate random convex polygons and run every check");
  verify_cmd->add_option("--count", vf.count, "Polygons per vertex count")->capture_default_str();
  verify_cmd->add_option("--n-range", vf.n_range, "Vertex counts, a..b")->capture_default_str();
  verify_cmd->add_option("--seed", vf.seed, "Corpus seed")->capture_default_str();
  verify_cmd->add_flag("--json", vf.json_stdout, "Print the summary JSON instead of the table");
  verify_cmd->add_option("--out", vf.out, "Also write the summary JSON here");
  verify_cmd->add_option("--jobs", vf.jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_flag("--fast-generic", vf.fast_generic, "Only test consecutive quadruples for concyclicity");
  verify_cmd->add_flag("--inject-edge-flip", vf.inject_edge_flip, "Harness self-test")->group("");

  GenerateArgs ga;
  auto* generate_cmd = app.add_subcommand("generate", "Write seeded random polygons as JSON lines");
  generate_cmd->add_option("--n", ga.n, "Vertex count")->capture_default_str();
  generate_cmd->add_option("--count", ga.count, "Number of polygons")->capture_default_str();
  generate_cmd->add_option("--seed", ga.seed, "Corpus seed")->capture_default_str();
  generate_cmd->add_option("--family", ga.family, "convex | perturbed | shrink")->capture_default_str();
  generate_cmd->add_option("--r-min", ga.r_min, "Smallest Poincare radius (convex, shrink)");
  generate_cmd->add_option("--r-max", ga.r_max, "Largest Poincare radius (convex, shrink)");
  generate_cmd->add_option("--jitter", ga.jitter, "Vertex offset bound (perturbed)")->capture_default_str();
  generate_cmd->add_option("--radius", ga.radius, "Base Poincare radius (perturbed)")->capture_default_str();
  generate_cmd->add_option("--lambda", ga.lambda, "Shrink factor (shrink)")->capture_default_str();
  generate_cmd->add_option("--out", ga.out, "Output file (default stdout)");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Draw polygon, evolute and markers as SVG");
  render_cmd->add_option("input", ra.input, "Polygon document (JSON)")->required();
  render_cmd->add_option("--out", ra.out, "SVG output file (default stdout)");
  render_cmd->add_flag("--circles", ra.circles, "Also draw the circumcircles");
  render_cmd->add_flag("--exact-arcs", ra.exact_arcs, "Use SVG arcs instead of sampled geodesics");
  render_cmd->add_flag("--force", ra.force, "Draw polygons that fail validation");

  std::vector<const char*> argv{"hyperpoly"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (!common.tolerances_path.empty()) common.tol = read_tolerances(common.tolerances_path);
    if (validate_cmd->parsed()) return cmd_validate(va, common, out);
    if (analyze_cmd->parsed()) return cmd_analyze(aa, common, out, err);
    if (verify_cmd->parsed()) return cmd_verify(vf, common, out, err);
    if (generate_cmd->parsed()) return cmd_generate(ga, common, out);
    if (render_cmd->parsed()) return cmd_render(ra, common, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ExhaustionError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckedFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hyperpoly::cli
