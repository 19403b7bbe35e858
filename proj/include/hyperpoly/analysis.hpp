#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperpoly/curvature.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

/// Pass/fail thresholds for the executable theorem checks.
struct CheckThresholds {
  double theorem5_residual = 1e-7;
  double theorem4_slack = 1e-9;        ///< den(E) <= -1 + slack
  double gauss_bonnet = 1e-8;          ///< |den(P) - 1 - Area/2pi|
  double defect_area = 1e-8;           ///< |delta_i - quadrilateral area|
  double right_angle = 1e-9;           ///< midpoint angles vs pi/2
  double decomposition = 1e-8;         ///< gap_i vs delta_i or pi + delta_i
  double rearranged = 1e-7;            ///< |sum(alpha)/pi - 2 den(E) - N|
};

inline constexpr CheckThresholds kDefaultThresholds{};

enum class CheckStatus { Pass, Fail, NotAsserted, Error };
const char* to_string(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::NotAsserted;
  std::optional<double> value;           ///< residual or measured quantity
  std::vector<std::size_t> mismatches;   ///< offending vertex indices
  std::string note;
};

struct VertexRecord {
  std::size_t index = 0;
  std::optional<double> left_angle;
  std::optional<VertexSign> sign;
  std::optional<double> radius;
  std::optional<Vec2> center;                 ///< O_i in Poincare coordinates
  std::optional<EdgeDir> edge_dir;            ///< compare(i)
  std::optional<EdgeDir> radii_dir;           ///< radii_compare(i), convex only
  std::optional<Extremal> extremal;
  std::optional<int> vertex_index;
  std::optional<double> evolute_left_angle;
  std::optional<bool> cusp;
  std::optional<double> gap;                  ///< angle(O_i) - angle(V_i)
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> quad_area;
  std::optional<double> angle_at_prev_midpoint;
  std::optional<double> angle_at_next_midpoint;
};

struct AnalysisOptions {
  bool fast_generic = false;
  /// Test hook: reverse this edge of the curvature graph before the checks run.
  std::optional<std::size_t> inject_edge_flip;
  CheckThresholds thresholds = kDefaultThresholds;
};

struct AnalysisReport {
  ValidationReport validation;
  std::size_t n = 0;
  bool asserted = false;      ///< theorems asserted (valid convex polygon, n >= 4)
  std::string scope_note;     ///< why theorems are not asserted, if they are not

  std::vector<VertexRecord> vertices;

  std::optional<double> density_polygon;
  std::optional<double> density_evolute;
  std::optional<double> area;
  std::optional<int> extremal_count;
  std::optional<int> l_plus;
  std::optional<int> l_minus;
  std::optional<double> defect_sum;
  std::optional<double> alpha_sum;

  CheckResult proposition1;   ///< compare agrees with radii comparison
  CheckResult proposition2;   ///< l+ == l- and index sum 0
  CheckResult theorem3;       ///< extremal iff cusp, plus gap ranges
  CheckResult theorem4;
  CheckResult theorem5;
  CheckResult theorem6;
  CheckResult gauss_bonnet;
  CheckResult defects;        ///< defect/area duality and right angles
  CheckResult decomposition;  ///< per-vertex gap decomposition
  CheckResult rearranged;     ///< alpha form of the identity

  std::vector<std::string> errors;  ///< stages that could not be computed
  CheckThresholds thresholds;

  /// No asserted check failed or errored.
  bool all_pass() const;
  std::vector<std::pair<std::string, const CheckResult*>> checks() const;
};

AnalysisReport analyze(const HPolygon& p, const AnalysisOptions& opts = {});

nlohmann::json to_json(const CheckThresholds& t);
nlohmann::json to_json(const AnalysisReport& r);

}  // namespace hyperpoly
