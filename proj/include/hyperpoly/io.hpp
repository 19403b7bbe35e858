#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/generator.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

inline constexpr int kSchemaVersion = 1;

/// Malformed document or configuration file.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class CoordinateModel { Poincare, Hyperboloid };

/// On-disk polygon: vertices as Poincare [x, y] or hyperboloid [x0, x1, x2]
/// arrays. Keys other than model / vertices / metadata are kept in `extra`
/// and written back unchanged.
struct PolygonDocument {
  CoordinateModel model = CoordinateModel::Poincare;
  std::vector<std::vector<double>> vertices;
  nlohmann::json metadata = nlohmann::json::object();
  nlohmann::json extra = nlohmann::json::object();
};

/// Throws ParseError on structural problems (missing keys, wrong arity,
/// non-finite or out-of-model coordinates, fewer than 3 vertices).
PolygonDocument parse_document(const nlohmann::json& j, const Tolerances& tol = kDefaultTolerances);
PolygonDocument parse_document_text(std::string_view text, const Tolerances& tol = kDefaultTolerances);
nlohmann::json to_json(const PolygonDocument& doc);

/// Polygon in the document's vertex order (no orientation normalization).
HPolygon to_polygon(const PolygonDocument& doc, const Tolerances& tol = kDefaultTolerances);
PolygonDocument to_document(const HPolygon& p, CoordinateModel model = CoordinateModel::Poincare);

/// Reads one document from a file (the first non-empty line of a JSON-lines
/// corpus also parses). Throws ParseError, or std::runtime_error on I/O.
PolygonDocument read_document(const std::string& path, const Tolerances& tol = kDefaultTolerances);

/// Reads every non-empty line of a JSON-lines corpus.
std::vector<PolygonDocument> read_corpus(const std::string& path,
                                         const Tolerances& tol = kDefaultTolerances);

Tolerances parse_tolerances(const nlohmann::json& j);
Tolerances read_tolerances(const std::string& path);
nlohmann::json to_json(const Tolerances& tol);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const GenSpec& spec);
nlohmann::json to_json(const GenStats& stats);

std::string read_text_file(const std::string& path);

}  // namespace hyperpoly
