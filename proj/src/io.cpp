#include "hyperpoly/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolygonDocument parse_document(const json& j, const Tolerances& tol) {
  if (!j.is_object()) throw ParseError("polygon document must be a JSON object");
  PolygonDocument doc;

  const auto model = j.find("model");
  if (model == j.end() || !model->is_string()) throw ParseError("missing string field 'model'");
  if (*model == "poincare") {
    doc.model = CoordinateModel::Poincare;
  } else if (*model == "hyperboloid") {
    doc.model = CoordinateModel::Hyperboloid;
  } else {
    throw ParseError("unknown model '" + model->get<std::string>() + "'");
  }
  const std::size_t arity = doc.model == CoordinateModel::Poincare ? 2 : 3;

  const auto verts = j.find("vertices");
  if (verts == j.end() || !verts->is_array()) throw ParseError("missing array field 'vertices'");
  if (verts->size() < 3) throw ParseError("a polygon needs at least 3 vertices");
  for (const json& v : *verts) {
    if (!v.is_array() || v.size() != arity) {
      throw ParseError("vertex must be an array of " + std::to_string(arity) + " numbers");
    }
    std::vector<double> c;
    for (const json& x : v) {
      if (!x.is_number()) throw ParseError("vertex coordinate is not a number");
      const double d = x.get<double>();
      if (!std::isfinite(d)) throw ParseError("vertex coordinate is not finite");
      c.push_back(d);
    }
    doc.vertices.push_back(std::move(c));
  }

  if (const auto meta = j.find("metadata"); meta != j.end()) {
    if (!meta->is_object()) throw ParseError("'metadata' must be an object");
    doc.metadata = *meta;
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "model" && key != "vertices" && key != "metadata") doc.extra[key] = value;
  }

  // Coordinates must describe points of the model.
  try {
    (void)to_polygon(doc, tol);
  } catch (const SizeError& e) {
    throw ParseError(e.what());
  } catch (const BoundaryError& e) {
    throw ParseError(std::string("vertex outside the model: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("vertex outside the model: ") + e.what());
  } catch (const DegenerateError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

PolygonDocument parse_document_text(std::string_view text, const Tolerances& tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j, tol);
}

json to_json(const PolygonDocument& doc) {
  json j = doc.extra;
  j["model"] = doc.model == CoordinateModel::Poincare ? "poincare" : "hyperboloid";
  j["vertices"] = doc.vertices;
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

HPolygon to_polygon(const PolygonDocument& doc, const Tolerances& tol) {
  std::vector<HPoint> pts;
  pts.reserve(doc.vertices.size());
  for (const auto& c : doc.vertices) {
    if (doc.model == CoordinateModel::Poincare) {
      pts.push_back(from_poincare({c[0], c[1]}, tol));
    } else {
      pts.push_back(HPoint::from_coords({c[0], c[1], c[2]}, tol));
    }
  }
  return HPolygon(std::move(pts), tol);
}

PolygonDocument to_document(const HPolygon& p, CoordinateModel model) {
  PolygonDocument doc;
  doc.model = model;
  for (const HPoint& v : p.vertices()) {
    if (model == CoordinateModel::Poincare) {
      const Vec2 u = to_poincare(v);
      doc.vertices.push_back({u.x, u.y});
    } else {
      doc.vertices.push_back({v.x0(), v.x1(), v.x2()});
    }
  }
  return doc;
}

PolygonDocument read_document(const std::string& path, const Tolerances& tol) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // A JSON-lines corpus reads as its first document.
    const auto nl = text.find('\n');
    if (nl == std::string::npos || text.find_first_not_of(" \t\r\n", nl) == std::string::npos) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return read_corpus(path, tol).front();
  }
  return parse_document(j, tol);
}

std::vector<PolygonDocument> read_corpus(const std::string& path, const Tolerances& tol) {
  std::istringstream lines(read_text_file(path));
  std::vector<PolygonDocument> docs;
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    docs.push_back(parse_document_text(line, tol));
  }
  if (docs.empty()) throw ParseError("corpus " + path + " is empty");
  return docs;
}

Tolerances parse_tolerances(const json& j) {
  if (!j.is_object()) throw ParseError("tolerances must be a JSON object");
  Tolerances t;
  const std::pair<const char*, double*> fields[] = {
      {"eps_norm", &t.eps_norm},         {"eps_side", &t.eps_side}, {"eps_sep", &t.eps_sep},
      {"eps_id", &t.eps_id},             {"eps_boundary", &t.eps_boundary},
      {"eps_class", &t.eps_class},
  };
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (key == name) {
        if (!value.is_number() || !(value.get<double>() > 0.0)) {
          throw ParseError("tolerance '" + key + "' must be a positive number");
        }
        *slot = value.get<double>();
        known = true;
      }
    }
    if (!known) throw ParseError("unknown tolerance '" + key + "'");
  }
  return t;
}

Tolerances read_tolerances(const std::string& path) {
  try {
    return parse_tolerances(json::parse(read_text_file(path)));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed tolerances file: ") + e.what());
  }
}

json to_json(const Tolerances& t) {
  return {{"eps_norm", t.eps_norm},         {"eps_side", t.eps_side}, {"eps_sep", t.eps_sep},
          {"eps_id", t.eps_id},             {"eps_boundary", t.eps_boundary},
          {"eps_class", t.eps_class}};
}

namespace {

json witness_json(const std::optional<Witness>& w) { return w ? json(*w) : json(nullptr); }

}  // namespace

json to_json(const ValidationReport& r) {
  json flags = {{"simple", r.simple},         {"generic_circle", r.generic_circle},
                {"generic_line", r.generic_line}, {"coherent", r.coherent},
                {"convex", r.convex},         {"all_non_ideal", r.all_non_ideal}};
  json witnesses = json::object();
  const std::pair<const char*, const std::optional<Witness>*> ws[] = {
      {"simple", &r.simple_witness},         {"generic_circle", &r.generic_circle_witness},
      {"generic_line", &r.generic_line_witness}, {"coherent", &r.coherent_witness},
      {"convex", &r.convex_witness},         {"all_non_ideal", &r.non_ideal_witness},
  };
  for (const auto& [name, w] : ws) {
    if (*w) witnesses[name] = witness_json(*w);
  }
  return {{"flags", flags}, {"witnesses", witnesses}, {"all_pass", r.all_pass()}};
}

json to_json(const GenSpec& s) {
  json j = {{"family", to_string(s.family)}, {"n", s.n}, {"seed", s.seed},
            {"max_attempts", s.max_attempts}};
  switch (s.family) {
    case Family::PerturbedRegular:
      j["jitter"] = s.jitter;
      j["radius"] = s.radius;
      break;
    case Family::Shrink:
      j["lambda"] = s.lambda;
      [[fallthrough]];
    case Family::ConvexRandom:
      j["radial_range"] = {s.r_min, s.r_max};
      break;
  }
  return j;
}

json to_json(const GenStats& s) {
  return {{"attempts", s.attempts},
          {"rejected_simple", s.rejected_simple},
          {"rejected_generic", s.rejected_generic},
          {"rejected_coherent", s.rejected_coherent},
          {"rejected_convex", s.rejected_convex}};
}

}  // namespace hyperpoly
