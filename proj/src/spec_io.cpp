#include "dqg/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dqg {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<int>();
}

double as_double(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  return v.get<double>();
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed graph spec: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph spec must be a JSON object");

  const int version = as_int(require(doc, "format_version"), "format_version");
  if (version != kSpecFormatVersion) {
    throw ParseError("unsupported format_version " + std::to_string(version));
  }

  GraphSpec spec;
  spec.vertices = as_int(require(doc, "vertices"), "vertices");

  const json& edges = require(doc, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (std::size_t n = 0; n < edges.size(); ++n) {
    const json& e = edges[n];
    const std::string where = "edges[" + std::to_string(n) + "]";
    if (!e.is_object()) throw ParseError(where + " must be an object");
    EdgeSpec edge;
    edge.i = as_int(require(e, "i"), where + ".i");
    edge.j = as_int(require(e, "j"), where + ".j");
    edge.length = as_double(require(e, "length"), where + ".length");
    if (e.contains("points")) {
      edge.points = as_int(e["points"], where + ".points");
    } else if (e.contains("step")) {
      edge.points = intervals_for(edge.length, as_double(e["step"], where + ".step"));
    } else {
      throw ParseError(where + " needs 'points' or 'step'");
    }
    spec.edges.push_back(edge);
  }

  if (auto it = doc.find("lambda"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("lambda must be an object keyed by vertex id");
    for (const auto& [key, value] : it->items()) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("lambda key '" + key + "' is not a vertex id");
      }
      spec.lambda[v] = as_double(value, "lambda[" + key + "]");
    }
  }

  if (auto it = doc.find("dirichlet"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("dirichlet must be an array of vertex ids");
    for (const auto& v : *it) spec.dirichlet.push_back(as_int(v, "dirichlet entry"));
  }
  return spec;
}

GraphSpec load_graph_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_spec(buf.str());
}

std::string dump_graph_spec(const GraphSpec& spec) {
  json doc;
  doc["format_version"] = kSpecFormatVersion;
  doc["vertices"] = spec.vertices;
  doc["edges"] = json::array();
  for (const auto& e : spec.edges) {
    doc["edges"].push_back({{"i", e.i}, {"j", e.j}, {"length", e.length}, {"points", e.points}});
  }
  if (!spec.lambda.empty()) {
    json lam = json::object();
    for (const auto& [v, value] : spec.lambda) lam[std::to_string(v)] = value;
    doc["lambda"] = lam;
  }
  if (!spec.dirichlet.empty()) doc["dirichlet"] = spec.dirichlet;
  return doc.dump(2) + "\n";
}

GraphSpec with_step(GraphSpec spec, double step) {
  for (auto& e : spec.edges) e.points = intervals_for(e.length, step);
  return spec;
}

}  // namespace dqg
