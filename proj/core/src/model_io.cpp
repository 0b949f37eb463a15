#include "weylfaces/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weylfaces/errors.hpp"

namespace weylfaces {

namespace {

using nlohmann::json;

Rat rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ModelError("rationals must be integers or \"p/q\" strings, got " + v.dump());
}

int node_from_json(const json& v, const CartanData& c) {
  if (v.is_number_integer()) {
    const int i = v.get<int>();
    if (i < 0 || i >= c.size()) throw ModelError("node index out of range: " + v.dump());
    return i;
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    for (int i = 0; i < c.size(); ++i)
      if (c.label(i) == s) return i;
    throw ModelError("unknown node label: " + s);
  }
  throw ModelError("nodes must be indices or labels, got " + v.dump());
}

NodeSet nodes_from_json(const json& v, const CartanData& c) {
  if (!v.is_array()) throw ModelError("node subsets must be arrays");
  NodeSet s;
  for (const json& e : v) s = s.with(node_from_json(e, c));
  return s;
}

TorusValue torus_from_json(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "generic") return TorusValue::generic();
    if (s == "pm_one") return TorusValue::pm_one();
    throw ModelError("unknown torus value: " + s);
  }
  if (v.is_object() && v.contains("q_power") && v["q_power"].is_number_integer())
    return TorusValue::q_power(v["q_power"].get<long>());
  throw ModelError("torus values are \"generic\", \"pm_one\" or {\"q_power\": n}");
}

}  // namespace

Model parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model must be a JSON object");
  if (!doc.contains("cartan") || !doc["cartan"].is_array())
    throw ModelError("model needs a \"cartan\" matrix");

  std::vector<std::vector<int>> matrix;
  for (const json& row : doc["cartan"]) {
    if (!row.is_array()) throw ModelError("\"cartan\" must be a matrix of integers");
    std::vector<int> r;
    for (const json& e : row) {
      if (!e.is_number_integer()) throw ModelError("\"cartan\" entries must be integers");
      r.push_back(e.get<int>());
    }
    matrix.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const json& e : doc["labels"]) labels.push_back(e.get<std::string>());
  }
  const CartanData cartan = validate_gcm(matrix, std::move(labels));

  RatVec hw;
  if (doc.contains("highest_weight")) {
    const json& h = doc["highest_weight"];
    if (!h.is_object() || !h.contains("pairings"))
      throw ModelError("\"highest_weight\" needs a \"pairings\" array");
    for (const json& e : h["pairings"]) hw.push_back(rational_from_json(e));
    if (static_cast<int>(hw.size()) != cartan.size())
      throw ModelError("\"pairings\" length does not match the Cartan matrix");
  }

  NodeSet integrability;
  if (doc.contains("integrability")) integrability = nodes_from_json(doc["integrability"], cartan);

  std::string flavor = "classical";
  if (doc.contains("flavor")) {
    if (!doc["flavor"].is_string()) throw ModelError("\"flavor\" must be a string");
    flavor = doc["flavor"].get<std::string>();
  }

  Model model;
  if (flavor == "classical") {
    if (hw.empty()) throw ModelError("classical models need a highest weight");
    model.module = make_module(cartan, std::move(hw), integrability);
  } else if (flavor == "quantum") {
    if (!doc.contains("torus_values")) throw ModelError("quantum models need \"torus_values\"");
    std::vector<TorusValue> torus;
    for (const json& e : doc["torus_values"]) torus.push_back(torus_from_json(e));
    model.module = make_quantum_module(cartan, std::move(torus), integrability, std::move(hw));
  } else {
    throw ModelError("unknown flavor: " + flavor);
  }

  if (doc.contains("J")) model.universal_j = nodes_from_json(doc["J"], cartan);
  return model;
}

Model parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

}  // namespace weylfaces
