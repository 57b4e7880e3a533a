#include "fomc/model_io.hpp"

#include <fstream>
#include <sstream>

namespace fomc {

using json = nlohmann::ordered_json;

namespace {

std::string summarize(const ModelDiagnostics& d) {
  std::string out = "invalid model";
  if (!d.violations.empty()) {
    const auto& v = d.violations.front();
    out += ": " + v.tag + " at " + (v.path.empty() ? "/" : v.path) + ": " + v.message;
    if (d.violations.size() > 1)
      out += " (and " + std::to_string(d.violations.size() - 1) + " more)";
  }
  return out;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ModelFormatError(path, "expected an object");
  return j;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ModelFormatError(path, "expected a string");
  return j.get<std::string>();
}

GenealogicalModel read_model(const json& doc, const std::string& at) {
  require_object(doc, at.empty() ? "/" : at);
  GenealogicalModel m;
  static const std::set<std::string> known = {"worlds",   "relation",   "closure", "valuation",
                                              "children", "assignment", "tracking"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw ModelFormatError(at + "/" + pointer_token(key), "unknown field");

  auto field = [&](const char* name) { return at + "/" + name; };

  if (!doc.contains("worlds")) throw ModelFormatError(field("worlds"), "missing field");
  const json& worlds = doc["worlds"];
  if (!worlds.is_array()) throw ModelFormatError(field("worlds"), "expected an array");
  for (std::size_t k = 0; k < worlds.size(); ++k)
    m.worlds.push_back(require_string(worlds[k], field("worlds") + "/" + std::to_string(k)));

  if (doc.contains("relation")) {
    const json& rel = doc["relation"];
    if (!rel.is_array()) throw ModelFormatError(field("relation"), "expected an array");
    for (std::size_t k = 0; k < rel.size(); ++k) {
      const std::string p = field("relation") + "/" + std::to_string(k);
      if (!rel[k].is_array() || rel[k].size() != 2)
        throw ModelFormatError(p, "expected a pair of worlds");
      m.relation.emplace(require_string(rel[k][0], p + "/0"), require_string(rel[k][1], p + "/1"));
    }
  }

  if (doc.contains("closure")) {
    const std::string c = require_string(doc["closure"], field("closure"));
    if (c == "none")
      m.closure = Closure::none;
    else if (c == "reflexive-transitive")
      m.closure = Closure::reflexive_transitive;
    else
      throw ModelFormatError(field("closure"), "expected \"none\" or \"reflexive-transitive\"");
  }

  if (doc.contains("valuation")) {
    for (const auto& [p, ws] : require_object(doc["valuation"], field("valuation")).items()) {
      const std::string pp = field("valuation") + "/" + pointer_token(p);
      if (!ws.is_array()) throw ModelFormatError(pp, "expected an array of worlds");
      auto& set = m.valuation[p];
      for (std::size_t k = 0; k < ws.size(); ++k)
        set.insert(require_string(ws[k], pp + "/" + std::to_string(k)));
    }
  }

  if (doc.contains("children")) {
    for (const auto& [label, child] : require_object(doc["children"], field("children")).items())
      m.children.push_back(
          {label, read_model(child, field("children") + "/" + pointer_token(label))});
  }

  auto read_table = [&](const char* name, auto& table) {
    if (!doc.contains(name)) return;
    for (const auto& [w, row] : require_object(doc[name], field(name)).items()) {
      const std::string wp = field(name) + "/" + pointer_token(w);
      auto& out = table[w];
      for (const auto& [k, v] : require_object(row, wp).items())
        out[k] = require_string(v, wp + "/" + pointer_token(k));
    }
  };
  read_table("assignment", m.assignment);
  read_table("tracking", m.tracking);

  if (m.closure == Closure::reflexive_transitive) m.relation = rt_closure(m.relation, m.worlds);
  return m;
}

}  // namespace

InvalidModel::InvalidModel(ModelDiagnostics d) : Error(summarize(d)), diagnostics_(std::move(d)) {}

GenealogicalModel model_from_json(const json& doc) { return read_model(doc, ""); }

GenealogicalModel parse_model_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ModelFormatError("", std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(doc);
}

GenealogicalModel load_model(std::string_view text) {
  GenealogicalModel m = parse_model_document(text);
  ModelDiagnostics d = validate(m);
  if (!d.verdict) throw InvalidModel(std::move(d));
  return m;
}

GenealogicalModel load_model_file(const std::filesystem::path& path) {
  return load_model(read_file(path));
}

json model_to_json(const GenealogicalModel& m) {
  json doc = json::object();
  doc["worlds"] = m.worlds;
  json rel = json::array();
  for (const auto& [u, v] : m.relation) rel.push_back({u, v});
  doc["relation"] = std::move(rel);
  doc["closure"] = m.closure == Closure::none ? "none" : "reflexive-transitive";
  json val = json::object();
  for (const auto& [p, ws] : m.valuation) val[p] = std::vector<std::string>(ws.begin(), ws.end());
  doc["valuation"] = std::move(val);
  json children = json::object();
  for (const auto& c : m.children) children[c.label] = model_to_json(c.model);
  doc["children"] = std::move(children);
  auto table = [](const auto& t) {
    json out = json::object();
    for (const auto& [w, row] : t) {
      json r = json::object();
      for (const auto& [k, v] : row) r[k] = v;
      out[w] = std::move(r);
    }
    return out;
  };
  doc["assignment"] = table(m.assignment);
  doc["tracking"] = table(m.tracking);
  return doc;
}

std::string dump_model(const GenealogicalModel& m, int indent) {
  return model_to_json(m).dump(indent);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fomc
