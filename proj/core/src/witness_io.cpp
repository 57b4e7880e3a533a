#include <algorithm>

#include "fomc/bisimulation.hpp"

namespace fomc {

using json = nlohmann::json;

json witness_to_json(const BisimWitness& w) {
  json z = json::array();
  for (const auto& [u, v] : w.z) z.push_back({u, v});
  json f = json::array();
  for (const auto& [p, labels] : w.f) {
    json pairs = json::array();
    for (const auto& [a, b] : labels) pairs.push_back({a, b});
    f.push_back({{"pair", {p.first, p.second}}, {"children", std::move(pairs)}});
  }
  json children = json::object();
  for (const auto& c : w.children) children[c.key.str()] = witness_to_json(c.witness);
  return {{"z", std::move(z)}, {"f", std::move(f)}, {"children", std::move(children)}};
}

namespace {

std::pair<std::string, std::string> read_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw Error("witness: expected a pair of strings, got " + j.dump());
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

ChildKey read_key(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k)
    if (k == s.size() || s[k] == '|') {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  if (parts.size() != 4) throw Error("witness: malformed child key '" + s + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace

BisimWitness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("z") || !j.contains("f"))
    throw Error("witness: expected an object with 'z' and 'f'");
  BisimWitness w;
  for (const auto& p : j.at("z")) w.z.insert(read_pair(p));
  for (const auto& entry : j.at("f")) {
    if (!entry.is_object() || !entry.contains("pair") || !entry.contains("children"))
      throw Error("witness: malformed f entry " + entry.dump());
    auto& labels = w.f[read_pair(entry.at("pair"))];
    for (const auto& l : entry.at("children")) labels.insert(read_pair(l));
  }
  if (j.contains("children")) {
    for (const auto& [key, cw] : j.at("children").items())
      w.children.push_back({read_key(key), witness_from_json(cw)});
    std::sort(w.children.begin(), w.children.end(),
              [](const ChildWitness& a, const ChildWitness& b) { return a.key < b.key; });
  }
  return w;
}

}  // namespace fomc
