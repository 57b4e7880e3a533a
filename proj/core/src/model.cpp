#include "fomc/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace fomc {

bool operator==(const GenealogicalModel& a, const GenealogicalModel& b) {
  return a.worlds == b.worlds && a.relation == b.relation && a.closure == b.closure &&
         a.valuation == b.valuation && a.children == b.children && a.assignment == b.assignment &&
         a.tracking == b.tracking;
}

const GenealogicalModel* GenealogicalModel::child(const std::string& label) const {
  for (const auto& c : children)
    if (c.label == label) return &c.model;
  return nullptr;
}

GenealogicalModel* GenealogicalModel::child(const std::string& label) {
  for (auto& c : children)
    if (c.label == label) return &c.model;
  return nullptr;
}

bool GenealogicalModel::has_world(const std::string& w) const {
  return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

std::string pointer_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

namespace {

void validate_into(const GenealogicalModel& m, const std::string& at, ModelDiagnostics& d) {
  auto report = [&](const char* tag, const std::string& path, std::string message) {
    d.violations.push_back({tag, path, std::move(message)});
  };
  auto path = [&](std::initializer_list<std::string> parts) {
    std::string p = at;
    for (const auto& part : parts) p += "/" + pointer_token(part);
    return p;
  };

  if (m.worlds.empty()) report("S-nonempty", path({"worlds"}), "model has no worlds");
  std::unordered_set<std::string> seen;
  for (std::size_t k = 0; k < m.worlds.size(); ++k)
    if (!seen.insert(m.worlds[k]).second)
      report("S-unique", path({"worlds", std::to_string(k)}),
             "world '" + m.worlds[k] + "' listed twice");

  for (const auto& [u, v] : m.relation) {
    if (!seen.contains(u))
      report("R-range", path({"relation"}), "edge source '" + u + "' is not a world");
    if (!seen.contains(v))
      report("R-range", path({"relation"}), "edge target '" + v + "' is not a world");
  }

  for (const auto& [p, ws] : m.valuation)
    for (const auto& w : ws)
      if (!seen.contains(w))
        report("V-range", path({"valuation", p}), "'" + w + "' is not a world");

  std::unordered_map<std::string, const GenealogicalModel*> labels;
  for (const auto& c : m.children) {
    if (c.label.empty()) report("N-label", path({"children"}), "empty child label");
    if (!labels.emplace(c.label, &c.model).second)
      report("N-label", path({"children", c.label}), "child label '" + c.label + "' repeated");
  }

  for (const auto& [w, row] : m.assignment) {
    if (!seen.contains(w))
      report("I-world", path({"assignment", w}), "'" + w + "' is not a world");
    for (const auto& [c, label] : row)
      if (!labels.contains(label))
        report("I-range", path({"assignment", w, c}),
               "constant '" + c + "' assigned to unknown child '" + label + "'");
  }

  for (const auto& [w, row] : m.tracking) {
    if (!seen.contains(w)) report("T-world", path({"tracking", w}), "'" + w + "' is not a world");
    for (const auto& [label, cw] : row) {
      auto it = labels.find(label);
      if (it == labels.end()) {
        report("T-world", path({"tracking", w, label}), "unknown child '" + label + "'");
      } else if (!it->second->has_world(cw)) {
        report("T-range", path({"tracking", w, label}),
               "'" + cw + "' is not a world of child '" + label + "'");
      }
    }
  }
  for (const auto& w : m.worlds) {
    auto row = m.tracking.find(w);
    for (const auto& c : m.children)
      if (row == m.tracking.end() || !row->second.contains(c.label))
        report("T-total", path({"tracking", w}),
               "tracking not total: no state of child '" + c.label + "' at world '" + w + "'");
  }

  for (const auto& c : m.children) validate_into(c.model, path({"children", c.label}), d);
}

}  // namespace

ModelDiagnostics validate(const GenealogicalModel& m) {
  ModelDiagnostics d;
  validate_into(m, "", d);
  d.verdict = d.violations.empty();
  return d;
}

std::size_t depth(const GenealogicalModel& m) {
  std::size_t best = 0;
  for (const auto& c : m.children) best = std::max(best, 1 + depth(c.model));
  return best;
}

Relation rt_closure(const Relation& r, const std::vector<std::string>& worlds) {
  // Warshall over the worlds plus any stray endpoints.
  std::vector<std::string> names = worlds;
  for (const auto& [u, v] : r) {
    names.push_back(u);
    names.push_back(v);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const std::size_t n = names.size();
  auto index = [&](const std::string& s) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const auto& w : worlds) reach[index(w)][index(w)] = 1;
  for (const auto& [u, v] : r) reach[index(u)][index(v)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  Relation out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) out.emplace(names[i], names[j]);
  return out;
}

Vocabulary vocabulary_of(const GenealogicalModel& m) {
  Vocabulary v;
  for (const auto& [p, ws] : m.valuation) v.props.insert(p);
  for (const auto& [w, row] : m.assignment)
    for (const auto& [c, label] : row) v.constants.insert(c);
  for (const auto& c : m.children) v.merge(vocabulary_of(c.model));
  return v;
}

}  // namespace fomc
