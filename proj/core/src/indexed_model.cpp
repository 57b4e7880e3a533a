#include "fomc/indexed_model.hpp"

namespace fomc {

IndexedModel IndexedModel::compile(const GenealogicalModel& m) {
  IndexedModel x;
  x.world_names = m.worlds;
  for (std::size_t k = 0; k < m.worlds.size(); ++k) x.world_index.emplace(m.worlds[k], k);
  const std::size_t n = m.worlds.size();

  x.successors.resize(n);
  for (const auto& [u, v] : m.relation) x.successors[x.world_index.at(u)].push_back(x.world_index.at(v));

  for (const auto& [p, ws] : m.valuation) {
    WorldSet s(n);
    for (const auto& w : ws) s.set(x.world_index.at(w));
    x.valuation.emplace(p, std::move(s));
  }

  std::unordered_map<std::string, std::size_t> label_index;
  for (const auto& c : m.children) {
    label_index.emplace(c.label, x.child_labels.size());
    x.child_labels.push_back(c.label);
    x.children.push_back(compile(c.model));
  }

  for (const auto& [w, row] : m.assignment) {
    const std::size_t wi = x.world_index.at(w);
    for (const auto& [c, label] : row) {
      auto& column = x.assignment[c];
      column.resize(n, -1);
      column[wi] = static_cast<int>(label_index.at(label));
    }
  }

  x.tracking.assign(n, std::vector<std::size_t>(x.children.size(), 0));
  for (const auto& [w, row] : m.tracking) {
    const std::size_t wi = x.world_index.at(w);
    for (const auto& [label, cw] : row) {
      const std::size_t ci = label_index.at(label);
      x.tracking[wi][ci] = x.children[ci].world_index.at(cw);
    }
  }
  return x;
}

std::optional<std::size_t> IndexedModel::find_world(const std::string& name) const {
  auto it = world_index.find(name);
  if (it == world_index.end()) return std::nullopt;
  return it->second;
}

bool IndexedModel::holds(const std::string& prop, std::size_t w) const {
  auto it = valuation.find(prop);
  return it != valuation.end() && it->second.test(w);
}

int IndexedModel::assigned(const std::string& c, std::size_t w) const {
  auto it = assignment.find(c);
  return it == assignment.end() ? -1 : it->second[w];
}

}  // namespace fomc
