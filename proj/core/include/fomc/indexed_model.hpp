#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fomc/model.hpp"

namespace fomc {

/// A set of worlds, bit k standing for the k-th world in document order.
using WorldSet = boost::dynamic_bitset<>;

/// A valid model compiled to dense indices. Children are addressed by their
/// position in GenealogicalModel::children.
struct IndexedModel {
  std::vector<std::string> world_names;
  std::unordered_map<std::string, std::size_t> world_index;
  std::vector<std::vector<std::size_t>> successors;
  std::map<std::string, WorldSet> valuation;
  std::vector<std::string> child_labels;
  std::vector<IndexedModel> children;
  /// constant -> per world child index, -1 where unassigned.
  std::map<std::string, std::vector<int>> assignment;
  /// [world][child] -> world of that child.
  std::vector<std::vector<std::size_t>> tracking;

  /// Precondition: validate(m).verdict.
  static IndexedModel compile(const GenealogicalModel& m);

  std::size_t size() const { return world_names.size(); }
  std::optional<std::size_t> find_world(const std::string& name) const;
  bool holds(const std::string& prop, std::size_t w) const;
  /// Child index assigned to constant `c` at world `w`, or -1.
  int assigned(const std::string& c, std::size_t w) const;
  WorldSet all() const { return WorldSet(size()).set(); }
  WorldSet none() const { return WorldSet(size()); }
};

}  // namespace fomc
