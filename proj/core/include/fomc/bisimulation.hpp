#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fomc/error.hpp"
#include "fomc/indexed_model.hpp"
#include "fomc/model.hpp"

namespace fomc {

using WorldPair = std::pair<std::string, std::string>;
using LabelPair = std::pair<std::string, std::string>;

/// Identifies a child-level witness: the two children and the states they
/// are tracked at.
struct ChildKey {
  std::string m_label;
  std::string n_label;
  std::string m_world;
  std::string n_world;

  auto operator<=>(const ChildKey&) const = default;
  std::string str() const { return m_label + "|" + n_label + "|" + m_world + "|" + n_world; }
};

struct ChildWitness;

/// A relation z between worlds of the two models and, for every pair in z,
/// the child pairs f maps it to. `children` holds one witness for every
/// child pair appearing in f or matched by a constant, sorted by key.
struct BisimWitness {
  std::set<WorldPair> z;
  std::map<WorldPair, std::set<LabelPair>> f;
  std::vector<ChildWitness> children;

  const BisimWitness* child(const ChildKey& key) const;
  friend bool operator==(const BisimWitness&, const BisimWitness&);
};

struct ChildWitness {
  ChildKey key;
  BisimWitness witness;
  friend bool operator==(const ChildWitness&, const ChildWitness&) = default;
};

struct BisimVerdict {
  bool bisimilar = false;
  std::optional<BisimWitness> witness;
};

struct BisimOptions {
  /// Search nodes expanded across all generations before giving up with
  /// BudgetExceeded.
  std::size_t budget = 2'000'000;
};

/// Decides bisimilarity of (m, s) and (n, t). Propositions and constants
/// are compared over the union of both models' vocabularies; a name missing
/// from one model is false or unassigned everywhere in it.
/// Throws UnknownWorld, or BudgetExceeded when the search is cut off.
BisimVerdict bisimilar(const PointedModel& pm, const PointedModel& pn, BisimOptions options = {});
BisimVerdict bisimilar(const GenealogicalModel& m, const std::string& s, const GenealogicalModel& n,
                       const std::string& t, BisimOptions options = {});

struct WitnessIssue {
  /// root, f-domain, atoms, f-left-total, f-right-total, children,
  /// constants, zig or zag.
  std::string clause;
  /// Child-key path from the top witness, "" at the top.
  std::string where;
  std::string message;
};

struct WitnessReport {
  bool ok = true;
  std::vector<WitnessIssue> issues;
  bool cites(const std::string& clause) const;
};

/// Verifies every clause of the definition directly on the documents,
/// recursing into the child witnesses. Independent of the solver.
WitnessReport check_witness(const PointedModel& pm, const PointedModel& pn, const BisimWitness& w);

/// Raised when brute_force_bisim is asked about models above its size guard.
class OracleGuardError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search over every relation and every child-pair map. Only
/// for tiny models: at every generation |S_M|*|S_N| <= 12, at most two
/// children each, and depth <= 2.
bool brute_force_bisim(const PointedModel& pm, const PointedModel& pn);

/// `{"z": [[m, n], ...], "f": [{"pair": [m, n], "children": [[a, b], ...]}],
///   "children": {"a|b|mw|nw": {...}}}`, keys sorted.
nlohmann::json witness_to_json(const BisimWitness& w);
BisimWitness witness_from_json(const nlohmann::json& j);

}  // namespace fomc
