#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fomc/vocabulary.hpp"

namespace fomc {

enum class Closure { none, reflexive_transitive };

using Relation = std::set<std::pair<std::string, std::string>>;

struct ChildModel;

/// A finite genealogical Kripke model. Children are embedded by value, so
/// the structure is a finite tree and no model can contain itself.
struct GenealogicalModel {
  std::vector<std::string> worlds;
  Relation relation;
  /// Recorded so documents round-trip; `relation` is already closed when
  /// the flag is set on a loaded model.
  Closure closure = Closure::none;
  std::map<std::string, std::set<std::string>> valuation;
  /// Distinct members even when structurally identical.
  std::vector<ChildModel> children;
  /// world -> constant -> child label. Partial.
  std::map<std::string, std::map<std::string, std::string>> assignment;
  /// world -> child label -> world of that child. Total on valid models.
  std::map<std::string, std::map<std::string, std::string>> tracking;

  const GenealogicalModel* child(const std::string& label) const;
  GenealogicalModel* child(const std::string& label);
  bool has_world(const std::string& w) const;

  friend bool operator==(const GenealogicalModel&, const GenealogicalModel&);
};

struct ChildModel {
  std::string label;
  GenealogicalModel model;

  friend bool operator==(const ChildModel&, const ChildModel&) = default;
};

struct PointedModel {
  const GenealogicalModel* model;
  std::string world;
};

struct ModelViolation {
  std::string tag;   // S-nonempty, R-range, T-total, ...
  std::string path;  // JSON pointer into the document, e.g. /children/N1/tracking/s0
  std::string message;
};

struct ModelDiagnostics {
  bool verdict = true;
  std::vector<ModelViolation> violations;
};

/// Checks every structural condition, recursively through all generations.
ModelDiagnostics validate(const GenealogicalModel& m);

/// 0 for a childless model, otherwise 1 + the deepest child.
std::size_t depth(const GenealogicalModel& m);

/// Smallest reflexive and transitive relation over `worlds` containing `r`.
Relation rt_closure(const Relation& r, const std::vector<std::string>& worlds);

/// Propositions named in valuations and constants named in assignments,
/// collected from every generation.
Vocabulary vocabulary_of(const GenealogicalModel& m);

/// Escapes one JSON pointer reference token.
std::string pointer_token(const std::string& s);

}  // namespace fomc
