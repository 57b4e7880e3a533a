#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fomc/formula.hpp"
#include "fomc/indexed_model.hpp"
#include "fomc/model.hpp"

namespace fomc {

/// i maps model variables to child labels of the model being evaluated;
/// j maps formula variables to formulas.
struct InterpretationPair {
  std::map<std::string, std::string> i;
  std::map<std::string, Formula> j;
};

struct EvalOptions {
  /// Cache query-body results per child model. Off gives the plain
  /// structural recursion, used to cross-check the cache.
  bool memoize = true;
};

/// Evaluates formulas over one model. Holds a compiled copy of the model and
/// a cache that persists across calls; not safe for concurrent use, but
/// separate instances over the same model are independent.
class Evaluator {
 public:
  explicit Evaluator(const GenealogicalModel& m, EvalOptions options = {});
  explicit Evaluator(std::shared_ptr<const IndexedModel> m, EvalOptions options = {});

  const IndexedModel& model() const { return *model_; }

  /// Worlds where the sentence holds. Throws NotASentence for open formulas.
  WorldSet evaluate(const Formula& sentence);
  bool holds_at(const std::string& world, const Formula& sentence);
  std::vector<std::string> satisfying_worlds(const Formula& sentence);

  /// Applies the semantic clauses directly, with no sentence check.
  /// Throws InterpretationError when a variable is uninterpreted or a
  /// formula variable unfolds in a cycle.
  WorldSet evaluate_clauses(const Formula& f, const InterpretationPair& ip);

  /// Evaluates `f` at a node of the compiled tree (the root or any
  /// descendant), with j empty and i given as child indices of `node`.
  WorldSet evaluate_at(const IndexedModel& node, const Formula& f,
                       const std::vector<std::pair<std::string, std::size_t>>& i);

  void clear_cache();
  std::size_t cache_size() const;

 private:
  struct Engine;
  std::shared_ptr<const IndexedModel> model_;
  EvalOptions options_;
  std::shared_ptr<Engine> engine_;
};

WorldSet evaluate_sentence(const GenealogicalModel& m, const Formula& sentence);
bool holds_at(const GenealogicalModel& m, const std::string& world, const Formula& sentence);
WorldSet eval_clauses(const GenealogicalModel& m, const Formula& f, const InterpretationPair& ip);

/// Names of the worlds in `s`, in model order.
std::vector<std::string> world_names(const IndexedModel& m, const WorldSet& s);

}  // namespace fomc
