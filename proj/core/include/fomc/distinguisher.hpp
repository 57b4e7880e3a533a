#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fomc/formula.hpp"
#include "fomc/model.hpp"
#include "fomc/vocabulary.hpp"

namespace fomc {

struct EnumerationBudget {
  /// Nesting of surface connectives in the canonical text.
  std::size_t max_connective_depth = 3;
  /// Nesting of [] and <>.
  std::size_t max_modal_depth = 3;
  Vocabulary vocab;
  bool allow_xi = false;
  /// Nesting of xi binders; formula variables are drawn from X, Y, Z, ...
  std::size_t max_xi_nesting = 1;
  /// Model variables available to forall, exists and queries: x, y, z, ...
  std::size_t model_vars = 1;
  /// Nodes of the stored (expanded) tree. This is what keeps the stream
  /// finite in practice; depth bounds alone admit astronomically many.
  std::size_t max_size = 7;
};

/// Facts about a candidate available to an enumeration filter.
struct CandidateInfo {
  std::size_t size;
  std::size_t modal_depth;
  std::size_t xi_depth;
  unsigned free_model;    // bit k: the k-th model variable is free
  unsigned free_formula;  // bit k: the k-th formula variable is referenced freely
};

/// Lazily enumerates sentences by size, then by canonical text. Every
/// formula the stream could ever need as a subformula is generated once per
/// size; subformulas that cannot occur in any sentence within the budget
/// are pruned.
class SentenceEnumerator {
 public:
  /// Called on every generated formula, sentence or not. Returning false
  /// drops it from the output and from use as a subformula.
  using Filter = std::function<bool(const Formula&, const CandidateInfo&)>;

  explicit SentenceEnumerator(EnumerationBudget budget, Filter keep = {});
  ~SentenceEnumerator();
  SentenceEnumerator(SentenceEnumerator&&) noexcept;
  SentenceEnumerator& operator=(SentenceEnumerator&&) noexcept;

  std::optional<Formula> next();
  /// Formulas generated so far, sentences or not.
  std::size_t generated() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<Formula> enumerate_sentences(const EnumerationBudget& b);

/// Variable names used by the enumerator: x, y, z, x3, ... and X, Y, Z, X3, ...
std::string model_var_name(std::size_t k);
std::string formula_var_name(std::size_t k);

struct DistinguishOptions {
  std::size_t max_modal_depth = 4;
  /// Nodes of the expanded tree; 0 picks 12, or 9 when xi is allowed
  /// (candidates with free formula variables escape semantic pruning).
  std::size_t max_size = 0;
  bool allow_xi = false;
  std::size_t model_vars = 1;
  /// Drop candidates that agree everywhere on both models with an earlier
  /// candidate of no greater modal and xi depth. Sound for this search:
  /// such a candidate can be swapped for the earlier one in any context.
  bool semantic_pruning = true;
};

struct DistinguishResult {
  std::optional<Formula> separator;
  std::size_t examined = 0;
};

/// Searches for a sentence true at exactly one of the two pointed models,
/// over the combined vocabulary of both. The returned sentence has been
/// re-checked with fresh, uncached evaluations. An empty result means only
/// that no separator exists within the bounds.
DistinguishResult distinguish(const PointedModel& pm, const PointedModel& pn,
                              const DistinguishOptions& options = {});

/// Same search, driven by an explicit enumeration budget (its vocabulary is
/// widened to cover both models).
DistinguishResult distinguish(const PointedModel& pm, const PointedModel& pn,
                              const EnumerationBudget& budget, bool semantic_pruning = true);

}  // namespace fomc
