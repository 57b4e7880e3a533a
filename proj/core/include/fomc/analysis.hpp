#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fomc/formula.hpp"

namespace fomc {

/// Nodes of `f` in preorder. A node's identifier is its index here.
std::vector<Formula> preorder(const Formula& f);

/// Model variables with a free occurrence, relative to `f` as root.
/// Ordinary first-order scoping: `forall x.` binds `x` in its whole body,
/// query bodies included.
std::set<std::string> free_model_vars(const Formula& f);

/// Formula variables with a free occurrence, relative to `f` as root.
/// An occurrence of X is bound iff it lies inside some `?[...]` pair and,
/// taking the innermost such pair P, a `xi X.` is a strict ancestor of P.
/// So `xi X. X` and `?[xi X. X] #c` both leave X free.
std::set<std::string> free_formula_vars(const Formula& f);

/// Formula variables that evaluating `f` may look up in j: occurrences not
/// shadowed by a `xi` of the same name inside `f`. Differs from
/// free_formula_vars in ignoring the query condition.
std::set<std::string> referenced_formula_vars(const Formula& f);

enum class SentenceCondition {
  free_var,      // C1: the formula itself has a free variable
  xi_subformula, // C2: some xi X.psi has a free variable of either sort
  query_body,    // C3: some query body has a free model variable
};

/// "C1-free-var", "C2-xi-subformula" or "C3-query-body".
const char* tag(SentenceCondition c);

struct SentenceViolation {
  SentenceCondition condition;
  std::size_t node;  // preorder index of the offending node
  std::string message;
};

struct SentenceDiagnostics {
  bool verdict = true;
  std::vector<SentenceViolation> violations;
};

/// Checks the three sentence conditions. Freeness inside a subformula is
/// computed with that subformula as root.
SentenceDiagnostics check_sentence(const Formula& f);

inline bool is_sentence(const Formula& f) { return check_sentence(f).verdict; }

}  // namespace fomc
