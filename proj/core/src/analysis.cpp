#include "fomc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fomc {

namespace {

void collect_preorder(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.kind() == NodeKind::conjunction) {
    collect_preorder(f.lhs(), out);
    collect_preorder(f.rhs(), out);
  } else if (f.is_unary()) {
    collect_preorder(f.body(), out);
  }
}

// Calls `hit(name, node)` for every free model-variable occurrence.
void walk_model_vars(const Formula& f, std::vector<std::string>& bound, std::size_t& node,
                     const std::function<void(const std::string&, std::size_t)>& hit) {
  const std::size_t here = node++;
  switch (f.kind()) {
    case NodeKind::query_var:
      if (std::find(bound.begin(), bound.end(), f.name()) == bound.end()) hit(f.name(), here);
      walk_model_vars(f.body(), bound, node, hit);
      return;
    case NodeKind::forall:
      bound.push_back(f.name());
      walk_model_vars(f.body(), bound, node, hit);
      bound.pop_back();
      return;
    case NodeKind::conjunction:
      walk_model_vars(f.lhs(), bound, node, hit);
      walk_model_vars(f.rhs(), bound, node, hit);
      return;
    default:
      if (f.is_unary()) walk_model_vars(f.body(), bound, node, hit);
      return;
  }
}

// `above` holds the xi names on the path from the root; `bound` those that
// were above the innermost enclosing query when it was entered.
void walk_formula_vars(const Formula& f, std::vector<std::string>& above,
                       const std::vector<std::string>& bound, std::size_t& node,
                       const std::function<void(const std::string&, std::size_t)>& hit) {
  const std::size_t here = node++;
  switch (f.kind()) {
    case NodeKind::formula_var:
      if (std::find(bound.begin(), bound.end(), f.name()) == bound.end()) hit(f.name(), here);
      return;
    case NodeKind::query_var:
    case NodeKind::query_const: {
      const std::vector<std::string> inner = above;
      walk_formula_vars(f.body(), above, inner, node, hit);
      return;
    }
    case NodeKind::xi:
      above.push_back(f.name());
      walk_formula_vars(f.body(), above, bound, node, hit);
      above.pop_back();
      return;
    case NodeKind::conjunction:
      walk_formula_vars(f.lhs(), above, bound, node, hit);
      walk_formula_vars(f.rhs(), above, bound, node, hit);
      return;
    default:
      if (f.is_unary()) walk_formula_vars(f.body(), above, bound, node, hit);
      return;
  }
}

void walk_referenced(const Formula& f, std::vector<std::string>& shadow,
                     std::set<std::string>& out) {
  switch (f.kind()) {
    case NodeKind::formula_var:
      if (std::find(shadow.begin(), shadow.end(), f.name()) == shadow.end()) out.insert(f.name());
      return;
    case NodeKind::xi:
      shadow.push_back(f.name());
      walk_referenced(f.body(), shadow, out);
      shadow.pop_back();
      return;
    case NodeKind::conjunction:
      walk_referenced(f.lhs(), shadow, out);
      walk_referenced(f.rhs(), shadow, out);
      return;
    default:
      if (f.is_unary()) walk_referenced(f.body(), shadow, out);
      return;
  }
}

// First free occurrence of each variable, keyed by name.
std::map<std::string, std::size_t> first_free_model(const Formula& f) {
  std::map<std::string, std::size_t> out;
  std::vector<std::string> bound;
  std::size_t node = 0;
  walk_model_vars(f, bound, node,
                  [&](const std::string& n, std::size_t at) { out.emplace(n, at); });
  return out;
}

std::map<std::string, std::size_t> first_free_formula(const Formula& f) {
  std::map<std::string, std::size_t> out;
  std::vector<std::string> above;
  std::size_t node = 0;
  walk_formula_vars(f, above, {}, node,
                    [&](const std::string& n, std::size_t at) { out.emplace(n, at); });
  return out;
}

std::string join(const std::map<std::string, std::size_t>& names) {
  std::string out;
  for (const auto& [n, at] : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

std::vector<Formula> preorder(const Formula& f) {
  std::vector<Formula> out;
  out.reserve(f.size());
  collect_preorder(f, out);
  return out;
}

std::set<std::string> free_model_vars(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [n, at] : first_free_model(f)) out.insert(n);
  return out;
}

std::set<std::string> free_formula_vars(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [n, at] : first_free_formula(f)) out.insert(n);
  return out;
}

std::set<std::string> referenced_formula_vars(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> shadow;
  walk_referenced(f, shadow, out);
  return out;
}

const char* tag(SentenceCondition c) {
  switch (c) {
    case SentenceCondition::free_var:
      return "C1-free-var";
    case SentenceCondition::xi_subformula:
      return "C2-xi-subformula";
    case SentenceCondition::query_body:
      return "C3-query-body";
  }
  return "?";
}

SentenceDiagnostics check_sentence(const Formula& f) {
  SentenceDiagnostics d;
  auto report = [&](SentenceCondition c, std::size_t node, std::string message) {
    d.violations.push_back({c, node, std::move(message)});
  };

  // C1, one entry per free variable at its first occurrence.
  std::vector<std::pair<std::size_t, std::string>> c1;
  for (const auto& [n, at] : first_free_model(f))
    c1.emplace_back(at, "free model variable '" + n + "'");
  for (const auto& [n, at] : first_free_formula(f))
    c1.emplace_back(at, "free formula variable '" + n + "'");
  std::sort(c1.begin(), c1.end());
  for (auto& [at, msg] : c1) report(SentenceCondition::free_var, at, std::move(msg));

  const std::vector<Formula> nodes = preorder(f);
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Formula& n = nodes[id];
    if (n.kind() == NodeKind::xi) {
      const auto fm = first_free_model(n);
      const auto ff = first_free_formula(n);
      if (!fm.empty() || !ff.empty()) {
        std::string msg = "'xi " + n.name() + ".' subformula is not closed:";
        if (!fm.empty()) msg += " free model variables {" + join(fm) + "}";
        if (!ff.empty()) msg += " free formula variables {" + join(ff) + "}";
        report(SentenceCondition::xi_subformula, id, std::move(msg));
      }
    } else if (n.kind() == NodeKind::query_var || n.kind() == NodeKind::query_const) {
      const auto fm = first_free_model(n.body());
      if (!fm.empty())
        report(SentenceCondition::query_body, id,
               "query body has free model variables {" + join(fm) + "}");
    }
  }
  d.verdict = d.violations.empty();
  return d;
}

}  // namespace fomc
