#include <unordered_map>

#include "fomc/distinguisher.hpp"
#include "fomc/error.hpp"
#include "fomc/evaluator.hpp"
#include "fomc/indexed_model.hpp"

namespace fomc {

namespace {

void collect_nodes(const IndexedModel& m, std::vector<const IndexedModel*>& out) {
  out.push_back(&m);
  for (const auto& c : m.children) collect_nodes(c, out);
}

// Values of a formula with free model variables `vars` at every node of a
// tree, under every assignment of those variables to the node's children,
// appended to `sig`.
void append_signature(Evaluator& ev, const std::vector<const IndexedModel*>& nodes,
                      const Formula& f, const std::vector<std::string>& vars, std::string& sig) {
  for (const IndexedModel* node : nodes) {
    const std::size_t n = node->children.size();
    std::size_t combos = 1;
    for (std::size_t k = 0; k < vars.size(); ++k) combos *= n;
    std::vector<std::pair<std::string, std::size_t>> i(vars.size());
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rest = code;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        i[k] = {vars[k], rest % n};
        rest /= n;
      }
      const WorldSet s = ev.evaluate_at(*node, f, i);
      std::vector<WorldSet::block_type> blocks;
      boost::to_block_range(s, std::back_inserter(blocks));
      sig.append(reinterpret_cast<const char*>(blocks.data()),
                 blocks.size() * sizeof(WorldSet::block_type));
    }
    sig.push_back('|');
  }
}

}  // namespace

DistinguishResult distinguish(const PointedModel& pm, const PointedModel& pn,
                              const EnumerationBudget& requested, bool semantic_pruning) {
  EnumerationBudget budget = requested;
  budget.vocab.merge(vocabulary_of(*pm.model)).merge(vocabulary_of(*pn.model));

  auto a = std::make_shared<const IndexedModel>(IndexedModel::compile(*pm.model));
  auto b = std::make_shared<const IndexedModel>(IndexedModel::compile(*pn.model));
  const auto s = a->find_world(pm.world);
  const auto t = b->find_world(pn.world);
  if (!s) throw UnknownWorld("unknown world '" + pm.world + "'");
  if (!t) throw UnknownWorld("unknown world '" + pn.world + "'");
  Evaluator ea(a);
  Evaluator eb(b);

  std::vector<const IndexedModel*> nodes_a, nodes_b;
  collect_nodes(*a, nodes_a);
  collect_nodes(*b, nodes_b);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < budget.model_vars; ++k) names.push_back(model_var_name(k));

  // Signature -> (modal depth, xi depth) of the candidates kept with it.
  std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> seen;
  SentenceEnumerator::Filter keep;
  if (semantic_pruning) {
    keep = [&](const Formula& f, const CandidateInfo& info) {
      if (info.free_formula) return true;  // depends on j; no context-free value
      std::vector<std::string> vars;
      std::string sig(1, static_cast<char>(info.free_model));
      for (std::size_t k = 0; k < names.size(); ++k)
        if (info.free_model >> k & 1) vars.push_back(names[k]);
      append_signature(ea, nodes_a, f, vars, sig);
      append_signature(eb, nodes_b, f, vars, sig);
      auto& entries = seen[sig];
      for (const auto& [modal, xi] : entries)
        if (modal <= info.modal_depth && xi <= info.xi_depth) return false;
      entries.emplace_back(info.modal_depth, info.xi_depth);
      return true;
    };
  }

  DistinguishResult result;
  SentenceEnumerator stream(budget, keep);
  while (auto f = stream.next()) {
    ++result.examined;
    if (ea.evaluate(*f).test(*s) == eb.evaluate(*f).test(*t)) continue;
    // Re-verify without any cached state before reporting.
    Evaluator fresh_a(*pm.model, {.memoize = false});
    Evaluator fresh_b(*pn.model, {.memoize = false});
    if (fresh_a.holds_at(pm.world, *f) != fresh_b.holds_at(pn.world, *f)) {
      result.separator = *f;
      return result;
    }
    throw InterpretationError("cached and uncached evaluation disagree on a candidate separator");
  }
  return result;
}

DistinguishResult distinguish(const PointedModel& pm, const PointedModel& pn,
                              const DistinguishOptions& options) {
  EnumerationBudget budget;
  budget.max_connective_depth = static_cast<std::size_t>(-1);
  budget.max_modal_depth = options.max_modal_depth;
  budget.allow_xi = options.allow_xi;
  budget.max_xi_nesting = 1;
  budget.model_vars = options.model_vars;
  budget.max_size = options.max_size ? options.max_size : options.allow_xi ? 9 : 12;
  return distinguish(pm, pn, budget, options.semantic_pruning);
}

}  // namespace fomc
