#include <algorithm>
#include <bit>

#include "fomc/distinguisher.hpp"
#include "fomc/printer.hpp"

namespace fomc {

std::string model_var_name(std::size_t k) {
  static const char* first[] = {"x", "y", "z"};
  return k < 3 ? first[k] : "x" + std::to_string(k);
}

std::string formula_var_name(std::size_t k) {
  static const char* first[] = {"X", "Y", "Z"};
  return k < 3 ? first[k] : "X" + std::to_string(k);
}

namespace {

struct Item {
  Formula f;
  std::string text;
  std::size_t modal;
  std::size_t xi;
  unsigned fm;  // free model variables
  unsigned u;   // free formula variables outside every query
  unsigned g;   // free formula variables inside some query
};

}  // namespace

struct SentenceEnumerator::State {
  EnumerationBudget budget;
  Filter keep;
  std::vector<std::string> model_vars;
  std::vector<std::string> formula_vars;
  std::vector<std::string> props;
  std::vector<std::string> constants;
  std::vector<std::vector<Item>> levels{{}};  // levels[k]: items of size k
  std::vector<const Item*> ready;             // sentences of the current level
  std::size_t cursor = 0;
  std::size_t generated = 0;

  explicit State(EnumerationBudget b, Filter k) : budget(std::move(b)), keep(std::move(k)) {
    for (std::size_t i = 0; i < budget.model_vars; ++i) model_vars.push_back(model_var_name(i));
    if (budget.allow_xi)
      for (std::size_t i = 0; i < budget.max_xi_nesting; ++i)
        formula_vars.push_back(formula_var_name(i));
    props.assign(budget.vocab.props.begin(), budget.vocab.props.end());
    constants.assign(budget.vocab.constants.begin(), budget.vocab.constants.end());
  }

  // Structural pruning: could this formula still sit inside a sentence
  // within the budget?
  bool viable(const Item& it) const {
    if (it.modal > budget.max_modal_depth) return false;
    const std::size_t xi_limit = budget.allow_xi ? budget.max_xi_nesting : 0;
    if (it.xi > xi_limit) return false;
    const unsigned open = it.u | it.g;
    if (open && it.xi + 1 > xi_limit) return false;
    // Each free model variable needs a binder, each free formula variable
    // a xi, and unguarded ones a query as well.
    const std::size_t needed = static_cast<std::size_t>(std::popcount(it.fm)) +
                               static_cast<std::size_t>(std::popcount(open)) + (it.u ? 1 : 0);
    return it.f.size() + needed <= budget.max_size;
  }

  void offer(std::vector<Item>& out, Item it) {
    if (!viable(it)) return;
    it.text = print(it.f);
    if (keep && !keep(it.f, {it.f.size(), it.modal, it.xi, it.fm, it.u | it.g})) return;
    ++generated;
    out.push_back(std::move(it));
  }

  void build(std::size_t k) {
    std::vector<Item> out;
    if (k == 1) {
      offer(out, {top(), {}, 0, 0, 0, 0, 0});
      for (const auto& p : props) offer(out, {prop(p), {}, 0, 0, 0, 0, 0});
      for (std::size_t i = 0; i < formula_vars.size(); ++i)
        offer(out, {formula_var(formula_vars[i]), {}, 0, 0, 0, 1u << i, 0});
    } else {
      for (const Item& b : levels[k - 1]) {
        offer(out, {negation(b.f), {}, b.modal, b.xi, b.fm, b.u, b.g});
        offer(out, {box(b.f), {}, b.modal + 1, b.xi, b.fm, b.u, b.g});
        for (std::size_t i = 0; i < model_vars.size(); ++i)
          offer(out, {forall(model_vars[i], b.f), {}, b.modal, b.xi, b.fm & ~(1u << i), b.u, b.g});
        for (std::size_t i = 0; i < formula_vars.size(); ++i) {
          // The xi subformula must be closed on its own.
          if (b.fm || b.u || (b.g & ~(1u << i))) continue;
          offer(out, {xi(formula_vars[i], b.f), {}, b.modal, b.xi + 1, 0, 0, 0});
        }
        if (b.fm) continue;  // query bodies have no free model variables
        for (std::size_t i = 0; i < model_vars.size(); ++i)
          offer(out, {query_var(b.f, model_vars[i]), {}, b.modal, b.xi, 1u << i, 0, b.u | b.g});
        for (const auto& c : constants)
          offer(out, {query_const(b.f, c), {}, b.modal, b.xi, 0, 0, b.u | b.g});
      }
      for (std::size_t i = 1; 2 * i <= k - 1; ++i) {
        const std::size_t j = k - 1 - i;
        const auto& left = levels[i];
        const auto& right = levels[j];
        for (std::size_t x = 0; x < left.size(); ++x)
          for (std::size_t y = (i == j ? x : 0); y < right.size(); ++y) {
            const Item& a = left[x];
            const Item& b = right[y];
            offer(out, {conjunction(a.f, b.f), {}, std::max(a.modal, b.modal), std::max(a.xi, b.xi),
                        a.fm | b.fm, a.u | b.u, a.g | b.g});
          }
      }
    }
    std::sort(out.begin(), out.end(), [](const Item& a, const Item& b) { return a.text < b.text; });
    levels.push_back(std::move(out));
  }

  std::optional<Formula> next() {
    while (cursor == ready.size()) {
      const std::size_t k = levels.size();
      if (k > budget.max_size) return std::nullopt;
      build(k);
      ready.clear();
      cursor = 0;
      for (const Item& it : levels[k])
        if (!it.fm && !it.u && !it.g && surface_depth(it.f) <= budget.max_connective_depth)
          ready.push_back(&it);
    }
    return ready[cursor++]->f;
  }
};

SentenceEnumerator::SentenceEnumerator(EnumerationBudget budget, Filter keep)
    : state_(std::make_unique<State>(std::move(budget), std::move(keep))) {}
SentenceEnumerator::~SentenceEnumerator() = default;
SentenceEnumerator::SentenceEnumerator(SentenceEnumerator&&) noexcept = default;
SentenceEnumerator& SentenceEnumerator::operator=(SentenceEnumerator&&) noexcept = default;

std::optional<Formula> SentenceEnumerator::next() { return state_->next(); }
std::size_t SentenceEnumerator::generated() const { return state_->generated; }

std::vector<Formula> enumerate_sentences(const EnumerationBudget& b) {
  SentenceEnumerator e(b);
  std::vector<Formula> out;
  while (auto f = e.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace fomc
