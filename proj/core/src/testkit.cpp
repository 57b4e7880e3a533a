#include "fomc/testkit.hpp"

#include <algorithm>
#include <optional>

#include "fomc/error.hpp"
#include "fomc/distinguisher.hpp"

namespace fomc::testkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::string prop_name(std::size_t k) {
  static const char* first[] = {"p", "q", "r", "s", "t", "u"};
  return k < 6 ? first[k] : "p" + std::to_string(k);
}

std::string constant_name(std::size_t k) {
  static const char* first[] = {"c", "d", "e"};
  return k < 3 ? first[k] : "c" + std::to_string(k);
}

Vocabulary gen_vocabulary(const GenSpec& g) {
  Vocabulary v;
  for (std::size_t k = 0; k < g.prop_count; ++k) v.props.insert(prop_name(k));
  for (std::size_t k = 0; k < g.constant_count; ++k) v.constants.insert(constant_name(k));
  return v;
}

namespace {

GenealogicalModel gen_level(const GenSpec& g, std::size_t depth_left, SplitMix64& rng) {
  GenealogicalModel m;
  m.closure = g.closure;
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(g.max_worlds, 1));
  for (std::size_t k = 0; k < n; ++k) m.worlds.push_back("s" + std::to_string(k));
  for (const auto& u : m.worlds)
    for (const auto& v : m.worlds)
      if (rng.chance(g.edge_num, g.edge_den)) m.relation.emplace(u, v);
  if (g.closure == Closure::reflexive_transitive) m.relation = rt_closure(m.relation, m.worlds);
  for (std::size_t k = 0; k < g.prop_count; ++k) {
    auto& set = m.valuation[prop_name(k)];
    for (const auto& w : m.worlds)
      if (rng.chance(1, 2)) set.insert(w);
  }
  const std::size_t kids = depth_left > 0 ? rng.below(g.max_children + 1) : 0;
  for (std::size_t k = 0; k < kids; ++k) {
    SplitMix64 sub = rng.split();
    m.children.push_back({"N" + std::to_string(k + 1), gen_level(g, depth_left - 1, sub)});
  }
  if (!m.children.empty()) {
    for (const auto& w : m.worlds)
      for (std::size_t k = 0; k < g.constant_count; ++k)
        if (rng.chance(1, 2))
          m.assignment[w][constant_name(k)] = m.children[rng.below(m.children.size())].label;
    for (const auto& w : m.worlds)
      for (const auto& c : m.children)
        m.tracking[w][c.label] = c.model.worlds[rng.below(c.model.worlds.size())];
  }
  return m;
}

template <typename T>
const T& pick(SplitMix64& rng, const std::vector<T>& xs) {
  return xs[rng.below(xs.size())];
}

struct SentenceCtx {
  std::vector<std::string> bound;       // model variables usable in queries
  std::size_t xi_level = 0;             // enclosing xi binders
  std::optional<std::string> innermost;  // name of the innermost xi
  bool crossed = false;                 // a query lies between it and here
};

class FormulaGen {
 public:
  FormulaGen(SplitMix64& rng, const SentenceSpec& spec, bool sentence)
      : rng_(rng), spec_(spec), sentence_(sentence),
        props_(spec.vocab.props.begin(), spec.vocab.props.end()),
        constants_(spec.vocab.constants.begin(), spec.vocab.constants.end()) {
    for (std::size_t k = 0; k < std::max<std::size_t>(spec.model_vars, 1); ++k)
      vars_.push_back(model_var_name(k));
  }

  Formula gen(std::size_t depth, const SentenceCtx& ctx) {
    if (depth == 0 || rng_.chance(1, 5)) return leaf(ctx);
    enum Op { neg, conj, disj, imp, bx, dia, all, ex, xi_op, qvar, qconst };
    std::vector<Op> ops = {neg, neg, conj, conj, disj, imp, bx, bx, dia, all, ex};
    if (spec_.allow_xi && ctx.xi_level < spec_.max_xi_nesting) ops.push_back(xi_op);
    if (!sentence_ || !ctx.bound.empty()) {
      ops.push_back(qvar);
      ops.push_back(qvar);
    }
    if (!constants_.empty()) ops.push_back(qconst);
    const std::size_t d = depth - 1;
    switch (pick(rng_, ops)) {
      case neg:
        return negation(gen(d, ctx));
      case conj:
        return conjunction(gen(d, ctx), gen(d, ctx));
      case disj:
        return disjunction(gen(d, ctx), gen(d, ctx));
      case imp:
        return implication(gen(d, ctx), gen(d, ctx));
      case bx:
        return box(gen(d, ctx));
      case dia:
        return diamond(gen(d, ctx));
      case all:
      case ex: {
        const std::string x = pick(rng_, vars_);
        SentenceCtx inner = ctx;
        inner.bound.push_back(x);
        Formula body = gen(d, inner);
        return rng_.chance(1, 2) ? forall(x, std::move(body)) : exists(x, std::move(body));
      }
      case xi_op: {
        const std::string name = formula_var_name(ctx.xi_level);
        SentenceCtx inner;
        inner.xi_level = ctx.xi_level + 1;
        inner.innermost = name;
        return xi(name, gen(d, sentence_ ? inner : ctx_with_xi(ctx, name)));
      }
      case qvar: {
        const std::string x = sentence_ ? pick(rng_, ctx.bound) : pick(rng_, vars_);
        return query_var(gen(d, query_ctx(ctx)), x);
      }
      case qconst:
        return query_const(gen(d, query_ctx(ctx)), pick(rng_, constants_));
    }
    return top();
  }

 private:
  SentenceCtx query_ctx(const SentenceCtx& ctx) const {
    if (!sentence_) return ctx;
    SentenceCtx inner;
    inner.xi_level = ctx.xi_level;
    inner.innermost = ctx.innermost;
    inner.crossed = true;
    return inner;
  }

  static SentenceCtx ctx_with_xi(const SentenceCtx& ctx, const std::string& name) {
    SentenceCtx inner = ctx;
    inner.xi_level += 1;
    inner.innermost = name;
    return inner;
  }

  Formula leaf(const SentenceCtx& ctx) {
    std::vector<int> kinds = {0, 1};
    if (!props_.empty()) kinds.insert(kinds.end(), {2, 2, 2});
    const bool var_ok = sentence_ ? (ctx.innermost && ctx.crossed) : spec_.allow_xi;
    if (var_ok) kinds.insert(kinds.end(), {3, 3});
    switch (pick(rng_, kinds)) {
      case 0:
        return top();
      case 1:
        return bottom();
      case 2:
        return prop(pick(rng_, props_));
      default:
        if (sentence_) return formula_var(*ctx.innermost);
        return formula_var(formula_var_name(rng_.below(std::max<std::size_t>(spec_.max_xi_nesting, 1))));
    }
  }

  SplitMix64& rng_;
  const SentenceSpec& spec_;
  bool sentence_;
  std::vector<std::string> props_;
  std::vector<std::string> constants_;
  std::vector<std::string> vars_;
};

GenealogicalModel with_child(GenealogicalModel m, const std::string& label) {
  if (!m.child(label)) throw Error("no child labelled '" + label + "'");
  return m;
}

}  // namespace

GenealogicalModel gen_model(const GenSpec& g, SplitMix64& rng) {
  return gen_level(g, g.max_depth, rng);
}

GenealogicalModel gen_model(const GenSpec& g) {
  SplitMix64 rng(g.seed);
  return gen_model(g, rng);
}

Formula gen_sentence(SplitMix64& rng, const SentenceSpec& spec) {
  return FormulaGen(rng, spec, true).gen(spec.max_depth, {});
}

Formula gen_formula(SplitMix64& rng, const SentenceSpec& spec) {
  return FormulaGen(rng, spec, false).gen(spec.max_depth, {});
}

GenealogicalModel dup_child(const GenealogicalModel& m, const std::string& label) {
  GenealogicalModel out = with_child(m, label);
  std::string fresh = label + "_dup";
  for (int k = 2; out.child(fresh); ++k) fresh = label + "_dup" + std::to_string(k);
  out.children.push_back({fresh, *m.child(label)});
  for (auto& [w, row] : out.tracking) {
    auto it = row.find(label);
    if (it != row.end()) row[fresh] = it->second;
  }
  return out;
}

GenealogicalModel break_child(const GenealogicalModel& m, const std::string& label,
                              const std::string& prop, const std::string& world) {
  GenealogicalModel out = with_child(m, label);
  GenealogicalModel& c = *out.child(label);
  if (!c.has_world(world)) throw Error("child '" + label + "' has no world '" + world + "'");
  auto& set = c.valuation[prop];
  if (!set.erase(world)) set.insert(world);
  return out;
}

GenealogicalModel dup_world(const GenealogicalModel& m, const std::string& world) {
  if (!m.has_world(world)) throw Error("no world '" + world + "'");
  GenealogicalModel out = m;
  std::string fresh = world + "_dup";
  for (int k = 2; out.has_world(fresh); ++k) fresh = world + "_dup" + std::to_string(k);
  out.worlds.push_back(fresh);
  auto image = [&](const std::string& w) {
    std::vector<std::string> v{w};
    if (w == world) v.push_back(fresh);
    return v;
  };
  for (const auto& [u, v] : m.relation)
    for (const auto& u2 : image(u))
      for (const auto& v2 : image(v)) out.relation.emplace(u2, v2);
  for (auto& [p, ws] : out.valuation)
    if (ws.contains(world)) ws.insert(fresh);
  if (auto it = m.assignment.find(world); it != m.assignment.end()) out.assignment[fresh] = it->second;
  if (auto it = m.tracking.find(world); it != m.tracking.end()) out.tracking[fresh] = it->second;
  return out;
}

namespace {

GenSpec tiny_spec(SplitMix64& rng, std::size_t max_worlds, std::size_t max_children) {
  GenSpec g;
  g.seed = rng.next();
  g.max_worlds = max_worlds;
  g.max_children = max_children;
  g.max_depth = 1 + rng.below(2);
  g.prop_count = 1 + rng.below(2);
  g.constant_count = rng.below(2);
  g.closure = rng.chance(1, 2) ? Closure::reflexive_transitive : Closure::none;
  g.edge_num = 1;
  g.edge_den = 2;
  return g;
}

// A tiny model with at least one child and at most `max_children`.
GenealogicalModel tiny_parent(SplitMix64& rng, std::size_t max_worlds, std::size_t max_children) {
  while (true) {
    GenealogicalModel m = gen_model(tiny_spec(rng, max_worlds, max_children));
    if (!m.children.empty()) return m;
  }
}

ModelPair broken(SplitMix64& rng) {
  GenealogicalModel m = tiny_parent(rng, 3, 2);
  const auto& c = m.children[rng.below(m.children.size())];
  std::vector<std::string> props;
  for (const auto& [p, ws] : c.model.valuation) props.push_back(p);
  if (props.empty()) props.push_back("p");
  const std::string prop = pick(rng, props);
  const std::string w = pick(rng, c.model.worlds);
  const std::string s = pick(rng, m.worlds);
  GenealogicalModel n = break_child(m, c.label, prop, w);
  return {std::move(m), s, std::move(n), s, "break_child"};
}

}  // namespace

ModelPair gen_tiny_pair(SplitMix64& rng) {
  switch (rng.below(5)) {
    case 0:
    case 1: {
      GenSpec g = tiny_spec(rng, 3, 2);
      GenealogicalModel m = gen_model(g);
      g.seed = rng.next();
      GenealogicalModel n = gen_model(g);
      const std::string s = pick(rng, m.worlds);
      const std::string t = pick(rng, n.worlds);
      return {std::move(m), s, std::move(n), t, "independent"};
    }
    case 2: {
      GenealogicalModel m = tiny_parent(rng, 3, 1);
      const std::string s = pick(rng, m.worlds);
      GenealogicalModel n = dup_child(m, m.children.front().label);
      return {std::move(m), s, std::move(n), s, "dup_child"};
    }
    case 3:
      return broken(rng);
    default: {
      GenealogicalModel m = gen_model(tiny_spec(rng, 2, 2));
      const std::string s = pick(rng, m.worlds);
      GenealogicalModel n = dup_world(m, pick(rng, m.worlds));
      return {std::move(m), s, std::move(n), s, "dup_world"};
    }
  }
}

ModelPair gen_broken_pair(SplitMix64& rng) { return broken(rng); }

}  // namespace fomc::testkit
