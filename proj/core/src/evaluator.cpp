#include "fomc/evaluator.hpp"

#include <algorithm>
#include <optional>

#include "fomc/analysis.hpp"
#include "fomc/error.hpp"
#include "fomc/printer.hpp"

namespace fomc {

namespace {

// Environments live on the C++ stack; lookup takes the most recent binding,
// which gives the overwrite behaviour of i[k:=v] and j[k:=v].
struct IEnv {
  const std::string* name;
  std::size_t child;
  const IEnv* next;
};

struct JEnv {
  const std::string* name;
  const Formula* value;
  const JEnv* next;
};

// Formula variables unfolded at the current node since the last descent.
struct Unfolded {
  const std::string* name;
  const Unfolded* next;
};

const IEnv* lookup(const IEnv* env, const std::string& name) {
  for (; env; env = env->next)
    if (*env->name == name) return env;
  return nullptr;
}

const JEnv* lookup(const JEnv* env, const std::string& name) {
  for (; env; env = env->next)
    if (*env->name == name) return env;
  return nullptr;
}

struct MemoKey {
  const IndexedModel* model;
  Formula body;
  std::vector<std::pair<std::string, Formula>> env;

  bool operator==(const MemoKey& o) const {
    return model == o.model && body == o.body && env == o.env;
  }
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<const void*>{}(k.model) ^ (k.body.hash() * 31);
    for (const auto& [n, f] : k.env) h = h * 1099511628211ULL ^ std::hash<std::string>{}(n) ^ f.hash();
    return h;
  }
};

}  // namespace

struct Evaluator::Engine {
  bool memoize;
  std::unordered_map<MemoKey, WorldSet, MemoHash> memo;
  // Referenced formula variables per body; the key formula pins the node.
  std::unordered_map<const FormulaNode*, std::pair<Formula, std::vector<std::string>>> refs;

  const std::vector<std::string>& referenced(const Formula& f) {
    auto it = refs.find(f.id());
    if (it == refs.end()) {
      const auto names = referenced_formula_vars(f);
      it = refs.emplace(f.id(), std::make_pair(f, std::vector<std::string>(names.begin(), names.end())))
               .first;
    }
    return it->second.second;
  }

  // The result of a query body depends on j only through the variables it
  // can reach, directly or through the values they unfold to.
  std::vector<std::pair<std::string, Formula>> fingerprint(const Formula& body, const JEnv* j) {
    std::vector<std::pair<std::string, Formula>> out;
    std::vector<const std::string*> todo;
    for (const auto& n : referenced(body)) todo.push_back(&n);
    while (!todo.empty()) {
      const std::string& n = *todo.back();
      todo.pop_back();
      bool seen = false;
      for (const auto& e : out) seen = seen || e.first == n;
      if (seen) continue;
      const JEnv* hit = lookup(j, n);
      if (!hit) {
        out.emplace_back(n, Formula());
        continue;
      }
      out.emplace_back(n, *hit->value);
      for (const auto& m : referenced(*hit->value)) todo.push_back(&m);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  WorldSet descend(const IndexedModel& child, const Formula& body, const JEnv* j) {
    if (!memoize) return eval(child, body, nullptr, j, nullptr);
    MemoKey key{&child, body, fingerprint(body, j)};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    WorldSet r = eval(child, body, nullptr, j, nullptr);
    memo.emplace(std::move(key), r);
    return r;
  }

  WorldSet eval(const IndexedModel& m, const Formula& f, const IEnv* i, const JEnv* j,
                const Unfolded* unfolded) {
    switch (f.kind()) {
      case NodeKind::formula_var: {
        const JEnv* hit = lookup(j, f.name());
        if (!hit) throw InterpretationError("formula variable '" + f.name() + "' is uninterpreted");
        for (const Unfolded* u = unfolded; u; u = u->next)
          if (*u->name == f.name())
            throw InterpretationError("formula variable '" + f.name() +
                                      "' unfolds to itself without descending to a child");
        const Unfolded here{&f.name(), unfolded};
        return eval(m, *hit->value, i, j, &here);
      }
      case NodeKind::top:
        return m.all();
      case NodeKind::prop: {
        auto it = m.valuation.find(f.name());
        return it == m.valuation.end() ? m.none() : it->second;
      }
      case NodeKind::query_var: {
        const IEnv* hit = lookup(i, f.name());
        if (!hit) throw InterpretationError("model variable '" + f.name() + "' is uninterpreted");
        const std::size_t c = hit->child;
        const WorldSet inner = descend(m.children[c], f.body(), j);
        WorldSet out = m.none();
        for (std::size_t s = 0; s < m.size(); ++s)
          if (inner.test(m.tracking[s][c])) out.set(s);
        return out;
      }
      case NodeKind::query_const: {
        WorldSet out = m.none();
        auto col = m.assignment.find(f.name());
        if (col == m.assignment.end()) return out;
        std::vector<std::optional<WorldSet>> inner(m.children.size());
        for (std::size_t s = 0; s < m.size(); ++s) {
          const int c = col->second[s];
          if (c < 0) continue;
          auto& slot = inner[static_cast<std::size_t>(c)];
          if (!slot) slot = descend(m.children[static_cast<std::size_t>(c)], f.body(), j);
          if (slot->test(m.tracking[s][static_cast<std::size_t>(c)])) out.set(s);
        }
        return out;
      }
      case NodeKind::negation:
        return ~eval(m, f.body(), i, j, unfolded);
      case NodeKind::conjunction: {
        WorldSet a = eval(m, f.lhs(), i, j, unfolded);
        if (a.none()) return a;
        return a & eval(m, f.rhs(), i, j, unfolded);
      }
      case NodeKind::box: {
        const WorldSet inner = eval(m, f.body(), i, j, unfolded);
        WorldSet out = m.all();
        for (std::size_t s = 0; s < m.size(); ++s)
          for (std::size_t t : m.successors[s])
            if (!inner.test(t)) {
              out.reset(s);
              break;
            }
        return out;
      }
      case NodeKind::forall: {
        WorldSet out = m.all();
        for (std::size_t c = 0; c < m.children.size() && out.any(); ++c) {
          const IEnv bind{&f.name(), c, i};
          out &= eval(m, f.body(), &bind, j, unfolded);
        }
        return out;
      }
      case NodeKind::xi: {
        const JEnv bind{&f.name(), &f.body(), j};
        return eval(m, f.body(), i, &bind, unfolded);
      }
    }
    throw InterpretationError("unknown node kind");
  }
};

Evaluator::Evaluator(const GenealogicalModel& m, EvalOptions options)
    : Evaluator(std::make_shared<const IndexedModel>(IndexedModel::compile(m)), options) {}

Evaluator::Evaluator(std::shared_ptr<const IndexedModel> m, EvalOptions options)
    : model_(std::move(m)), options_(options), engine_(std::make_shared<Engine>()) {
  engine_->memoize = options_.memoize;
}

WorldSet Evaluator::evaluate(const Formula& sentence) {
  const SentenceDiagnostics d = check_sentence(sentence);
  if (!d.verdict)
    throw NotASentence("'" + print(sentence) + "' is not a sentence: " + d.violations.front().message);
  return engine_->eval(*model_, sentence, nullptr, nullptr, nullptr);
}

bool Evaluator::holds_at(const std::string& world, const Formula& sentence) {
  const auto w = model_->find_world(world);
  if (!w) throw UnknownWorld("unknown world '" + world + "'");
  return evaluate(sentence).test(*w);
}

std::vector<std::string> Evaluator::satisfying_worlds(const Formula& sentence) {
  return world_names(*model_, evaluate(sentence));
}

WorldSet Evaluator::evaluate_clauses(const Formula& f, const InterpretationPair& ip) {
  // Build the environments as linked lists in stable storage.
  std::vector<IEnv> inodes;
  std::vector<JEnv> jnodes;
  inodes.reserve(ip.i.size());
  jnodes.reserve(ip.j.size());
  const IEnv* i = nullptr;
  for (const auto& [x, label] : ip.i) {
    std::size_t c = 0;
    while (c < model_->child_labels.size() && model_->child_labels[c] != label) ++c;
    if (c == model_->child_labels.size())
      throw InterpretationError("i maps '" + x + "' to unknown child '" + label + "'");
    inodes.push_back({&x, c, i});
    i = &inodes.back();
  }
  const JEnv* j = nullptr;
  for (const auto& [name, value] : ip.j) {
    jnodes.push_back({&name, &value, j});
    j = &jnodes.back();
  }
  return engine_->eval(*model_, f, i, j, nullptr);
}

WorldSet Evaluator::evaluate_at(const IndexedModel& node, const Formula& f,
                                const std::vector<std::pair<std::string, std::size_t>>& i) {
  std::vector<IEnv> inodes;
  inodes.reserve(i.size());
  const IEnv* env = nullptr;
  for (const auto& [x, c] : i) {
    if (c >= node.children.size()) throw InterpretationError("child index out of range");
    inodes.push_back({&x, c, env});
    env = &inodes.back();
  }
  return engine_->eval(node, f, env, nullptr, nullptr);
}

void Evaluator::clear_cache() { engine_->memo.clear(); }
std::size_t Evaluator::cache_size() const { return engine_->memo.size(); }

WorldSet evaluate_sentence(const GenealogicalModel& m, const Formula& sentence) {
  return Evaluator(m).evaluate(sentence);
}

bool holds_at(const GenealogicalModel& m, const std::string& world, const Formula& sentence) {
  return Evaluator(m).holds_at(world, sentence);
}

WorldSet eval_clauses(const GenealogicalModel& m, const Formula& f, const InterpretationPair& ip) {
  return Evaluator(m).evaluate_clauses(f, ip);
}

std::vector<std::string> world_names(const IndexedModel& m, const WorldSet& s) {
  std::vector<std::string> out;
  for (std::size_t k = s.find_first(); k != WorldSet::npos; k = s.find_next(k))
    out.push_back(m.world_names[k]);
  return out;
}

}  // namespace fomc
