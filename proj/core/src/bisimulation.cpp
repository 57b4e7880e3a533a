#include "fomc/bisimulation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <tuple>

namespace fomc {

namespace {

using Mask = std::uint64_t;

class Solver;

// Everything about one pair of models that does not depend on the pointed
// worlds: local clause checks and the child bisimilarity masks G(u, v).
struct Level {
  const IndexedModel& a;
  const IndexedModel& b;
  std::vector<std::string> props;
  std::vector<std::string> constants;
  std::vector<Mask> rows;  // rows[i]: child pairs with left child i
  std::vector<Mask> cols;  // cols[j]: child pairs with right child j
  std::vector<std::int8_t> local;  // per world pair: -1 not computed
  std::vector<Mask> g;

  Level(const IndexedModel& a_, const IndexedModel& b_)
      : a(a_), b(b_), local(a_.size() * b_.size(), -1), g(a_.size() * b_.size(), 0) {
    std::set<std::string> p, c;
    for (const auto& [name, s] : a.valuation) p.insert(name);
    for (const auto& [name, s] : b.valuation) p.insert(name);
    for (const auto& [name, col] : a.assignment) c.insert(name);
    for (const auto& [name, col] : b.assignment) c.insert(name);
    props.assign(p.begin(), p.end());
    constants.assign(c.begin(), c.end());
    const std::size_t na = a.children.size();
    const std::size_t nb = b.children.size();
    if (na * nb > 64)
      throw BudgetExceeded("more than 64 child pairs at one generation");
    rows.assign(na, 0);
    cols.assign(nb, 0);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        rows[i] |= bit(i, j);
        cols[j] |= bit(i, j);
      }
  }

  Mask bit(std::size_t i, std::size_t j) const { return Mask{1} << (i * b.children.size() + j); }
  std::size_t index(std::size_t u, std::size_t v) const { return u * b.size() + v; }

  bool total_surjective(Mask m) const {
    for (Mask r : rows)
      if (!(m & r)) return false;
    for (Mask c : cols)
      if (!(m & c)) return false;
    return true;
  }

  bool is_local(Solver& solver, std::size_t u, std::size_t v);
};

struct Obligation {
  std::size_t u;
  std::size_t v;
  bool zig;
  std::size_t next;  // u' for zig, v' for zag
};

class Solver {
 public:
  explicit Solver(std::size_t budget) : budget_(budget) {}

  std::shared_ptr<const BisimWitness> solve(const IndexedModel& a, std::size_t s,
                                            const IndexedModel& b, std::size_t t) {
    const auto key = std::make_tuple(&a, &b, s, t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto result = run(level(a, b), s, t);
    memo_.emplace(key, result);
    return result;
  }

  bool child_bisimilar(const Level& l, std::size_t i, std::size_t wi, std::size_t j,
                       std::size_t wj) {
    return solve(l.a.children[i], wi, l.b.children[j], wj) != nullptr;
  }

  void charge() {
    if (++spent_ > budget_)
      throw BudgetExceeded("bisimulation search exceeded " + std::to_string(budget_) + " steps");
  }

 private:
  Level& level(const IndexedModel& a, const IndexedModel& b) {
    auto& slot = levels_[{&a, &b}];
    if (!slot) slot = std::make_unique<Level>(a, b);
    return *slot;
  }

  std::shared_ptr<const BisimWitness> run(Level& l, std::size_t s, std::size_t t);

  std::size_t budget_;
  std::size_t spent_ = 0;
  std::map<std::tuple<const IndexedModel*, const IndexedModel*, std::size_t, std::size_t>,
           std::shared_ptr<const BisimWitness>>
      memo_;
  std::map<std::pair<const IndexedModel*, const IndexedModel*>, std::unique_ptr<Level>> levels_;
};

bool Level::is_local(Solver& solver, std::size_t u, std::size_t v) {
  const std::size_t k = index(u, v);
  if (local[k] >= 0) return local[k] == 1;
  auto decide = [&]() -> bool {
    for (const auto& p : props)
      if (a.holds(p, u) != b.holds(p, v)) return false;
    // A pointed world whose constants point to different children can be
    // rejected before any child is compared.
    for (const auto& c : constants)
      if ((a.assigned(c, u) < 0) != (b.assigned(c, v) < 0)) return false;
    Mask m = 0;
    for (std::size_t i = 0; i < a.children.size(); ++i)
      for (std::size_t j = 0; j < b.children.size(); ++j)
        if (solver.child_bisimilar(*this, i, a.tracking[u][i], j, b.tracking[v][j])) m |= bit(i, j);
    g[k] = m;
    if (!total_surjective(m)) return false;
    for (const auto& c : constants) {
      const int i = a.assigned(c, u);
      const int j = b.assigned(c, v);
      if (i >= 0 && !(m & bit(static_cast<std::size_t>(i), static_cast<std::size_t>(j))))
        return false;
    }
    return true;
  };
  const bool ok = decide();
  local[k] = ok ? 1 : 0;
  return ok;
}

std::vector<std::size_t> reachable(const IndexedModel& m, std::size_t from) {
  std::vector<char> seen(m.size(), 0);
  std::vector<std::size_t> order{from};
  seen[from] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t w : m.successors[order[k]])
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

// Witness-driven search: each pair in z gets one f value when first used;
// obligations from the zig and zag clauses either find an existing pair
// whose value contains theirs or branch over new pairs and values.
class Search {
 public:
  Search(Solver& solver, Level& l, std::vector<char> candidate)
      : solver_(solver), l_(l), candidate_(std::move(candidate)), value_(candidate_.size()) {}

  bool start(std::size_t s, std::size_t t) {
    for (Mask f : supersets(l_.index(s, t), 0)) {
      assign(s, t, f);
      if (dfs(0)) return true;
      unassign(s, t);
    }
    return false;
  }

  BisimWitness witness(Solver& solver) const;

 private:
  // Total-surjective values between `floor` and G(q), smallest first.
  std::vector<Mask> supersets(std::size_t q, Mask floor) {
    const Mask g = l_.g[q];
    std::vector<Mask> out;
    if ((floor & ~g) != 0) return out;
    const Mask free = g & ~floor;
    if (std::popcount(free) > 20)
      throw BudgetExceeded("too many child pairs to enumerate f values");
    Mask sub = free;
    while (true) {
      solver_.charge();
      const Mask f = floor | sub;
      if (l_.total_surjective(f)) out.push_back(f);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
    std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
      const int px = std::popcount(x), py = std::popcount(y);
      return px != py ? px < py : x < y;
    });
    return out;
  }

  void assign(std::size_t u, std::size_t v, Mask f) {
    value_[l_.index(u, v)] = f;
    for (std::size_t u2 : l_.a.successors[u]) pending_.push_back({u, v, true, u2});
    for (std::size_t v2 : l_.b.successors[v]) pending_.push_back({u, v, false, v2});
  }

  void unassign(std::size_t u, std::size_t v) {
    pending_.resize(pending_.size() - l_.a.successors[u].size() - l_.b.successors[v].size());
    value_[l_.index(u, v)].reset();
  }

  bool dfs(std::size_t k) {
    solver_.charge();
    if (k == pending_.size()) return true;
    const Obligation o = pending_[k];
    const Mask f = *value_[l_.index(o.u, o.v)];
    const auto& options = o.zig ? l_.b.successors[o.v] : l_.a.successors[o.u];
    auto pair_for = [&](std::size_t w) {
      return o.zig ? std::make_pair(o.next, w) : std::make_pair(w, o.next);
    };
    for (std::size_t w : options) {
      const auto [u2, v2] = pair_for(w);
      const auto& val = value_[l_.index(u2, v2)];
      if (val && (f & ~*val) == 0) return dfs(k + 1);
    }
    for (std::size_t w : options) {
      const auto [u2, v2] = pair_for(w);
      const std::size_t q = l_.index(u2, v2);
      if (value_[q] || !candidate_[q]) continue;
      for (Mask f2 : supersets(q, f)) {
        assign(u2, v2, f2);
        if (dfs(k + 1)) return true;
        unassign(u2, v2);
      }
    }
    return false;
  }

  Solver& solver_;
  Level& l_;
  std::vector<char> candidate_;
  std::vector<std::optional<Mask>> value_;
  std::vector<Obligation> pending_;
};

BisimWitness Search::witness(Solver& solver) const {
  BisimWitness w;
  std::map<ChildKey, BisimWitness> children;
  const IndexedModel& a = l_.a;
  const IndexedModel& b = l_.b;
  auto record = [&](std::size_t u, std::size_t v, std::size_t i, std::size_t j) {
    const std::size_t wi = a.tracking[u][i];
    const std::size_t wj = b.tracking[v][j];
    ChildKey key{a.child_labels[i], b.child_labels[j], a.children[i].world_names[wi],
                 b.children[j].world_names[wj]};
    if (children.contains(key)) return;
    auto cw = solver.solve(a.children[i], wi, b.children[j], wj);
    children.emplace(std::move(key), *cw);
  };
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < b.size(); ++v) {
      const auto& val = value_[l_.index(u, v)];
      if (!val) continue;
      const WorldPair p{a.world_names[u], b.world_names[v]};
      w.z.insert(p);
      auto& labels = w.f[p];
      for (std::size_t i = 0; i < a.children.size(); ++i)
        for (std::size_t j = 0; j < b.children.size(); ++j)
          if (*val & l_.bit(i, j)) {
            labels.emplace(a.child_labels[i], b.child_labels[j]);
            record(u, v, i, j);
          }
      for (const auto& c : l_.constants) {
        const int i = a.assigned(c, u);
        const int j = b.assigned(c, v);
        if (i >= 0 && j >= 0)
          record(u, v, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  for (auto& [key, cw] : children) w.children.push_back({key, std::move(cw)});
  return w;
}

std::shared_ptr<const BisimWitness> Solver::run(Level& l, std::size_t s, std::size_t t) {
  charge();
  if (!l.is_local(*this, s, t)) return nullptr;

  const auto ra = reachable(l.a, s);
  const auto rb = reachable(l.b, t);
  std::vector<char> cand(l.a.size() * l.b.size(), 0);
  for (std::size_t u : ra)
    for (std::size_t v : rb) cand[l.index(u, v)] = l.is_local(*this, u, v) ? 1 : 0;

  // Greatest fixpoint: a pair survives if every step on either side can be
  // matched by a surviving pair sharing a total-surjective child map.
  auto matched = [&](std::size_t u, std::size_t v) {
    const Mask g = l.g[l.index(u, v)];
    for (std::size_t u2 : l.a.successors[u]) {
      bool any = false;
      for (std::size_t v2 : l.b.successors[v]) {
        const std::size_t q = l.index(u2, v2);
        if (cand[q] && l.total_surjective(g & l.g[q])) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    for (std::size_t v2 : l.b.successors[v]) {
      bool any = false;
      for (std::size_t u2 : l.a.successors[u]) {
        const std::size_t q = l.index(u2, v2);
        if (cand[q] && l.total_surjective(g & l.g[q])) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u : ra)
      for (std::size_t v : rb) {
        const std::size_t k = l.index(u, v);
        if (cand[k] && !matched(u, v)) {
          cand[k] = 0;
          changed = true;
        }
      }
    charge();
  }
  if (!cand[l.index(s, t)]) return nullptr;

  Search search(*this, l, std::move(cand));
  if (!search.start(s, t)) return nullptr;
  return std::make_shared<const BisimWitness>(search.witness(*this));
}

std::size_t world_or_throw(const IndexedModel& m, const std::string& w) {
  const auto k = m.find_world(w);
  if (!k) throw UnknownWorld("unknown world '" + w + "'");
  return *k;
}

}  // namespace

const BisimWitness* BisimWitness::child(const ChildKey& key) const {
  auto it = std::find_if(children.begin(), children.end(),
                         [&](const ChildWitness& c) { return c.key == key; });
  return it == children.end() ? nullptr : &it->witness;
}

bool operator==(const BisimWitness& a, const BisimWitness& b) {
  return a.z == b.z && a.f == b.f && a.children == b.children;
}

BisimVerdict bisimilar(const GenealogicalModel& m, const std::string& s, const GenealogicalModel& n,
                       const std::string& t, BisimOptions options) {
  const IndexedModel a = IndexedModel::compile(m);
  const IndexedModel b = IndexedModel::compile(n);
  const std::size_t si = world_or_throw(a, s);
  const std::size_t ti = world_or_throw(b, t);
  Solver solver(options.budget);
  auto w = solver.solve(a, si, b, ti);
  BisimVerdict v;
  if (w) {
    v.bisimilar = true;
    v.witness = *w;
  }
  return v;
}

BisimVerdict bisimilar(const PointedModel& pm, const PointedModel& pn, BisimOptions options) {
  return bisimilar(*pm.model, pm.world, *pn.model, pn.world, options);
}

}  // namespace fomc
