#include <algorithm>
#include <map>
#include <tuple>

#include "fomc/bisimulation.hpp"

namespace fomc {

namespace {

using Value = unsigned;  // subset of child pairs, bit a * |N_N| + b

struct Tiny {
  const GenealogicalModel& m;
  std::vector<std::vector<std::size_t>> succ;

  explicit Tiny(const GenealogicalModel& model) : m(model), succ(model.worlds.size()) {
    for (const auto& [u, v] : m.relation) succ[index(u)].push_back(index(v));
  }
  std::size_t index(const std::string& w) const {
    return static_cast<std::size_t>(std::find(m.worlds.begin(), m.worlds.end(), w) - m.worlds.begin());
  }
  bool holds(const std::string& p, std::size_t w) const {
    auto it = m.valuation.find(p);
    return it != m.valuation.end() && it->second.contains(m.worlds[w]);
  }
  // Child index assigned to `c` at `w`, or -1.
  int assigned(const std::string& c, std::size_t w) const {
    auto row = m.assignment.find(m.worlds[w]);
    if (row == m.assignment.end()) return -1;
    auto it = row->second.find(c);
    if (it == row->second.end()) return -1;
    for (std::size_t k = 0; k < m.children.size(); ++k)
      if (m.children[k].label == it->second) return static_cast<int>(k);
    return -1;
  }
  const std::string& tracked(std::size_t w, std::size_t child) const {
    return m.tracking.at(m.worlds[w]).at(m.children[child].label);
  }
};

class Oracle {
 public:
  bool decide(const GenealogicalModel& m, const std::string& s, const GenealogicalModel& n,
              const std::string& t) {
    const auto key = std::make_tuple(&m, &n, s, t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool r = search(m, s, n, t);
    memo_.emplace(key, r);
    return r;
  }

 private:
  static void guard(const GenealogicalModel& m, const GenealogicalModel& n) {
    if (m.worlds.size() * n.worlds.size() > 12 || m.children.size() > 2 || n.children.size() > 2 ||
        depth(m) > 2 || depth(n) > 2)
      throw OracleGuardError("models exceed the brute-force size guard");
  }

  bool search(const GenealogicalModel& m, const std::string& s, const GenealogicalModel& n,
              const std::string& t) {
    guard(m, n);
    const Tiny a(m);
    const Tiny b(n);
    const std::size_t na = m.children.size();
    const std::size_t nb = n.children.size();
    const std::size_t nw = n.worlds.size();
    auto pair_index = [&](std::size_t u, std::size_t v) { return u * nw + v; };

    std::set<std::string> props, constants;
    for (const auto* x : {&m, &n}) {
      for (const auto& [p, ws] : x->valuation) props.insert(p);
      for (const auto& [w, row] : x->assignment)
        for (const auto& [c, l] : row) constants.insert(c);
    }

    // Pairs reachable from (s, t) in the product; any witness restricts to them.
    std::vector<std::size_t> order{pair_index(a.index(s), b.index(t))};
    std::vector<char> seen(m.worlds.size() * nw, 0);
    seen[order[0]] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t u = order[k] / nw, v = order[k] % nw;
      for (std::size_t u2 : a.succ[u])
        for (std::size_t v2 : b.succ[v])
          if (!seen[pair_index(u2, v2)]) {
            seen[pair_index(u2, v2)] = 1;
            order.push_back(pair_index(u2, v2));
          }
    }

    // Every f value allowed at each pair by the clauses that only look at
    // that pair.
    std::vector<std::vector<Value>> allowed(seen.size());
    for (std::size_t p : order) {
      const std::size_t u = p / nw, v = p % nw;
      bool ok = true;
      for (const auto& prop : props) ok = ok && a.holds(prop, u) == b.holds(prop, v);
      for (const auto& c : constants) {
        if (!ok) break;
        const int i = a.assigned(c, u), j = b.assigned(c, v);
        if ((i < 0) != (j < 0)) ok = false;
        else if (i >= 0)
          ok = decide(m.children[i].model, a.tracked(u, i), n.children[j].model, b.tracked(v, j));
      }
      if (!ok) continue;
      for (Value f = 0; f < (Value{1} << (na * nb)); ++f) {
        bool good = true;
        for (std::size_t i = 0; i < na && good; ++i) {
          bool hit = false;
          for (std::size_t j = 0; j < nb; ++j) hit = hit || (f >> (i * nb + j) & 1);
          good = hit;
        }
        for (std::size_t j = 0; j < nb && good; ++j) {
          bool hit = false;
          for (std::size_t i = 0; i < na; ++i) hit = hit || (f >> (i * nb + j) & 1);
          good = hit;
        }
        for (std::size_t i = 0; i < na && good; ++i)
          for (std::size_t j = 0; j < nb && good; ++j)
            if (f >> (i * nb + j) & 1)
              good = decide(m.children[i].model, a.tracked(u, i), n.children[j].model, b.tracked(v, j));
        if (good) allowed[p].push_back(f);
      }
    }
    if (allowed[order[0]].empty()) return false;

    // Position of each pair in `order`; a pair's zig and zag clauses are
    // checked once it and all its successor pairs have been decided.
    std::vector<std::size_t> pos(seen.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    std::vector<std::vector<std::size_t>> ready(order.size());
    for (std::size_t p : order) {
      const std::size_t u = p / nw, v = p % nw;
      std::size_t last = pos[p];
      for (std::size_t u2 : a.succ[u])
        for (std::size_t v2 : b.succ[v]) last = std::max(last, pos[pair_index(u2, v2)]);
      ready[last].push_back(p);
    }

    // -1 marks a pair left out of z.
    std::vector<long> value(seen.size(), -1);
    auto clauses_hold = [&](std::size_t p) {
      if (value[p] < 0) return true;
      const Value f = static_cast<Value>(value[p]);
      const std::size_t u = p / nw, v = p % nw;
      auto covers = [&](std::size_t q) {
        return value[q] >= 0 && (f & ~static_cast<Value>(value[q])) == 0;
      };
      for (std::size_t u2 : a.succ[u])
        if (std::none_of(b.succ[v].begin(), b.succ[v].end(),
                         [&](std::size_t v2) { return covers(pair_index(u2, v2)); }))
          return false;
      for (std::size_t v2 : b.succ[v])
        if (std::none_of(a.succ[u].begin(), a.succ[u].end(),
                         [&](std::size_t u2) { return covers(pair_index(u2, v2)); }))
          return false;
      return true;
    };

    auto rec = [&](auto&& self, std::size_t k) -> bool {
      if (k == order.size()) return true;
      const std::size_t p = order[k];
      std::vector<long> options;
      if (k != 0) options.push_back(-1);
      for (Value f : allowed[p]) options.push_back(static_cast<long>(f));
      for (long o : options) {
        value[p] = o;
        if (std::all_of(ready[k].begin(), ready[k].end(), clauses_hold) && self(self, k + 1))
          return true;
      }
      value[p] = -1;
      return false;
    };
    return rec(rec, 0);
  }

  std::map<std::tuple<const GenealogicalModel*, const GenealogicalModel*, std::string, std::string>, bool>
      memo_;
};

}  // namespace

bool brute_force_bisim(const PointedModel& pm, const PointedModel& pn) {
  if (!pm.model->has_world(pm.world)) throw UnknownWorld("unknown world '" + pm.world + "'");
  if (!pn.model->has_world(pn.world)) throw UnknownWorld("unknown world '" + pn.world + "'");
  Oracle oracle;
  return oracle.decide(*pm.model, pm.world, *pn.model, pn.world);
}

}  // namespace fomc
