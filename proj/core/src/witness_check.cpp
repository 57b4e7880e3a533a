#include <algorithm>

#include "fomc/bisimulation.hpp"

namespace fomc {

namespace {

const std::string* lookup(const std::map<std::string, std::map<std::string, std::string>>& table,
                          const std::string& row, const std::string& col) {
  auto r = table.find(row);
  if (r == table.end()) return nullptr;
  auto c = r->second.find(col);
  return c == r->second.end() ? nullptr : &c->second;
}

bool in(const std::map<std::string, std::set<std::string>>& valuation, const std::string& p,
        const std::string& w) {
  auto it = valuation.find(p);
  return it != valuation.end() && it->second.contains(w);
}

std::vector<std::string> successors(const GenealogicalModel& m, const std::string& w) {
  std::vector<std::string> out;
  for (auto it = m.relation.lower_bound({w, ""}); it != m.relation.end() && it->first == w; ++it)
    out.push_back(it->second);
  return out;
}

class Checker {
 public:
  explicit Checker(WitnessReport& report) : report_(report) {}

  bool check(const GenealogicalModel& m, const std::string& s, const GenealogicalModel& n,
             const std::string& t, const BisimWitness& w, const std::string& where) {
    const std::size_t before = report_.issues.size();
    auto fail = [&](const char* clause, std::string message) {
      report_.issues.push_back({clause, where, std::move(message)});
    };
    auto show = [](const WorldPair& p) { return "(" + p.first + "," + p.second + ")"; };

    if (!w.z.contains({s, t})) fail("root", "pointed pair " + show({s, t}) + " is not in z");

    for (const auto& p : w.z) {
      if (!m.has_world(p.first) || !n.has_world(p.second))
        fail("f-domain", "z pair " + show(p) + " names an unknown world");
      if (!w.f.contains(p)) fail("f-domain", "f undefined on " + show(p));
    }
    for (const auto& [p, labels] : w.f) {
      if (!w.z.contains(p)) fail("f-domain", "f defined on " + show(p) + " outside z");
      for (const auto& [a, b] : labels)
        if (!m.child(a) || !n.child(b))
          fail("f-domain", "f" + show(p) + " names unknown children (" + a + "," + b + ")");
    }
    if (report_.issues.size() != before) return false;

    std::set<std::string> props, constants;
    for (const auto* x : {&m, &n}) {
      for (const auto& [p, ws] : x->valuation) props.insert(p);
      for (const auto& [world, row] : x->assignment)
        for (const auto& [c, label] : row) constants.insert(c);
    }

    for (const auto& p : w.z) {
      const auto& [u, v] = p;
      for (const auto& prop : props)
        if (in(m.valuation, prop, u) != in(n.valuation, prop, v))
          fail("atoms", "'" + prop + "' differs at " + show(p));

      const auto& labels = w.f.at(p);
      for (const auto& c : m.children)
        if (std::none_of(labels.begin(), labels.end(), [&](const LabelPair& l) { return l.first == c.label; }))
          fail("f-left-total", "child '" + c.label + "' unmatched at " + show(p));
      for (const auto& c : n.children)
        if (std::none_of(labels.begin(), labels.end(), [&](const LabelPair& l) { return l.second == c.label; }))
          fail("f-right-total", "child '" + c.label + "' unmatched at " + show(p));

      for (const auto& [a, b] : labels)
        if (!child_ok(w, m, u, a, n, v, b, where))
          fail("children", "children (" + a + "," + b + ") not shown bisimilar at " + show(p));

      for (const auto& c : constants) {
        const std::string* a = lookup(m.assignment, u, c);
        const std::string* b = lookup(n.assignment, v, c);
        if (!a && !b) continue;
        if (!a || !b) {
          fail("constants", "'#" + c + "' defined on one side only at " + show(p));
        } else if (!m.child(*a) || !n.child(*b) || !child_ok(w, m, u, *a, n, v, *b, where)) {
          fail("constants", "'#" + c + "' denotes children not shown bisimilar at " + show(p));
        }
      }

      for (const auto& u2 : successors(m, u)) {
        bool ok = false;
        for (const auto& v2 : successors(n, v)) {
          auto f2 = w.f.find({u2, v2});
          if (w.z.contains({u2, v2}) && f2 != w.f.end() &&
              std::includes(f2->second.begin(), f2->second.end(), labels.begin(), labels.end()))
            ok = true;
        }
        if (!ok) fail("zig", "step " + u + "->" + u2 + " unmatched from " + show(p));
      }
      for (const auto& v2 : successors(n, v)) {
        bool ok = false;
        for (const auto& u2 : successors(m, u)) {
          auto f2 = w.f.find({u2, v2});
          if (w.z.contains({u2, v2}) && f2 != w.f.end() &&
              std::includes(f2->second.begin(), f2->second.end(), labels.begin(), labels.end()))
            ok = true;
        }
        if (!ok) fail("zag", "step " + v + "->" + v2 + " unmatched from " + show(p));
      }
    }
    return report_.issues.size() == before;
  }

 private:
  bool child_ok(const BisimWitness& w, const GenealogicalModel& m, const std::string& u, const std::string& a,
                const GenealogicalModel& n, const std::string& v, const std::string& b,
                const std::string& where) {
    const std::string* wa = lookup(m.tracking, u, a);
    const std::string* wb = lookup(n.tracking, v, b);
    if (!wa || !wb) return false;
    const ChildKey key{a, b, *wa, *wb};
    const std::string path = where + "/" + key.str();
    auto done = verdicts_.find(path);
    if (done != verdicts_.end()) return done->second;
    const BisimWitness* cw = w.child(key);
    const bool ok = cw && check(*m.child(a), *wa, *n.child(b), *wb, *cw, path);
    verdicts_.emplace(path, ok);
    return ok;
  }

  WitnessReport& report_;
  std::map<std::string, bool> verdicts_;
};

}  // namespace

bool WitnessReport::cites(const std::string& clause) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const WitnessIssue& i) { return i.clause == clause; });
}

WitnessReport check_witness(const PointedModel& pm, const PointedModel& pn, const BisimWitness& w) {
  WitnessReport report;
  Checker checker(report);
  report.ok = checker.check(*pm.model, pm.world, *pn.model, pn.world, w, "");
  report.ok = report.ok && report.issues.empty();
  return report;
}

}  // namespace fomc
