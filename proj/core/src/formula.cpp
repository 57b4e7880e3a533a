#include "fomc/formula.hpp"

#include <cassert>
#include <tuple>

namespace fomc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::string kEmptyName;

}  // namespace

Formula make_node(NodeKind kind, std::string name, Formula first, Formula second) {
  std::size_t size = 1;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(name));
  if (!first.empty()) {
    size += first.size();
    h = mix(h, first.hash());
  }
  if (!second.empty()) {
    size += second.size();
    h = mix(h, second.hash());
  }
  auto node = std::make_shared<const FormulaNode>(
      FormulaNode{kind, std::move(name), std::move(first), std::move(second), size, h});
  return Formula(std::move(node));
}

NodeKind Formula::kind() const {
  assert(node_);
  return node_->kind;
}

const std::string& Formula::name() const { return node_ ? node_->name : kEmptyName; }

const Formula& Formula::body() const {
  assert(node_ && !node_->first.empty());
  return node_->first;
}

const Formula& Formula::rhs() const {
  assert(node_ && node_->kind == NodeKind::conjunction);
  return node_->second;
}

std::size_t Formula::size() const { return node_ ? node_->size : 0; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }

bool Formula::is_unary() const {
  switch (kind()) {
    case NodeKind::formula_var:
    case NodeKind::top:
    case NodeKind::prop:
    case NodeKind::conjunction:
      return false;
    default:
      return true;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  return x.hash == y.hash && x.size == y.size && x.kind == y.kind && x.name == y.name &&
         x.first == y.first && x.second == y.second;
}

bool structural_less(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return false;
  if (a.empty() || b.empty()) return a.empty() && !b.empty();
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  const FormulaNode& x = *a.id();
  const FormulaNode& y = *b.id();
  if (x.first != y.first) return structural_less(x.first, y.first);
  return structural_less(x.second, y.second);
}

Formula top() { return make_node(NodeKind::top, {}, {}, {}); }
Formula prop(std::string name) { return make_node(NodeKind::prop, std::move(name), {}, {}); }
Formula formula_var(std::string name) {
  return make_node(NodeKind::formula_var, std::move(name), {}, {});
}
Formula query_var(Formula body, std::string var) {
  return make_node(NodeKind::query_var, std::move(var), std::move(body), {});
}
Formula query_const(Formula body, std::string constant) {
  return make_node(NodeKind::query_const, std::move(constant), std::move(body), {});
}
Formula negation(Formula f) { return make_node(NodeKind::negation, {}, std::move(f), {}); }
Formula conjunction(Formula a, Formula b) {
  return make_node(NodeKind::conjunction, {}, std::move(a), std::move(b));
}
Formula box(Formula f) { return make_node(NodeKind::box, {}, std::move(f), {}); }
Formula forall(std::string var, Formula body) {
  return make_node(NodeKind::forall, std::move(var), std::move(body), {});
}
Formula xi(std::string var, Formula body) {
  return make_node(NodeKind::xi, std::move(var), std::move(body), {});
}

Formula bottom() { return negation(top()); }
Formula disjunction(Formula a, Formula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}
Formula implication(Formula a, Formula b) {
  return negation(conjunction(std::move(a), negation(std::move(b))));
}
Formula diamond(Formula f) { return negation(box(negation(std::move(f)))); }
Formula exists(std::string var, Formula body) {
  return negation(forall(std::move(var), negation(std::move(body))));
}

}  // namespace fomc
