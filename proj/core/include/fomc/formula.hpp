#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace fomc {

enum class NodeKind : std::uint8_t {
  formula_var,  // X
  top,          // T
  prop,         // p
  query_var,    // ?[phi] x
  query_const,  // ?[phi] #c
  negation,     // ~phi
  conjunction,  // phi & psi
  box,          // []phi
  forall,       // forall x. phi
  xi,           // xi X. phi
};

struct FormulaNode;

/// Immutable formula tree. Copies share structure; equality is structural.
///
/// Only the primitive productions are representable. Derived connectives
/// (F, |, ->, <>, exists) are expanded by their constructors, so a stored
/// tree never contains them.
class Formula {
 public:
  Formula() = default;

  NodeKind kind() const;
  /// Variable, proposition or constant name for leaves and queries; the
  /// bound variable for forall and xi.
  const std::string& name() const;
  /// Operand of unary nodes, binders and queries; left operand of `&`.
  const Formula& body() const;
  const Formula& lhs() const { return body(); }
  const Formula& rhs() const;

  /// Number of nodes in the tree.
  std::size_t size() const;
  std::size_t hash() const;

  /// Address of the root node; stable for the lifetime of any copy.
  const FormulaNode* id() const { return node_.get(); }
  bool empty() const { return node_ == nullptr; }

  bool is_unary() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  friend Formula make_node(NodeKind, std::string, Formula, Formula);
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const FormulaNode> node_;
};

/// Strict weak order: by size, then kind, then name, then operands.
bool structural_less(const Formula& a, const Formula& b);

struct FormulaNode {
  NodeKind kind;
  std::string name;
  Formula first;
  Formula second;
  std::size_t size;
  std::size_t hash;
};

// Primitive productions.
Formula top();
Formula prop(std::string name);
Formula formula_var(std::string name);
Formula query_var(Formula body, std::string var);
Formula query_const(Formula body, std::string constant);
Formula negation(Formula f);
Formula conjunction(Formula a, Formula b);
Formula box(Formula f);
Formula forall(std::string var, Formula body);
Formula xi(std::string var, Formula body);

// Derived forms, expanded on construction.
Formula bottom();
Formula disjunction(Formula a, Formula b);
Formula implication(Formula a, Formula b);
Formula diamond(Formula f);
Formula exists(std::string var, Formula body);

}  // namespace fomc

template <>
struct std::hash<fomc::Formula> {
  std::size_t operator()(const fomc::Formula& f) const noexcept { return f.hash(); }
};
