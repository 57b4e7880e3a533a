#include "fomc/printer.hpp"

#include <algorithm>

namespace fomc {

namespace {

enum class Surface { primitive, falsum, disj, imp, diamond, exists };

// Recognises the expansion of a derived form at the root of `f`.
struct View {
  Surface kind = Surface::primitive;
  const Formula* a = nullptr;
  const Formula* b = nullptr;
  const std::string* var = nullptr;
};

View view(const Formula& f) {
  if (f.kind() != NodeKind::negation) return {};
  const Formula& inner = f.body();
  switch (inner.kind()) {
    case NodeKind::top:
      return {Surface::falsum};
    case NodeKind::conjunction: {
      const Formula& l = inner.lhs();
      const Formula& r = inner.rhs();
      if (r.kind() != NodeKind::negation) return {};
      // `a | b` when the left side is a plain negation; a left side that is
      // itself a disjunction or implication reads better as `a -> b`.
      if (l.kind() == NodeKind::negation) {
        const Surface ls = view(l).kind;
        if (ls != Surface::disj && ls != Surface::imp) return {Surface::disj, &l.body(), &r.body()};
      }
      return {Surface::imp, &l, &r.body()};
    }
    case NodeKind::box:
      if (inner.body().kind() == NodeKind::negation)
        return {Surface::diamond, &inner.body().body()};
      return {};
    case NodeKind::forall:
      if (inner.body().kind() == NodeKind::negation)
        return {Surface::exists, &inner.body().body(), nullptr, &inner.name()};
      return {};
    default:
      return {};
  }
}

// Binding strength; larger binds tighter.
constexpr int kImp = 0;
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kUnary = 3;

void emit(const Formula& f, int level, std::string& out);

void emit_at(int own, int level, std::string& out,
             const auto& body) {
  const bool parens = own < level;
  if (parens) out += '(';
  body();
  if (parens) out += ')';
}

void emit(const Formula& f, int level, std::string& out) {
  const View v = view(f);
  switch (v.kind) {
    case Surface::falsum:
      out += 'F';
      return;
    case Surface::disj:
      emit_at(kOr, level, out, [&] {
        emit(*v.a, kOr, out);
        out += " | ";
        emit(*v.b, kAnd, out);
      });
      return;
    case Surface::imp:
      emit_at(kImp, level, out, [&] {
        emit(*v.a, kOr, out);
        out += " -> ";
        emit(*v.b, kImp, out);
      });
      return;
    case Surface::diamond:
      out += "<>";
      emit(*v.a, kUnary, out);
      return;
    case Surface::exists:
      out += "exists ";
      out += *v.var;
      out += ". ";
      emit(*v.a, kUnary, out);
      return;
    case Surface::primitive:
      break;
  }
  switch (f.kind()) {
    case NodeKind::top:
      out += 'T';
      return;
    case NodeKind::prop:
    case NodeKind::formula_var:
      out += f.name();
      return;
    case NodeKind::query_var:
    case NodeKind::query_const:
      out += "?[";
      emit(f.body(), kImp, out);
      out += "] ";
      if (f.kind() == NodeKind::query_const) out += '#';
      out += f.name();
      return;
    case NodeKind::negation:
      out += '~';
      emit(f.body(), kUnary, out);
      return;
    case NodeKind::box:
      out += "[]";
      emit(f.body(), kUnary, out);
      return;
    case NodeKind::conjunction:
      emit_at(kAnd, level, out, [&] {
        emit(f.lhs(), kAnd, out);
        out += " & ";
        emit(f.rhs(), kUnary, out);
      });
      return;
    case NodeKind::forall:
      out += "forall ";
      out += f.name();
      out += ". ";
      emit(f.body(), kUnary, out);
      return;
    case NodeKind::xi:
      out += "xi ";
      out += f.name();
      out += ". ";
      emit(f.body(), kUnary, out);
      return;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  emit(f, kImp, out);
  return out;
}

std::size_t surface_depth(const Formula& f) {
  const View v = view(f);
  switch (v.kind) {
    case Surface::falsum:
      return 0;
    case Surface::disj:
    case Surface::imp:
      return 1 + std::max(surface_depth(*v.a), surface_depth(*v.b));
    case Surface::diamond:
    case Surface::exists:
      return 1 + surface_depth(*v.a);
    case Surface::primitive:
      break;
  }
  switch (f.kind()) {
    case NodeKind::top:
    case NodeKind::prop:
    case NodeKind::formula_var:
      return 0;
    case NodeKind::conjunction:
      return 1 + std::max(surface_depth(f.lhs()), surface_depth(f.rhs()));
    default:
      return 1 + surface_depth(f.body());
  }
}

std::size_t modal_depth(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::top:
    case NodeKind::prop:
    case NodeKind::formula_var:
      return 0;
    case NodeKind::conjunction:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    case NodeKind::box:
      return 1 + modal_depth(f.body());
    default:
      return modal_depth(f.body());
  }
}

std::size_t xi_depth(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::top:
    case NodeKind::prop:
    case NodeKind::formula_var:
      return 0;
    case NodeKind::conjunction:
      return std::max(xi_depth(f.lhs()), xi_depth(f.rhs()));
    case NodeKind::xi:
      return 1 + xi_depth(f.body());
    default:
      return xi_depth(f.body());
  }
}

}  // namespace fomc
