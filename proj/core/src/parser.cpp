#include "fomc/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace fomc {

namespace {

std::string kind_label(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::lexical:
      return "lexical error";
    case ParseError::Kind::grammar:
      return "syntax error";
    case ParseError::Kind::unknown_name:
      return "unknown name";
  }
  return "error";
}

enum class Tok {
  end,
  lident,
  uident,
  tilde,     // ~
  amp,       // &
  bar,       // |
  arrow,     // ->
  box,       // []
  diamond,   // <>
  lparen,    // (
  rparen,    // )
  dot,       // .
  query,     // ?[
  rbracket,  // ]
  hash,      // #
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::lident:
    case Tok::uident:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = col;
    auto two = [&](char a, char b) { return c == a && i + 1 < text.size() && text[i + 1] == b; };
    auto push = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(text.substr(i, len)), tl, tc});
      advance(len);
    };
    if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(std::islower(static_cast<unsigned char>(c)) ? Tok::lident : Tok::uident, j - i);
    } else if (two('-', '>')) {
      push(Tok::arrow, 2);
    } else if (two('[', ']')) {
      push(Tok::box, 2);
    } else if (two('<', '>')) {
      push(Tok::diamond, 2);
    } else if (two('?', '[')) {
      push(Tok::query, 2);
    } else if (c == '~') {
      push(Tok::tilde, 1);
    } else if (c == '&') {
      push(Tok::amp, 1);
    } else if (c == '|') {
      push(Tok::bar, 1);
    } else if (c == '(') {
      push(Tok::lparen, 1);
    } else if (c == ')') {
      push(Tok::rparen, 1);
    } else if (c == '.') {
      push(Tok::dot, 1);
    } else if (c == ']') {
      push(Tok::rbracket, 1);
    } else if (c == '#') {
      push(Tok::hash, 1);
    } else {
      throw ParseError(ParseError::Kind::lexical, tl, tc,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "xi" || s == "T" || s == "F";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary* vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Tok::end) fail(peek(), "expected end of input, found " + describe(peek()));
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(ParseError::Kind::grammar, at.line, at.column, message);
  }

  Formula formula() { return imp(); }

  Formula imp() {
    Formula lhs = disj();
    if (accept(Tok::arrow)) return implication(std::move(lhs), imp());
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::bar)) f = disjunction(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept(Tok::amp)) f = conjunction(std::move(f), unary());
    return f;
  }

  std::string binder_var(Tok kind, const char* what) {
    const Token& t = expect(kind, what);
    if (is_keyword(t.text)) fail(t, "keyword '" + t.text + "' cannot be bound");
    expect(Tok::dot, "'.'");
    return t.text;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::tilde:
        take();
        return negation(unary());
      case Tok::box:
        take();
        return box(unary());
      case Tok::diamond:
        take();
        return diamond(unary());
      case Tok::query: {
        take();
        Formula body = formula();
        expect(Tok::rbracket, "']'");
        if (accept(Tok::hash)) {
          const Token& c = expect(Tok::lident, "constant name after '#'");
          if (vocab_ && !vocab_->has_constant(c.text))
            throw ParseError(ParseError::Kind::unknown_name, c.line, c.column,
                             "constant '#" + c.text + "' is not in the vocabulary");
          return query_const(std::move(body), c.text);
        }
        const Token& v = expect(Tok::lident, "model variable or '#constant' after ']'");
        if (is_keyword(v.text)) fail(v, "keyword '" + v.text + "' used as a model variable");
        return query_var(std::move(body), v.text);
      }
      case Tok::lident:
        if (t.text == "forall") {
          take();
          std::string x = binder_var(Tok::lident, "model variable after 'forall'");
          return forall(std::move(x), unary());
        }
        if (t.text == "exists") {
          take();
          std::string x = binder_var(Tok::lident, "model variable after 'exists'");
          return exists(std::move(x), unary());
        }
        if (t.text == "xi") {
          take();
          std::string x = binder_var(Tok::uident, "formula variable after 'xi'");
          return xi(std::move(x), unary());
        }
        return atom();
      default:
        return atom();
    }
  }

  Formula atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::uident:
        if (t.text == "T") return top();
        if (t.text == "F") return bottom();
        return formula_var(t.text);
      case Tok::lident:
        if (vocab_ && !vocab_->has_prop(t.text))
          throw ParseError(ParseError::Kind::unknown_name, t.line, t.column,
                           "proposition '" + t.text + "' is not in the vocabulary");
        return prop(t.text);
      case Tok::lparen: {
        Formula f = formula();
        expect(Tok::rparen, "')'");
        return f;
      }
      default:
        fail(t, "expected a formula, found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  const Vocabulary* vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind_label(kind) + ": " +
            message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

Formula parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(tokenize(text), &vocab).parse_all();
}

Formula parse_unchecked(std::string_view text) {
  return Parser(tokenize(text), nullptr).parse_all();
}

}  // namespace fomc
