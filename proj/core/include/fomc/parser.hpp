#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fomc/error.hpp"
#include "fomc/formula.hpp"
#include "fomc/vocabulary.hpp"

namespace fomc {

class ParseError : public Error {
 public:
  enum class Kind { lexical, grammar, unknown_name };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Parses the ASCII surface syntax:
///
///   formula := imp
///   imp     := or ( "->" imp )?
///   or      := and ( "|" and )*
///   and     := unary ( "&" unary )*
///   unary   := "~" unary | "[]" unary | "<>" unary
///            | "forall" LIDENT "." unary | "exists" LIDENT "." unary
///            | "xi" UIDENT "." unary | "?[" formula "]" term | atom
///   atom    := "T" | "F" | LIDENT | UIDENT | "(" formula ")"
///   term    := LIDENT | "#" LIDENT
///
/// Binders are prefix operators: `forall x. p & q` is `(forall x. p) & q`.
/// Every proposition and constant must come from `vocab`.
Formula parse(std::string_view text, const Vocabulary& vocab);

/// Same grammar, without the vocabulary check.
Formula parse_unchecked(std::string_view text);

}  // namespace fomc
