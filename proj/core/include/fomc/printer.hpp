#pragma once

#include <cstddef>
#include <string>

#include "fomc/formula.hpp"

namespace fomc {

/// Canonical text for `f`. Expanded derived forms are folded back into
/// their surface sugar (`~T` prints as `F`, `~[]~p` as `<>p`, ...), and
/// parentheses appear only where precedence needs them, so
/// `parse(print(f)) == f` for every formula.
std::string print(const Formula& f);

/// Nesting depth of connectives in the canonical text: atoms are 0, every
/// surface operator, binder or query adds one.
std::size_t surface_depth(const Formula& f);

/// Maximum nesting of [] (and <>) along any path, query bodies included.
std::size_t modal_depth(const Formula& f);

/// Maximum nesting of xi binders along any path.
std::size_t xi_depth(const Formula& f);

}  // namespace fomc
