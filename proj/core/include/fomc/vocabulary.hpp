#pragma once

#include <set>
#include <string>

namespace fomc {

/// The fixed proposition letters and model constants of a language.
/// Constants are written with a `#` sigil in formulas, so the two name sets
/// never collide at the surface.
struct Vocabulary {
  std::set<std::string> props;
  std::set<std::string> constants;

  bool has_prop(const std::string& p) const { return props.contains(p); }
  bool has_constant(const std::string& c) const { return constants.contains(c); }

  Vocabulary& merge(const Vocabulary& other) {
    props.insert(other.props.begin(), other.props.end());
    constants.insert(other.constants.begin(), other.constants.end());
    return *this;
  }

  bool operator==(const Vocabulary&) const = default;
};

}  // namespace fomc
