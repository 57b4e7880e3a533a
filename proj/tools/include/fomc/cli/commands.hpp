#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fomc::cli {

enum Exit : int {
  holds = 0,        // valid / holds / bisimilar / separator found
  fails = 1,        // invalid / fails / not bisimilar
  input_error = 2,  // unreadable or malformed input, oracle disagreement
  unknown = 3,      // budget exhausted
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
  /// One JSON object per line on `out` instead of text.
  bool json = false;
};

int cmd_validate(const std::string& model_path, Streams io);

struct EvalArgs {
  std::string model;
  std::string sentence;
  std::optional<std::string> world;
  std::optional<std::string> vocab;  // path to {"props": [...], "constants": [...]}
};
/// Without a world, exits 0 iff the sentence holds at every world.
int cmd_eval(const EvalArgs& a, Streams io);

struct BisimArgs {
  std::string model1, world1, model2, world2;
  std::optional<std::string> witness_out;
  bool oracle = false;
  std::size_t budget = 0;  // 0: FOMC_BISIM_BUDGET or the library default
};
int cmd_bisim(const BisimArgs& a, Streams io);

struct DistinguishArgs {
  std::string model1, world1, model2, world2;
  std::size_t max_depth = 4;  // modal depth
  std::size_t max_size = 0;   // 0: FOMC_DISTINGUISH_MAX_SIZE or the library default
  std::size_t model_vars = 1;
  bool xi = false;
};
int cmd_distinguish(const DistinguishArgs& a, Streams io);

struct GenArgs {
  std::uint64_t seed = 0;
  std::size_t max_worlds = 4;
  std::size_t max_children = 2;
  std::size_t max_depth = 2;
  std::size_t props = 2;
  std::size_t constants = 1;
  bool closure = false;
  std::uint64_t edge_num = 1;
  std::uint64_t edge_den = 3;
  std::optional<std::string> out;
};
int cmd_gen(const GenArgs& a, Streams io);

struct FmtArgs {
  std::string sentence;
  std::optional<std::string> vocab;
};
int cmd_fmt(const FmtArgs& a, Streams io);

/// Parses `argv` and dispatches; what `fomc` runs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fomc::cli
