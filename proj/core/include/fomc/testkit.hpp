#pragma once

#include <cstdint>
#include <string>

#include "fomc/formula.hpp"
#include "fomc/model.hpp"
#include "fomc/vocabulary.hpp"

namespace fomc::testkit {

/// SplitMix64 (Steele, Lea and Flood). Each call adds 0x9e3779b97f4a7c15 to
/// the state and returns the mixed state:
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   z ^ (z >> 31)
/// Seed 1234567 yields 6457827717110365317, 3203168211198807973,
/// 9817491932198370423, 4593380528125082431, 16408922859458223821.
/// split() seeds a new generator with the next output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t max_worlds = 4;  // each generation has 1..max_worlds worlds
  std::size_t max_children = 2;
  std::size_t max_depth = 2;
  std::size_t prop_count = 2;
  std::size_t constant_count = 1;
  Closure closure = Closure::none;
  /// Probability of each ordered edge.
  std::uint64_t edge_num = 1;
  std::uint64_t edge_den = 3;
};

/// Names used by the generators: p, q, r, s, t, u, p6, ... and c, d, e, ...
std::string prop_name(std::size_t k);
std::string constant_name(std::size_t k);
Vocabulary gen_vocabulary(const GenSpec& g);

/// A valid model, determined by `g` alone. Worlds are s0, s1, ...;
/// children N1, N2, ... at every generation.
GenealogicalModel gen_model(const GenSpec& g);
GenealogicalModel gen_model(const GenSpec& g, SplitMix64& rng);

struct SentenceSpec {
  Vocabulary vocab;
  std::size_t max_depth = 4;  // nesting of generated connectives
  std::size_t model_vars = 2;
  bool allow_xi = true;
  std::size_t max_xi_nesting = 2;
};

/// A sentence by construction: model variables are only used under their
/// binder and never across a query or xi boundary, and a formula variable
/// is only the innermost xi's own, used below a query inside it.
Formula gen_sentence(SplitMix64& rng, const SentenceSpec& spec);

/// Any formula over the same productions, open ones included.
Formula gen_formula(SplitMix64& rng, const SentenceSpec& spec);

/// Adds an exact copy of child `label` under a fresh label, tracked exactly
/// like the original. Bisimilar to `m` at every world.
GenealogicalModel dup_child(const GenealogicalModel& m, const std::string& label);

/// Flips whether `prop` holds at `world` of child `label`. An involution.
GenealogicalModel break_child(const GenealogicalModel& m, const std::string& label,
                              const std::string& prop, const std::string& world);

/// Adds a copy of `world` with the same atoms, constants, tracking and
/// edges in both directions. Bisimilar to `m` at every old world.
GenealogicalModel dup_world(const GenealogicalModel& m, const std::string& world);

struct ModelPair {
  GenealogicalModel m;
  std::string s;
  GenealogicalModel n;
  std::string t;
  std::string kind;  // independent, dup_child, break_child or dup_world
};

/// A pair within the brute-force oracle's guard: at most three worlds per
/// generation, at most two children, depth at most two.
ModelPair gen_tiny_pair(SplitMix64& rng);

/// A tiny pair obtained by break_child, for separator searches.
ModelPair gen_broken_pair(SplitMix64& rng);

}  // namespace fomc::testkit
