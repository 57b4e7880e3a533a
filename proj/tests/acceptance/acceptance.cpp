// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "fomc/analysis.hpp"
#include "fomc/bisimulation.hpp"
#include "fomc/distinguisher.hpp"
#include "fomc/evaluator.hpp"
#include "fomc/model_io.hpp"
#include "fomc/parser.hpp"
#include "fomc/printer.hpp"
#include "fomc/testkit.hpp"
#include "support.hpp"

using namespace fomc;
using fomc::test::corpus_sentence;
using fomc::test::fixture;

namespace {

// Pinned workloads and thresholds.
constexpr int kValidityModels = 200;
constexpr int kDupChildPairs = 100;
constexpr std::size_t kDupChildMaxSize = 9;
constexpr int kOraclePairs = 300;
constexpr int kSeparatorPairs = 500;
constexpr double kSeparatorRate = 0.95;
constexpr std::size_t kSeparatorMaxSize = 12;
constexpr int kRoundTripSentences = 1000;
constexpr int kRoundTripModels = 200;
constexpr int kFuzzEvaluations = 10000;

struct Outcome {
  bool pass;
  std::string detail;
};

PointedModel at(const GenealogicalModel& m, const std::string& w) { return {&m, w}; }

bool corpus_holds(const std::string& name) {
  const auto e = corpus_sentence(name);
  const auto m = fixture(e.at("model"));
  return holds_at(m, e.at("world"), parse(e.at("text").get<std::string>(), vocabulary_of(m)));
}

Outcome example(const std::string& name, bool expected) {
  const bool got = corpus_holds(name);
  return {got == expected, name + (got ? " holds" : " fails") + " at s0"};
}

Outcome well_founded_everywhere() {
  const Formula f = parse(corpus_sentence("well_founded").at("text").get<std::string>(), {});
  int violations = 0;
  for (int k = 0; k < kValidityModels; ++k) {
    testkit::GenSpec g;
    g.seed = 4000 + k;
    g.max_depth = 3;
    g.max_worlds = 6;
    const auto m = testkit::gen_model(g);
    violations += static_cast<int>(m.worlds.size() - evaluate_sentence(m, f).count());
  }
  return {violations == 0, std::to_string(kValidityModels) + " models, " + std::to_string(violations) +
                               " world violations"};
}

Outcome dup_child_invariance() {
  EnumerationBudget b;
  b.max_connective_depth = 3;
  b.max_modal_depth = 3;
  b.allow_xi = true;
  b.max_xi_nesting = 1;
  b.model_vars = 1;
  b.max_size = kDupChildMaxSize;
  b.vocab.props = {"p", "q"};
  b.vocab.constants = {"c"};
  const auto sentences = enumerate_sentences(b);

  int disagreements = 0, not_bisimilar = 0, bad_witness = 0, pairs = 0;
  for (std::uint64_t seed = 5000; pairs < kDupChildPairs; ++seed) {
    testkit::GenSpec g;
    g.seed = seed;
    g.max_worlds = 3;
    const auto m = testkit::gen_model(g);
    if (m.children.empty()) continue;
    ++pairs;
    const auto n = testkit::dup_child(m, m.children[seed % m.children.size()].label);
    Evaluator em(m), en(n);
    for (const auto& f : sentences)
      if (em.evaluate(f) != en.evaluate(f)) ++disagreements;
    for (const auto& w : m.worlds) {
      const auto v = bisimilar(m, w, n, w);
      if (!v.bisimilar) {
        ++not_bisimilar;
      } else if (!check_witness(at(m, w), at(n, w), *v.witness).ok) {
        ++bad_witness;
      }
    }
  }
  return {disagreements == 0 && not_bisimilar == 0 && bad_witness == 0,
          std::to_string(pairs) + " pairs x " + std::to_string(sentences.size()) + " sentences (size <= " +
              std::to_string(kDupChildMaxSize) + "): " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(not_bisimilar) + " non-bisimilar, " + std::to_string(bad_witness) +
              " rejected witnesses"};
}

Outcome oracle_equivalence() {
  testkit::SplitMix64 rng(6000);
  int disagreements = 0, yes = 0;
  for (int k = 0; k < kOraclePairs; ++k) {
    const auto p = testkit::gen_tiny_pair(rng);
    const bool fast = bisimilar(p.m, p.s, p.n, p.t).bisimilar;
    const bool slow = brute_force_bisim(at(p.m, p.s), at(p.n, p.t));
    disagreements += fast != slow;
    yes += slow;
  }
  return {disagreements == 0, std::to_string(kOraclePairs) + " pairs (" + std::to_string(yes) +
                                  " bisimilar), " + std::to_string(disagreements) + " disagreements"};
}

Outcome sentence_hand_cases() {
  const std::pair<const char*, bool> cases[] = {
      {"forall x. ?[p] x", true}, {"?[p] x", false},         {"xi X. ?[X] #c", true},
      {"xi X. X", false},         {"?[xi X. X] #c", false}, {"xi X. forall x. ?[X] x", true},
  };
  Vocabulary v;
  v.props = {"p"};
  v.constants = {"c"};
  int wrong = 0;
  std::string detail;
  for (const auto& [text, expected] : cases) {
    const bool got = is_sentence(parse(text, v));
    wrong += got != expected;
    if (got != expected) detail += std::string(" [") + text + "]";
  }
  return {wrong == 0, "6 cases, " + std::to_string(wrong) + " misclassified" + detail};
}

Outcome separators() {
  testkit::SplitMix64 rng(8000);
  DistinguishOptions o;
  o.max_modal_depth = 4;
  o.max_size = kSeparatorMaxSize;
  int certified = 0, found = 0, unverified = 0, drawn = 0;
  while (certified < kSeparatorPairs) {
    const auto p = testkit::gen_tiny_pair(rng);
    ++drawn;
    if (brute_force_bisim(at(p.m, p.s), at(p.n, p.t))) continue;
    ++certified;
    const auto r = distinguish(at(p.m, p.s), at(p.n, p.t), o);
    if (!r.separator) continue;
    ++found;
    if (holds_at(p.m, p.s, *r.separator) == holds_at(p.n, p.t, *r.separator)) ++unverified;
  }
  const double rate = static_cast<double>(found) / certified;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", rate);
  return {rate >= kSeparatorRate && unverified == 0,
          std::to_string(found) + "/" + std::to_string(certified) + " non-bisimilar pairs separated (rate " + buf +
              ", need " + std::to_string(kSeparatorRate).substr(0, 4) + "), " + std::to_string(unverified) +
              " unverified"};
}

Outcome round_trips() {
  testkit::SplitMix64 rng(9000);
  testkit::SentenceSpec spec;
  spec.vocab.props = {"p", "q", "r"};
  spec.vocab.constants = {"c", "d"};
  spec.max_depth = 6;
  int bad_sentences = 0, bad_models = 0;
  for (int k = 0; k < kRoundTripSentences; ++k) {
    const Formula f = testkit::gen_sentence(rng, spec);
    bad_sentences += !(parse(print(f), spec.vocab) == f);
  }
  for (int k = 0; k < kRoundTripModels; ++k) {
    testkit::GenSpec g;
    g.seed = 9100 + k;
    g.max_depth = 3;
    const auto m = testkit::gen_model(g);
    bad_models += !(load_model(dump_model(m)) == m);
  }
  return {bad_sentences == 0 && bad_models == 0,
          std::to_string(bad_sentences) + "/" + std::to_string(kRoundTripSentences) + " sentence and " +
              std::to_string(bad_models) + "/" + std::to_string(kRoundTripModels) + " model failures"};
}

Outcome fuzz() {
  testkit::SplitMix64 rng(10000);
  int errors = 0, done = 0;
  for (std::uint64_t seed = 0; done < kFuzzEvaluations; ++seed) {
    testkit::GenSpec g;
    g.seed = 10000 + seed;
    g.max_depth = 3;
    const auto m = testkit::gen_model(g);
    testkit::SentenceSpec spec;
    spec.vocab = testkit::gen_vocabulary(g);
    spec.max_depth = 6;
    Evaluator ev(m);
    for (int k = 0; k < 50; ++k, ++done) {
      try {
        ev.evaluate(testkit::gen_sentence(rng, spec));
      } catch (const InterpretationError&) {
        ++errors;
      }
    }
  }
  return {errors == 0, std::to_string(done) + " evaluations, " + std::to_string(errors) +
                           " uninterpreted-variable errors"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"de dicto example", [] { return example("de_dicto", true); }},
      {"deadlock example",
       [] {
         const auto a = example("deadlock_avoided", true);
         const auto b = example("deadlock_reachable", false);
         return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
       }},
      {"wait-for-all example", [] { return example("some_process_running", true); }},
      {"well-foundedness valid on random models", well_founded_everywhere},
      {"duplicated child preserves every sentence", dup_child_invariance},
      {"solver agrees with brute-force oracle", oracle_equivalence},
      {"sentence hand cases", sentence_hand_cases},
      {"separators for non-bisimilar tiny pairs", separators},
      {"round trips", round_trips},
      {"fuzzed evaluation robustness", fuzz},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
