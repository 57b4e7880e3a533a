#include <benchmark/benchmark.h>

#include "fomc/bisimulation.hpp"
#include "fomc/distinguisher.hpp"
#include "fomc/evaluator.hpp"
#include "fomc/parser.hpp"
#include "fomc/testkit.hpp"

using namespace fomc;

namespace {

GenealogicalModel model(std::size_t worlds, std::uint64_t seed) {
  testkit::GenSpec g;
  g.seed = seed;
  g.max_worlds = worlds;
  g.max_depth = 3;
  return testkit::gen_model(g);
}

}  // namespace

static void BM_EvalWellFounded(benchmark::State& state) {
  const auto m = model(static_cast<std::size_t>(state.range(0)), 5);
  const Formula f = parse("xi X. forall x. ?[X] x", {});
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(ev.evaluate(f));
  }
}
BENCHMARK(BM_EvalWellFounded)->Arg(2)->Arg(4)->Arg(6);

static void BM_EvalRandomSentences(benchmark::State& state) {
  const auto m = model(4, 9);
  testkit::SentenceSpec spec;
  spec.vocab = vocabulary_of(m);
  spec.vocab.props.insert({"p", "q"});
  spec.vocab.constants.insert("c");
  testkit::SplitMix64 rng(3);
  std::vector<Formula> fs;
  for (int k = 0; k < 64; ++k) fs.push_back(testkit::gen_sentence(rng, spec));
  Evaluator ev(m);
  for (auto _ : state)
    for (const auto& f : fs) benchmark::DoNotOptimize(ev.evaluate(f));
}
BENCHMARK(BM_EvalRandomSentences);

static void BM_BisimDupChild(benchmark::State& state) {
  const auto m = model(static_cast<std::size_t>(state.range(0)), 11);
  const auto n = m.children.empty() ? m : testkit::dup_child(m, m.children.front().label);
  for (auto _ : state) benchmark::DoNotOptimize(bisimilar(m, "s0", n, "s0"));
}
BENCHMARK(BM_BisimDupChild)->Arg(2)->Arg(3);

static void BM_Enumerate(benchmark::State& state) {
  EnumerationBudget b;
  b.vocab.props = {"p", "q"};
  b.vocab.constants = {"c"};
  b.max_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sentences(b).size());
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(7);

static void BM_DistinguishFlip(benchmark::State& state) {
  testkit::SplitMix64 rng(21);
  const auto pair = testkit::gen_broken_pair(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(distinguish(PointedModel{&pair.m, pair.s}, PointedModel{&pair.n, pair.t}));
}
BENCHMARK(BM_DistinguishFlip);
BENCHMARK_MAIN();
