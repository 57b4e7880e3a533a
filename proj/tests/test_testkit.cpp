#include <gtest/gtest.h>

#include "fomc/analysis.hpp"
#include "fomc/model_io.hpp"
#include "fomc/testkit.hpp"

using namespace fomc;
using namespace fomc::testkit;

TEST(SplitMix64, ReferenceVectors) {
  SplitMix64 rng(1234567);
  const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                                    4593380528125082431ULL, 16408922859458223821ULL};
  for (auto e : expected) EXPECT_EQ(rng.next(), e);
}

TEST(SplitMix64, BelowStaysInRangeAndCoversIt) {
  SplitMix64 rng(9);
  std::vector<int> hits(7);
  for (int k = 0; k < 7000; ++k) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(SplitMix64, SplitIsIndependentOfLaterDraws) {
  SplitMix64 a(4), b(4);
  auto sa = a.split();
  auto sb = b.split();
  EXPECT_EQ(sa.next(), sb.next());
  EXPECT_EQ(a.next(), b.next());
}

TEST(GenModel, ValidDeterministicAndWithinBounds) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.max_worlds = 1 + seed % 6;
    g.max_depth = seed % 4;
    const auto m = gen_model(g);
    ASSERT_TRUE(validate(m).verdict) << dump_model(m);
    ASSERT_LE(depth(m), g.max_depth);
    ASSERT_LE(m.worlds.size(), g.max_worlds);
    ASSERT_LE(m.children.size(), g.max_children);
    ASSERT_EQ(gen_model(g), m);
  }
}

TEST(GenModel, ClosureFlag) {
  GenSpec g;
  g.seed = 12;
  g.closure = Closure::reflexive_transitive;
  const auto m = gen_model(g);
  EXPECT_EQ(rt_closure(m.relation, m.worlds), m.relation);
}

TEST(GenModel, DifferentSeedsDiffer) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec g;
    g.seed = seed;
    seen.insert(dump_model(gen_model(g), -1));
  }
  EXPECT_GT(seen.size(), 40u);
}

TEST(GenSentence, AlwaysSentencesAndDeterministic) {
  SentenceSpec spec;
  spec.vocab.props = {"p", "q"};
  spec.vocab.constants = {"c"};
  SplitMix64 a(31), b(31);
  for (int k = 0; k < 2000; ++k) {
    const auto f = gen_sentence(a, spec);
    ASSERT_TRUE(is_sentence(f));
    ASSERT_EQ(gen_sentence(b, spec), f);
  }
}

TEST(GenSentence, ExercisesEveryProduction) {
  SentenceSpec spec;
  spec.vocab.props = {"p"};
  spec.vocab.constants = {"c"};
  SplitMix64 rng(32);
  std::set<NodeKind> kinds;
  for (int k = 0; k < 500; ++k)
    for (const auto& n : preorder(gen_sentence(rng, spec))) kinds.insert(n.kind());
  EXPECT_EQ(kinds.size(), 10u);
}

TEST(Mutations, DupChild) {
  GenSpec g;
  g.seed = 3;
  g.max_children = 1;
  GenealogicalModel m;
  for (std::uint64_t s = 0; m.children.empty(); ++s) {
    g.seed = s;
    m = gen_model(g);
  }
  const auto label = m.children[0].label;
  const auto d = dup_child(m, label);
  ASSERT_TRUE(validate(d).verdict);
  ASSERT_EQ(d.children.size(), m.children.size() + 1);
  EXPECT_EQ(d.children.back().model, m.children[0].model);
  for (const auto& w : m.worlds) EXPECT_EQ(d.tracking.at(w).at(d.children.back().label), m.tracking.at(w).at(label));
  EXPECT_THROW(dup_child(m, "nope"), Error);
  GenealogicalModel bare;
  bare.worlds = {"a"};
  EXPECT_THROW(dup_child(bare, "N1"), Error);
}

TEST(Mutations, BreakChildIsAnInvolution) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec g;
    g.seed = seed;
    const auto m = gen_model(g);
    if (m.children.empty()) continue;
    const auto& c = m.children[0];
    const auto b = break_child(m, c.label, "p", c.model.worlds[0]);
    ASSERT_TRUE(validate(b).verdict);
    ASSERT_NE(b, m);
    ASSERT_EQ(break_child(b, c.label, "p", c.model.worlds[0]), m);
  }
}

TEST(Mutations, DupWorld) {
  GenSpec g;
  g.seed = 8;
  const auto m = gen_model(g);
  const auto d = dup_world(m, "s0");
  ASSERT_TRUE(validate(d).verdict);
  EXPECT_EQ(d.worlds.size(), m.worlds.size() + 1);
  EXPECT_THROW(dup_world(m, "zz"), Error);
}

TEST(TinyPairs, WithinTheOracleGuardAndValid) {
  SplitMix64 rng(44);
  std::map<std::string, int> kinds;
  std::function<bool(const GenealogicalModel&, std::size_t)> small = [&](const GenealogicalModel& m, std::size_t d) {
    if (m.worlds.size() > 3 || m.children.size() > 2 || d > 2) return false;
    for (const auto& c : m.children)
      if (!small(c.model, d + 1)) return false;
    return true;
  };
  for (int k = 0; k < 500; ++k) {
    const auto p = gen_tiny_pair(rng);
    ++kinds[p.kind];
    ASSERT_TRUE(validate(p.m).verdict);
    ASSERT_TRUE(validate(p.n).verdict);
    ASSERT_TRUE(p.m.has_world(p.s));
    ASSERT_TRUE(p.n.has_world(p.t));
    ASSERT_TRUE(small(p.m, 0) && small(p.n, 0)) << p.kind;
  }
  EXPECT_EQ(kinds.size(), 4u);
}

TEST(TinyPairs, BrokenPairsDiffer) {
  SplitMix64 rng(45);
  int differ = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = gen_broken_pair(rng);
    differ += p.m != p.n;
  }
  EXPECT_GE(differ, 180);
}
