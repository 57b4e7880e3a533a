#include <gtest/gtest.h>

#include "fomc/analysis.hpp"
#include "fomc/evaluator.hpp"
#include "fomc/printer.hpp"
#include "fomc/testkit.hpp"
#include "reference_eval.hpp"
#include "support.hpp"

using namespace fomc;
using fomc::test::fixture;
using fomc::test::reference_eval;

namespace {

std::set<std::string> names(const Evaluator& ev, const WorldSet& s) {
  const auto v = world_names(ev.model(), s);
  return {v.begin(), v.end()};
}

bool corpus_holds(const std::string& name) {
  const auto e = test::corpus_sentence(name);
  const auto m = fixture(e.at("model"));
  const auto f = parse(e.at("text").get<std::string>(), vocabulary_of(m));
  return holds_at(m, e.at("world"), f);
}

testkit::SentenceSpec spec_for(const GenealogicalModel& m) {
  testkit::SentenceSpec s;
  s.vocab = vocabulary_of(m);
  s.vocab.props.insert({"p", "q"});
  s.vocab.constants.insert("c");
  s.max_depth = 5;
  return s;
}

}  // namespace

TEST(Examples, DeDicto) { EXPECT_TRUE(corpus_holds("de_dicto")); }

TEST(Examples, DeadlockAvoided) {
  EXPECT_TRUE(corpus_holds("deadlock_avoided"));
  EXPECT_FALSE(corpus_holds("deadlock_reachable"));
}

TEST(Examples, SomeProcessRunning) { EXPECT_TRUE(corpus_holds("some_process_running")); }

TEST(Examples, DeReIsStrongerThanDeDicto) {
  const auto m = fixture("de_dicto.gkm.json");
  const Vocabulary v = vocabulary_of(m);
  EXPECT_TRUE(holds_at(m, "s0", parse("[] exists x. ?[r] x", v)));
  EXPECT_FALSE(holds_at(m, "s0", parse("exists x. [] ?[r] x", v)));
}

TEST(Examples, WellFoundedHoldsEverywhere) {
  const Formula f = parse("xi X. forall x. ?[X] x", {});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testkit::GenSpec g;
    g.seed = seed;
    g.max_depth = 3;
    g.max_worlds = 6;
    const auto m = testkit::gen_model(g);
    ASSERT_EQ(evaluate_sentence(m, f).count(), m.worlds.size());
  }
}

TEST(Clauses, ForallOverNoChildrenIsEverything) {
  const auto m = load_model(R"({"worlds": ["a", "b"]})");
  EXPECT_EQ(evaluate_sentence(m, parse("forall x. ?[F] x", {})).count(), 2u);
  EXPECT_EQ(evaluate_sentence(m, parse("exists x. ?[T] x", {})).count(), 0u);
}

TEST(Clauses, UndefinedConstantMakesQueriesFalse) {
  const auto m = fixture("dup_child_a.gkm.json");
  Evaluator ev(m);
  const Vocabulary v = vocabulary_of(m);
  EXPECT_EQ(names(ev, ev.evaluate(parse("?[T] #c", v))), std::set<std::string>{"s0"});
  EXPECT_EQ(names(ev, ev.evaluate(parse("~?[~T] #c", v))), (std::set<std::string>{"s0", "s1"}));
}

TEST(Clauses, QueryLooksAtTheTrackedState) {
  const auto m = fixture("dup_child_a.gkm.json");
  Evaluator ev(m);
  const Vocabulary v = vocabulary_of(m);
  // N1 is tracked at u0 from s0 and at u1 from s1; p holds only at u1.
  EXPECT_EQ(names(ev, ev.evaluate(parse("exists x. ?[p] x", v))), std::set<std::string>{"s1"});
  EXPECT_EQ(names(ev, ev.evaluate(parse("exists x. ?[<>p] x", v))), (std::set<std::string>{"s0", "s1"}));
}

TEST(Clauses, OpenFormulasUnderAnInterpretation) {
  const auto m = fixture("dup_child_a.gkm.json");
  Evaluator ev(m);
  InterpretationPair ip;
  ip.i["x"] = "N1";
  EXPECT_EQ(names(ev, ev.evaluate_clauses(parse_unchecked("?[p] x"), ip)), std::set<std::string>{"s1"});
  ip.i["x"] = "N2";
  EXPECT_TRUE(ev.evaluate_clauses(parse_unchecked("?[p] x"), ip).none());
  ip.j["X"] = parse_unchecked("p");
  EXPECT_EQ(names(ev, ev.evaluate_clauses(parse_unchecked("X"), ip)), std::set<std::string>{"s0"});
}

TEST(Clauses, UninterpretedVariablesAreReported) {
  const auto m = fixture("dup_child_a.gkm.json");
  Evaluator ev(m);
  EXPECT_THROW(ev.evaluate_clauses(parse_unchecked("?[p] x"), {}), InterpretationError);
  EXPECT_THROW(ev.evaluate_clauses(parse_unchecked("X"), {}), InterpretationError);
  InterpretationPair cyc;
  cyc.j["X"] = parse_unchecked("X & p");
  EXPECT_THROW(ev.evaluate_clauses(parse_unchecked("X"), cyc), InterpretationError);
  InterpretationPair bad;
  bad.i["x"] = "N9";
  EXPECT_THROW(ev.evaluate_clauses(parse_unchecked("?[p] x"), bad), InterpretationError);
}

TEST(Api, RejectsOpenFormulasAndUnknownWorlds) {
  const auto m = fixture("flip_a.gkm.json");
  Evaluator ev(m);
  EXPECT_THROW(ev.evaluate(parse_unchecked("?[p] x")), NotASentence);
  EXPECT_THROW(ev.evaluate(parse_unchecked("xi X. X")), NotASentence);
  EXPECT_THROW(ev.holds_at("nowhere", top()), UnknownWorld);
  EXPECT_EQ(ev.satisfying_worlds(top()), m.worlds);
}

TEST(Properties, AgreesWithReferenceSemantics) {
  testkit::SplitMix64 rng(101);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    testkit::GenSpec g;
    g.seed = seed;
    g.max_depth = 2 + seed % 2;
    g.max_worlds = 3;
    const auto m = testkit::gen_model(g);
    const auto spec = spec_for(m);
    Evaluator cached(m);
    Evaluator plain(m, {.memoize = false});
    for (int k = 0; k < 20; ++k) {
      const Formula f = testkit::gen_sentence(rng, spec);
      const auto got = names(cached, cached.evaluate(f));
      ASSERT_EQ(got, reference_eval(m, f)) << print(f) << " seed " << seed;
      ASSERT_EQ(got, names(plain, plain.evaluate(f))) << print(f);
    }
  }
}

TEST(Properties, CacheDoesNotChangeAnswers) {
  testkit::GenSpec g;
  g.seed = 17;
  g.max_depth = 3;
  const auto m = testkit::gen_model(g);
  const auto spec = spec_for(m);
  testkit::SplitMix64 rng(102);
  std::vector<Formula> fs;
  for (int k = 0; k < 300; ++k) fs.push_back(testkit::gen_sentence(rng, spec));
  Evaluator ev(m);
  std::vector<WorldSet> first;
  for (const auto& f : fs) first.push_back(ev.evaluate(f));
  EXPECT_GT(ev.cache_size(), 0u);
  ev.clear_cache();
  EXPECT_EQ(ev.cache_size(), 0u);
  for (std::size_t k = fs.size(); k-- > 0;) ASSERT_EQ(ev.evaluate(fs[k]), first[k]);
}

TEST(Properties, DualitiesAndDerivedForms) {
  testkit::SplitMix64 rng(103);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    testkit::GenSpec g;
    g.seed = seed;
    const auto m = testkit::gen_model(g);
    auto spec = spec_for(m);
    spec.max_depth = 3;
    Evaluator ev(m);
    for (int k = 0; k < 20; ++k) {
      const Formula a = testkit::gen_sentence(rng, spec);
      const Formula b = testkit::gen_sentence(rng, spec);
      const WorldSet A = ev.evaluate(a), B = ev.evaluate(b);
      ASSERT_EQ(ev.evaluate(negation(a)), ~A);
      ASSERT_EQ(ev.evaluate(negation(negation(a))), A);
      ASSERT_EQ(ev.evaluate(disjunction(a, b)), A | B);
      ASSERT_EQ(ev.evaluate(implication(a, b)), ~A | B);
      ASSERT_EQ(ev.evaluate(conjunction(a, b)), A & B);
      ASSERT_EQ(ev.evaluate(bottom()), ev.model().none());
      ASSERT_EQ(ev.evaluate(diamond(a)), ~ev.evaluate(box(negation(a))));
      // Box against the relation directly.
      const WorldSet boxed = ev.evaluate(box(a));
      for (std::size_t s = 0; s < m.worlds.size(); ++s) {
        bool all = true;
        for (std::size_t t : ev.model().successors[s]) all = all && A.test(t);
        ASSERT_EQ(boxed.test(s), all);
      }
    }
  }
}

TEST(Properties, QuantifierDuality) {
  const auto m = fixture("deadlock.gkm.json");
  const Vocabulary v = vocabulary_of(m);
  Evaluator ev(m);
  for (const char* body : {"?[a] x", "?[<>b] x", "?[a & ~b] x", "?[[]a] x"}) {
    const Formula qe = parse(std::string("exists x. ") + body, v);
    const Formula qa = parse(std::string("~forall x. ~") + body, v);
    EXPECT_EQ(ev.evaluate(qe), ev.evaluate(qa)) << body;
  }
}

TEST(Properties, XiWithoutItsVariableIsTransparent) {
  testkit::SplitMix64 rng(104);
  testkit::GenSpec g;
  g.seed = 4;
  const auto m = testkit::gen_model(g);
  auto spec = spec_for(m);
  spec.allow_xi = false;
  Evaluator ev(m);
  for (int k = 0; k < 200; ++k) {
    const Formula a = testkit::gen_sentence(rng, spec);
    ASSERT_EQ(ev.evaluate(xi("Z", a)), ev.evaluate(a));
  }
}

TEST(Robustness, FuzzedSentencesNeverHitUninterpretedVariables) {
  testkit::SplitMix64 rng(105);
  std::size_t evaluated = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testkit::GenSpec g;
    g.seed = seed;
    g.max_depth = 3;
    const auto m = testkit::gen_model(g);
    const auto spec = spec_for(m);
    Evaluator ev(m);
    for (int k = 0; k < 20; ++k) {
      const Formula f = testkit::gen_formula(rng, spec);
      if (!is_sentence(f)) {
        EXPECT_THROW(ev.evaluate(f), NotASentence);
        continue;
      }
      ASSERT_NO_THROW(ev.evaluate(f)) << print(f);
      ++evaluated;
    }
  }
  EXPECT_GT(evaluated, 100u);
}
