#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fomc/bisimulation.hpp"
#include "fomc/cli/commands.hpp"
#include "fomc/model_io.hpp"
#include "support.hpp"

using namespace fomc;
using fomc::test::corpus;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result fomc_run(std::vector<std::string> args) {
  args.insert(args.begin(), "fomc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string c(const char* name) { return corpus(name).string(); }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fomc_cli_test_" + name);
}

}  // namespace

TEST(Cli, Validate) {
  EXPECT_EQ(fomc_run({"validate", c("de_dicto.gkm.json")}).code, 0);
  const auto bad = fomc_run({"validate", c("invalid/tracking_gap.gkm.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("T-total"), std::string::npos);
  EXPECT_EQ(fomc_run({"validate", c("invalid/truncated.gkm.json")}).code, 2);
  EXPECT_EQ(fomc_run({"validate", c("absent.gkm.json")}).code, 2);
}

TEST(Cli, ValidateJson) {
  const auto r = fomc_run({"--json", "validate", c("invalid/tracking_gap.gkm.json")});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("valid"), false);
  EXPECT_EQ(j.at("violations").at(0).at("tag"), "T-total");
}

TEST(Cli, Eval) {
  const std::string dd = "([] exists x. ?[r] x & (~ exists x. [] ?[r] x & [] ?[r] #c))";
  EXPECT_EQ(fomc_run({"eval", c("de_dicto.gkm.json"), dd, "--world", "s0"}).code, 0);
  EXPECT_EQ(fomc_run({"eval", c("deadlock.gkm.json"), "<> exists x. exists y. (?[(a & ~b)] x & ?[(~a & b)] y)",
                      "--world", "s0"})
                .code,
            1);
  EXPECT_EQ(fomc_run({"eval", c("waitall.gkm.json"), "xi X. forall x. ?[X] x"}).code, 0);
  EXPECT_EQ(fomc_run({"eval", c("flip_a.gkm.json"), "p", "--world", "nowhere"}).code, 2);
}

TEST(Cli, EvalInputErrors) {
  const auto parse_error = fomc_run({"--json", "eval", c("flip_a.gkm.json"), "p &"});
  EXPECT_EQ(parse_error.code, 2);
  EXPECT_EQ(nlohmann::json::parse(parse_error.out).at("error"), "parse");
  EXPECT_EQ(fomc_run({"eval", c("flip_a.gkm.json"), "zz"}).code, 2);
  const auto open = fomc_run({"--json", "eval", c("flip_a.gkm.json"), "xi X. X"});
  EXPECT_EQ(open.code, 2);
  EXPECT_EQ(nlohmann::json::parse(open.out).at("error"), "not-a-sentence");
  EXPECT_EQ(fomc_run({"eval", c("invalid/tracking_gap.gkm.json"), "T"}).code, 2);
}

TEST(Cli, EvalWithVocabulary) {
  const auto vocab = scratch("vocab.json");
  {
    std::ofstream f(vocab);
    f << R"({"props": ["p", "zz"], "constants": []})";
  }
  EXPECT_EQ(fomc_run({"eval", c("flip_a.gkm.json"), "zz | ~zz", "--vocab", vocab.string()}).code, 0);
  std::filesystem::remove(vocab);
}

TEST(Cli, Bisim) {
  const auto w = scratch("witness.json");
  const auto r = fomc_run({"bisim", c("dup_child_a.gkm.json"), "s0", c("dup_child_b.gkm.json"), "s0", "--witness",
                           w.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "bisimilar\n");
  const auto a = fomc::test::fixture("dup_child_a.gkm.json");
  const auto b = fomc::test::fixture("dup_child_b.gkm.json");
  const auto witness = witness_from_json(nlohmann::json::parse(read_file(w)));
  EXPECT_TRUE(check_witness({&a, "s0"}, {&b, "s0"}, witness).ok);
  std::filesystem::remove(w);

  EXPECT_EQ(fomc_run({"bisim", c("flip_a.gkm.json"), "s0", c("flip_b.gkm.json"), "s0", "--oracle"}).code, 1);
  EXPECT_EQ(fomc_run({"bisim", c("flip_a.gkm.json"), "zz", c("flip_b.gkm.json"), "s0"}).code, 2);
  EXPECT_EQ(
      fomc_run({"bisim", c("dup_child_a.gkm.json"), "s0", c("dup_child_b.gkm.json"), "s0", "--budget", "1"}).code,
      3);
}

TEST(Cli, Distinguish) {
  const auto r = fomc_run({"distinguish", c("flip_a.gkm.json"), "s0", c("flip_b.gkm.json"), "s0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out == "p\n" || r.out == "~p\n") << r.out;
  EXPECT_EQ(fomc_run({"distinguish", c("flip_a.gkm.json"), "s0", c("flip_a.gkm.json"), "s0", "--max-size", "5"})
                .code,
            3);
}

TEST(Cli, GenIsDeterministicAndValid) {
  const auto a = fomc_run({"gen", "--seed", "42", "--max-depth", "2"});
  const auto b = fomc_run({"gen", "--seed", "42", "--max-depth", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(load_model(a.out));
  EXPECT_EQ(fomc_run({"gen", "--density", "half"}).code, 2);
  EXPECT_EQ(fomc_run({"gen", "--density", "3/2"}).code, 2);
}

TEST(Cli, Fmt) {
  const auto r = fomc_run({"fmt", "(p | q) -> <>r"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p | q -> <>r\n");
  EXPECT_EQ(fomc_run({"fmt", "p &"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(fomc_run({}).code, 2);
  EXPECT_EQ(fomc_run({"frobnicate"}).code, 2);
  EXPECT_EQ(fomc_run({"eval", c("flip_a.gkm.json")}).code, 2);
  EXPECT_EQ(fomc_run({"--help"}).code, 0);
}
