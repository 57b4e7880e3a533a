#include <iostream>

#include <CLI11.hpp>

#include "fomc/cli/commands.hpp"

namespace fomc::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checking for first-order modal xi-calculus", "fomc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Line-delimited JSON on standard output");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a .gkm.json model document");
  validate->add_option("model", validate_path, "Model file")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Worlds where a sentence holds");
  eval->add_option("model", eval_args.model, "Model file")->required();
  eval->add_option("sentence", eval_args.sentence, "Sentence text")->required();
  eval->add_option("--world", eval_args.world, "Exit 0/1 by truth at this world");
  eval->add_option("--vocab", eval_args.vocab, "Vocabulary JSON overriding the model's");

  BisimArgs bisim_args;
  auto* bisim = app.add_subcommand("bisim", "Decide bisimilarity of two pointed models");
  bisim->add_option("model1", bisim_args.model1)->required();
  bisim->add_option("world1", bisim_args.world1)->required();
  bisim->add_option("model2", bisim_args.model2)->required();
  bisim->add_option("world2", bisim_args.world2)->required();
  bisim->add_option("--witness", bisim_args.witness_out, "Write the witness here when bisimilar");
  bisim->add_flag("--oracle", bisim_args.oracle, "Cross-check with the brute-force oracle");
  bisim->add_option("--budget", bisim_args.budget, "Search step cap (env FOMC_BISIM_BUDGET)");

  DistinguishArgs dist_args;
  auto* dist = app.add_subcommand("distinguish", "Search for a separating sentence");
  dist->add_option("model1", dist_args.model1)->required();
  dist->add_option("world1", dist_args.world1)->required();
  dist->add_option("model2", dist_args.model2)->required();
  dist->add_option("world2", dist_args.world2)->required();
  dist->add_option("--max-depth", dist_args.max_depth, "Modal depth bound")->capture_default_str();
  dist->add_option("--max-size", dist_args.max_size, "Node bound (env FOMC_DISTINGUISH_MAX_SIZE)");
  dist->add_option("--vars", dist_args.model_vars, "Model variables available")->capture_default_str();
  dist->add_flag("--xi", dist_args.xi, "Allow one level of xi");

  GenArgs gen_args;
  std::string density = "1/3";
  auto* gen = app.add_subcommand("gen", "Emit a random valid model");
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--max-worlds", gen_args.max_worlds)->capture_default_str();
  gen->add_option("--max-children", gen_args.max_children)->capture_default_str();
  gen->add_option("--max-depth", gen_args.max_depth)->capture_default_str();
  gen->add_option("--props", gen_args.props)->capture_default_str();
  gen->add_option("--constants", gen_args.constants)->capture_default_str();
  gen->add_flag("--closure", gen_args.closure, "Close the relation reflexively and transitively");
  gen->add_option("--density", density, "Edge probability as num/den")->capture_default_str();
  gen->add_option("--out", gen_args.out, "Write here instead of standard output");

  FmtArgs fmt_args;
  auto* fmt = app.add_subcommand("fmt", "Print a formula in canonical form");
  fmt->add_option("sentence", fmt_args.sentence)->required();
  fmt->add_option("--vocab", fmt_args.vocab, "Reject names outside this vocabulary");

  auto dispatch = [&]() -> int {
    Streams io{out, err, json};
    if (*validate) return cmd_validate(validate_path, io);
    if (*eval) return cmd_eval(eval_args, io);
    if (*bisim) return cmd_bisim(bisim_args, io);
    if (*dist) return cmd_distinguish(dist_args, io);
    if (*gen) {
      const auto slash = density.find('/');
      try {
        if (slash == std::string::npos) throw std::invalid_argument(density);
        gen_args.edge_num = std::stoull(density.substr(0, slash));
        gen_args.edge_den = std::stoull(density.substr(slash + 1));
      } catch (const std::exception&) {
        err << "fomc gen: --density expects num/den, got '" << density << "'\n";
        return Exit::input_error;
      }
      return cmd_gen(gen_args, io);
    }
    return cmd_fmt(fmt_args, io);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : Exit::input_error;
  }

  try {
    return dispatch();
  } catch (const std::exception& e) {
    err << "fomc: " << e.what() << '\n';
    return Exit::input_error;
  }
}

}  // namespace fomc::cli
