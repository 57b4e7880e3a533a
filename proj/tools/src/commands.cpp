#include "fomc/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "fomc/analysis.hpp"
#include "fomc/bisimulation.hpp"
#include "fomc/distinguisher.hpp"
#include "fomc/evaluator.hpp"
#include "fomc/model_io.hpp"
#include "fomc/parser.hpp"
#include "fomc/printer.hpp"
#include "fomc/testkit.hpp"

namespace fomc::cli {

using json = nlohmann::json;

namespace {

void emit(Streams& io, json j) { io.out << j.dump() << '\n'; }

int reject(Streams& io, const std::string& command, const std::string& message) {
  if (io.json)
    emit(io, {{"command", command}, {"error", "input"}, {"message", message}});
  else
    io.err << "fomc " << command << ": " << message << '\n';
  return Exit::input_error;
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  return (end && *end == '\0' && x > 0) ? static_cast<std::size_t>(x) : fallback;
}

// Loads and validates a model for commands that need a usable one.
GenealogicalModel load_or_throw(const std::string& path) {
  try {
    return load_model_file(path);
  } catch (const Error& e) {
    throw Error("'" + path + "': " + e.what());
  }
}

Vocabulary read_vocab(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error("vocabulary '" + path + "': " + e.what());
  }
  Vocabulary v;
  auto names = [&](const char* field, std::set<std::string>& out) {
    if (!j.contains(field)) return;
    if (!j[field].is_array()) throw Error("vocabulary '" + path + "': '" + field + "' must be an array");
    for (const auto& n : j[field]) {
      if (!n.is_string()) throw Error("vocabulary '" + path + "': names must be strings");
      out.insert(n.get<std::string>());
    }
  };
  if (!j.is_object()) throw Error("vocabulary '" + path + "': expected an object");
  names("props", v.props);
  names("constants", v.constants);
  return v;
}

int report_parse_error(Streams& io, const std::string& command, const ParseError& e) {
  if (io.json)
    emit(io, {{"command", command},
              {"error", "parse"},
              {"line", e.line()},
              {"column", e.column()},
              {"message", e.detail()}});
  else
    io.err << "fomc " << command << ": " << e.what() << '\n';
  return Exit::input_error;
}

int report_not_sentence(Streams& io, const std::string& command, const Formula& f,
                        const SentenceDiagnostics& d) {
  if (io.json) {
    json vs = json::array();
    for (const auto& v : d.violations)
      vs.push_back({{"condition", tag(v.condition)}, {"node", v.node}, {"message", v.message}});
    emit(io, {{"command", command}, {"error", "not-a-sentence"}, {"formula", print(f)}, {"violations", vs}});
  } else {
    io.err << "fomc " << command << ": '" << print(f) << "' is not a sentence\n";
    for (const auto& v : d.violations)
      io.err << "  " << tag(v.condition) << " at node " << v.node << ": " << v.message << '\n';
  }
  return Exit::input_error;
}

json world_list(const std::vector<std::string>& ws) { return json(ws); }

}  // namespace

int cmd_validate(const std::string& model_path, Streams io) {
  GenealogicalModel m;
  try {
    m = parse_model_document(read_file(model_path));
  } catch (const Error& e) {
    return reject(io, "validate", "'" + model_path + "': " + e.what());
  }
  const ModelDiagnostics d = validate(m);
  if (io.json) {
    json vs = json::array();
    for (const auto& v : d.violations) vs.push_back({{"tag", v.tag}, {"path", v.path}, {"message", v.message}});
    emit(io, {{"command", "validate"}, {"model", model_path}, {"valid", d.verdict}, {"violations", vs}});
  } else if (d.verdict) {
    io.out << "valid\n";
  } else {
    io.out << "invalid\n";
    for (const auto& v : d.violations)
      io.out << "  " << v.tag << " " << (v.path.empty() ? "/" : v.path) << ": " << v.message << '\n';
  }
  return d.verdict ? Exit::holds : Exit::fails;
}

int cmd_eval(const EvalArgs& a, Streams io) {
  GenealogicalModel m;
  Vocabulary vocab;
  try {
    m = load_or_throw(a.model);
    vocab = a.vocab ? read_vocab(*a.vocab) : vocabulary_of(m);
  } catch (const Error& e) {
    return reject(io, "eval", e.what());
  }
  Formula f;
  try {
    f = parse(a.sentence, vocab);
  } catch (const ParseError& e) {
    return report_parse_error(io, "eval", e);
  }
  const SentenceDiagnostics d = check_sentence(f);
  if (!d.verdict) return report_not_sentence(io, "eval", f, d);

  Evaluator ev(m);
  const WorldSet sat = ev.evaluate(f);
  const auto worlds = world_names(ev.model(), sat);
  int code = sat.all() ? Exit::holds : Exit::fails;
  json out = {{"command", "eval"}, {"sentence", print(f)}, {"worlds", world_list(worlds)}};
  if (a.world) {
    const auto w = ev.model().find_world(*a.world);
    if (!w) return reject(io, "eval", "unknown world '" + *a.world + "'");
    const bool h = sat.test(*w);
    code = h ? Exit::holds : Exit::fails;
    out["world"] = *a.world;
    out["holds"] = h;
  }
  if (io.json) {
    emit(io, out);
  } else {
    io.out << world_list(worlds).dump() << '\n';
    if (a.world) io.out << *a.world << ": " << (code == Exit::holds ? "holds" : "fails") << '\n';
  }
  return code;
}

int cmd_bisim(const BisimArgs& a, Streams io) {
  GenealogicalModel m, n;
  try {
    m = load_or_throw(a.model1);
    n = load_or_throw(a.model2);
  } catch (const Error& e) {
    return reject(io, "bisim", e.what());
  }
  for (const auto& [model, w] : {std::pair{&m, a.world1}, std::pair{&n, a.world2}})
    if (!model->has_world(w)) return reject(io, "bisim", "unknown world '" + w + "'");

  const PointedModel pm{&m, a.world1};
  const PointedModel pn{&n, a.world2};
  BisimOptions options;
  options.budget = a.budget ? a.budget : env_size("FOMC_BISIM_BUDGET", options.budget);

  BisimVerdict verdict;
  try {
    verdict = bisimilar(pm, pn, options);
  } catch (const BudgetExceeded& e) {
    if (io.json)
      emit(io, {{"command", "bisim"}, {"bisimilar", nullptr}, {"message", e.what()}});
    else
      io.out << "unknown: " << e.what() << '\n';
    return Exit::unknown;
  }

  if (verdict.witness) {
    const WitnessReport r = check_witness(pm, pn, *verdict.witness);
    if (!r.ok) {
      io.err << "fomc bisim: INTERNAL ERROR: produced witness fails its check";
      for (const auto& i : r.issues) io.err << "\n  " << i.clause << " " << i.where << ": " << i.message;
      io.err << '\n';
      return Exit::input_error;
    }
  }

  json out = {{"command", "bisim"}, {"bisimilar", verdict.bisimilar}};
  if (a.oracle) {
    bool oracle;
    try {
      oracle = brute_force_bisim(pm, pn);
    } catch (const OracleGuardError& e) {
      io.err << "fomc bisim: ORACLE UNAVAILABLE: " << e.what() << '\n';
      return Exit::input_error;
    }
    if (oracle != verdict.bisimilar) {
      io.err << "fomc bisim: ORACLE DISAGREEMENT: solver says "
             << (verdict.bisimilar ? "bisimilar" : "not bisimilar") << ", brute force says "
             << (oracle ? "bisimilar" : "not bisimilar") << '\n';
      return Exit::input_error;
    }
    out["oracle"] = oracle;
  }

  if (verdict.bisimilar && a.witness_out) {
    std::ofstream file(*a.witness_out);
    if (!file) return reject(io, "bisim", "cannot write '" + *a.witness_out + "'");
    file << witness_to_json(*verdict.witness).dump(2) << '\n';
    out["witness"] = *a.witness_out;
  }
  if (io.json)
    emit(io, out);
  else
    io.out << (verdict.bisimilar ? "bisimilar" : "not bisimilar") << '\n';
  return verdict.bisimilar ? Exit::holds : Exit::fails;
}

int cmd_distinguish(const DistinguishArgs& a, Streams io) {
  GenealogicalModel m, n;
  try {
    m = load_or_throw(a.model1);
    n = load_or_throw(a.model2);
  } catch (const Error& e) {
    return reject(io, "distinguish", e.what());
  }
  for (const auto& [model, w] : {std::pair{&m, a.world1}, std::pair{&n, a.world2}})
    if (!model->has_world(w)) return reject(io, "distinguish", "unknown world '" + w + "'");

  DistinguishOptions options;
  options.max_modal_depth = a.max_depth;
  options.max_size = a.max_size ? a.max_size : env_size("FOMC_DISTINGUISH_MAX_SIZE", 0);
  options.allow_xi = a.xi;
  options.model_vars = a.model_vars;
  const DistinguishResult r = distinguish({&m, a.world1}, {&n, a.world2}, options);

  if (io.json) {
    emit(io, {{"command", "distinguish"},
              {"separator", r.separator ? json(print(*r.separator)) : json(nullptr)},
              {"examined", r.examined}});
  } else if (r.separator) {
    io.out << print(*r.separator) << '\n';
  } else {
    io.out << "no separator within budget (" << r.examined << " sentences examined)\n";
  }
  return r.separator ? Exit::holds : Exit::unknown;
}

int cmd_gen(const GenArgs& a, Streams io) {
  testkit::GenSpec g;
  g.seed = a.seed;
  g.max_worlds = a.max_worlds;
  g.max_children = a.max_children;
  g.max_depth = a.max_depth;
  g.prop_count = a.props;
  g.constant_count = a.constants;
  g.closure = a.closure ? Closure::reflexive_transitive : Closure::none;
  g.edge_num = a.edge_num;
  g.edge_den = a.edge_den;
  if (g.edge_den == 0 || g.edge_num > g.edge_den)
    return reject(io, "gen", "edge density must lie in [0, 1]");
  const GenealogicalModel m = testkit::gen_model(g);
  const std::string text = dump_model(m, io.json ? -1 : 2);
  if (a.out) {
    std::ofstream file(*a.out);
    if (!file) return reject(io, "gen", "cannot write '" + *a.out + "'");
    file << text << '\n';
  } else {
    io.out << text << '\n';
  }
  return Exit::holds;
}

int cmd_fmt(const FmtArgs& a, Streams io) {
  Formula f;
  try {
    f = a.vocab ? parse(a.sentence, read_vocab(*a.vocab)) : parse_unchecked(a.sentence);
  } catch (const ParseError& e) {
    return report_parse_error(io, "fmt", e);
  } catch (const Error& e) {
    return reject(io, "fmt", e.what());
  }
  if (io.json)
    emit(io, {{"command", "fmt"}, {"text", print(f)}, {"sentence", is_sentence(f)}});
  else
    io.out << print(f) << '\n';
  return Exit::holds;
}

}  // namespace fomc::cli
