#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fomc/model_io.hpp"
#include "fomc/parser.hpp"

namespace fomc::test {

inline std::filesystem::path corpus(const std::string& name) {
  return std::filesystem::path(FOMC_CORPUS_DIR) / name;
}

inline GenealogicalModel fixture(const std::string& name) { return load_model_file(corpus(name)); }

inline Vocabulary vocab(std::initializer_list<const char*> props,
                        std::initializer_list<const char*> constants = {}) {
  Vocabulary v;
  for (const char* p : props) v.props.insert(p);
  for (const char* c : constants) v.constants.insert(c);
  return v;
}

/// Corpus sentence entry by name.
inline nlohmann::json corpus_sentence(const std::string& name) {
  const auto all = nlohmann::json::parse(read_file(corpus("sentences.json")));
  for (const auto& e : all)
    if (e.at("name") == name) return e;
  throw Error("no corpus sentence '" + name + "'");
}

}  // namespace fomc::test
