#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fomc/error.hpp"
#include "fomc/model.hpp"

namespace fomc {

/// The document is not JSON or does not follow the model schema.
class ModelFormatError : public Error {
 public:
  ModelFormatError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// The document is well formed but describes an invalid model.
class InvalidModel : public Error {
 public:
  explicit InvalidModel(ModelDiagnostics d);
  const ModelDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  ModelDiagnostics diagnostics_;
};

/// Reads the document schema without validating model invariants. A
/// reflexive-transitive closure flag is applied to the relation here.
GenealogicalModel parse_model_document(std::string_view text);
GenealogicalModel model_from_json(const nlohmann::ordered_json& doc);

/// parse_model_document followed by validate; throws InvalidModel on any
/// violation.
GenealogicalModel load_model(std::string_view text);
GenealogicalModel load_model_file(const std::filesystem::path& path);

nlohmann::ordered_json model_to_json(const GenealogicalModel& m);
/// Deterministic text; `indent` < 0 gives a single line.
std::string dump_model(const GenealogicalModel& m, int indent = 2);

/// Whole file as a string; throws Error when unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace fomc
