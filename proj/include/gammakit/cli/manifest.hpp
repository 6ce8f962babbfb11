#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace gammakit::cli {

inline constexpr const char* kToolVersion = "0.3.1";
inline constexpr const char* kManifestName = "manifest.json";
inline constexpr const char* kSeedVariable = "GAMMA_TOOLKIT_SEED";

struct InputFile {
  std::string given;     // as typed on the command line
  std::string resolved;  // absolute
};

struct RunManifest {
  std::string command;            // e.g. "olig solve"
  std::vector<std::string> argv;  // arguments without the output directory
  std::vector<InputFile> inputs;
  nlohmann::ordered_json settings = nlohmann::ordered_json::object();
  std::vector<std::string> outputs;  // file names inside the output directory
  std::string version = kToolVersion;
  std::string timestamp;             // UTC, ISO 8601
  std::optional<std::string> seed;   // GAMMA_TOOLKIT_SEED if set

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::json& doc);
  /// argv with recorded relative input paths replaced by absolute ones.
  std::vector<std::string> replay_arguments() const;
};

RunManifest load_manifest(const std::filesystem::path& path);

/// State of one command invocation. Outputs go to files in the output
/// directory (plus a manifest) when one is set, and to `out` otherwise.
class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  RunManifest& manifest() { return manifest_; }
  std::optional<std::filesystem::path>& output_dir() { return output_dir_; }

  /// Records `path` as an input and returns it unchanged.
  std::string input(const std::string& path);
  void emit(const std::string& file_name, const std::string& content);
  /// Writes the manifest if an output directory is set.
  void finish();

 private:
  std::ostream& out_;
  std::ostream& err_;
  RunManifest manifest_;
  std::optional<std::filesystem::path> output_dir_;
  bool prepared_ = false;
};

}  // namespace gammakit::cli
