#include "gammakit/cli/manifest.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <stdexcept>

#include "gammakit/cli/csv.hpp"

namespace gammakit::cli {

namespace fs = std::filesystem;

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json inputs_json = nlohmann::ordered_json::array();
  for (const auto& in : inputs) inputs_json.push_back({{"path", in.given}, {"resolved", in.resolved}});
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["argv"] = argv;
  doc["inputs"] = inputs_json;
  doc["settings"] = settings;
  doc["outputs"] = outputs;
  doc["version"] = version;
  doc["timestamp"] = timestamp;
  doc["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  return doc;
}

RunManifest RunManifest::from_json(const nlohmann::json& doc) {
  RunManifest m;
  try {
    m.command = doc.at("command").get<std::string>();
    m.argv = doc.at("argv").get<std::vector<std::string>>();
    for (const auto& in : doc.at("inputs")) {
      m.inputs.push_back({in.at("path").get<std::string>(), in.at("resolved").get<std::string>()});
    }
    m.settings = doc.at("settings");
    m.outputs = doc.at("outputs").get<std::vector<std::string>>();
    m.version = doc.at("version").get<std::string>();
    m.timestamp = doc.value("timestamp", "");
    if (doc.contains("seed") && doc["seed"].is_string()) m.seed = doc["seed"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::vector<std::string> RunManifest::replay_arguments() const {
  std::vector<std::string> args = argv;
  for (auto& a : args) {
    for (const auto& in : inputs) {
      if (a == in.given) a = in.resolved;
    }
  }
  return args;
}

RunManifest load_manifest(const fs::path& path) {
  const std::string text = read_file(path);
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("manifest is not valid JSON: " + path.string());
  return RunManifest::from_json(doc);
}

std::string Session::input(const std::string& path) {
  manifest_.inputs.push_back({path, fs::absolute(path).lexically_normal().string()});
  return path;
}

void Session::emit(const std::string& file_name, const std::string& content) {
  if (!output_dir_) {
    out_ << content;
    return;
  }
  if (!prepared_) {
    std::error_code ec;
    fs::create_directories(*output_dir_, ec);
    if (ec || !fs::is_directory(*output_dir_)) {
      throw std::runtime_error("cannot create output directory " + output_dir_->string());
    }
    prepared_ = true;
  }
  write_file_atomic(*output_dir_ / file_name, content);
  manifest_.outputs.push_back(file_name);
  out_ << "wrote " << (*output_dir_ / file_name).string() << '\n';
}

void Session::finish() {
  if (!output_dir_) return;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  manifest_.timestamp = stamp;
  if (const char* seed = std::getenv(kSeedVariable)) manifest_.seed = seed;
  emit(kManifestName, manifest_.to_json().dump(2) + "\n");
}

}  // namespace gammakit::cli
