#include "gammakit/cli/run.hpp"

#include <algorithm>
#include <filesystem>

#include "gammakit/cli/commands.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::cli {

namespace {

constexpr const char* kOutputFlags[] = {"-o", "--output"};

bool is_output_flag(const std::string& a) {
  return std::find(std::begin(kOutputFlags), std::end(kOutputFlags), a) != std::end(kOutputFlags);
}

// Drops the output directory so a manifest can be replayed elsewhere.
std::vector<std::string> without_output(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (is_output_flag(args[i])) {
      ++i;
      continue;
    }
    if (args[i].starts_with("--output=")) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

std::string command_path(const CLI::App& app) {
  std::string path;
  const CLI::App* cur = &app;
  while (true) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    if (!path.empty()) path += ' ';
    path += cur->get_name();
  }
  return path;
}

}  // namespace

void add_output_option(CLI::App& command, Session& session) {
  command.add_option_function<std::string>(
      "-o,--output", [&session](const std::string& dir) { session.output_dir() = dir; },
      "Write files and a manifest into this directory");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(out, err);
  Action action;

  CLI::App app{"Propositional logic checks and coalition equilibria of Cournot markets",
               "gammakit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  add_logic_command(app, session, action);
  add_olig_command(app, session, action);
  add_figures_command(app, session, action);

  std::string manifest_path;
  std::string replay_dir;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "manifest.json")->required();
  replay->add_option("-o,--output", replay_dir, "Output directory (default: the recorded one)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (replay->parsed()) {
      const RunManifest m = load_manifest(manifest_path);
      std::vector<std::string> again = m.replay_arguments();
      const std::string dir = replay_dir.empty()
                                  ? std::filesystem::path(manifest_path).parent_path().string()
                                  : replay_dir;
      again.push_back("--output");
      again.push_back(dir.empty() ? "." : dir);
      return run(again, out, err);
    }
    session.manifest().command = command_path(app);
    session.manifest().argv = without_output(args);
    const int code = action();
    session.finish();
    return code;
  } catch (const oligopoly::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace gammakit::cli
