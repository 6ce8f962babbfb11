#pragma once

#include <functional>

#include "CLI11.hpp"
#include "gammakit/cli/manifest.hpp"

namespace gammakit::cli {

/// Set by the leaf subcommand that was selected; returns the exit code.
using Action = std::function<int()>;

void add_logic_command(CLI::App& app, Session& session, Action& action);
void add_olig_command(CLI::App& app, Session& session, Action& action);
void add_figures_command(CLI::App& app, Session& session, Action& action);

/// Adds -o/--output to a leaf command.
void add_output_option(CLI::App& command, Session& session);

}  // namespace gammakit::cli
