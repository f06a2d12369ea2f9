#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/fixtures.hpp"
#include "cli/spec_file.hpp"
#include "projd/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kInternal = 4;

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"projd: combinatorics of multigraded Proj for monomial gradings"};
  app.footer("Commands:\n" + projd::cli::command_help() +
             "\nExit codes: 0 ok, 2 usage, 3 validation, 4 internal invariant violation.");

  std::string command;
  std::vector<std::string> args;
  std::string spec_path;
  bool json = false;
  bool fixtures = false;
  std::optional<long> bound;

  app.add_option("command", command, "subcommand to run");
  app.add_option("args", args, "subcommand arguments");
  app.add_option("--spec", spec_path, "ring spec file (JSON)");
  app.add_flag("--json", json, "emit the JSON report");
  app.add_flag("--fixtures", fixtures, "run the built-in fixture corpus");
  app.add_option("--bound", bound, "total degree bound for `sections`");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (fixtures) {
      return projd::cli::report_fixtures(projd::cli::run_fixtures(), std::cout) ? kOk : kInternal;
    }
    if (command.empty()) {
      throw projd::cli::UsageError("no command given; see --help");
    }
    if (!projd::cli::is_command(command)) {
      throw projd::cli::UsageError("unknown command '" + command + "'; see --help");
    }
    if (spec_path.empty()) {
      throw projd::cli::UsageError("--spec <file> is required");
    }
    const auto sf = projd::cli::parse_spec_path(spec_path);
    const auto report = projd::cli::run({command, args, bound}, sf.spec);
    if (json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.text;
    }
    return kOk;
  } catch (const projd::cli::UsageError &e) {
    std::cerr << "projd: " << e.what() << "\n";
    return kUsage;
  } catch (const projd::InvariantViolation &e) {
    std::cerr << "projd: internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const projd::Error &e) {
    std::cerr << "projd: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception &e) {
    std::cerr << "projd: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
