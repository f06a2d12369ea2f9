#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "projd/ringspec.hpp"

namespace projd::cli {

/// Bad command line: unknown command, wrong argument count, missing flag.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<long> bound;
};

struct Report {
  std::string command;
  std::string spec_digest;
  nlohmann::ordered_json payload;
  std::string text;

  /// {"command", "spec_digest", "payload"}
  nlohmann::ordered_json to_json() const;
};

bool is_command(const std::string &name);

/// One line per command: "name <args>  description".
std::string command_help();

/// Throws UsageError, ParseError and the library's validation errors.
Report run(const Invocation &inv, const ring::RingSpec &spec);

} // namespace projd::cli
