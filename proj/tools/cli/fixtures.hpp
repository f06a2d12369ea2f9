#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace projd::cli {

struct EmbeddedFixture {
  const char *file;
  const char *text;
};

/// Fixture files compiled into the binary (generated at build time).
const std::vector<EmbeddedFixture> &embedded_fixtures();

/// Recursive subset match: objects need only the expected keys, arrays must
/// match in length and elementwise. On mismatch `where` holds a JSON path.
bool json_matches(const nlohmann::ordered_json &expected, const nlohmann::ordered_json &actual,
                  std::string &where, const std::string &path = "$");

struct FixtureOutcome {
  std::string file;
  std::string command; // "command arg..."
  bool passed = false;
  std::string detail;
};

/// Runs every stored expectation of every embedded fixture.
std::vector<FixtureOutcome> run_fixtures();

/// Prints one line per expectation; returns true iff all passed.
bool report_fixtures(const std::vector<FixtureOutcome> &outcomes, std::ostream &out);

} // namespace projd::cli
