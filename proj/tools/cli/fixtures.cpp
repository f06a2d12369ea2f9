#include "fixtures.hpp"

#include <ostream>

#include "commands.hpp"
#include "projd/errors.hpp"
#include "spec_file.hpp"

namespace projd::cli {

using nlohmann::ordered_json;

bool json_matches(const ordered_json &expected, const ordered_json &actual, std::string &where,
                  const std::string &path) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      where = path;
      return false;
    }
    for (const auto &[key, value] : expected.items()) {
      if (!actual.contains(key)) {
        where = path + "." + key + " (missing)";
        return false;
      }
      if (!json_matches(value, actual.at(key), where, path + "." + key)) {
        return false;
      }
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      where = path + " (length)";
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!json_matches(expected[i], actual[i], where, path + "[" + std::to_string(i) + "]")) {
        return false;
      }
    }
    return true;
  }
  if (expected != actual) {
    where = path;
    return false;
  }
  return true;
}

namespace {

FixtureOutcome run_one(const std::string &file, const ring::RingSpec &spec,
                       const ordered_json &e) {
  FixtureOutcome out;
  out.file = file;
  Invocation inv;
  inv.command = e.at("command").get<std::string>();
  if (e.contains("args")) {
    inv.args = e.at("args").get<std::vector<std::string>>();
  }
  if (e.contains("bound")) {
    inv.bound = e.at("bound").get<long>();
  }
  out.command = inv.command;
  for (const auto &a : inv.args) {
    out.command += " " + a;
  }
  try {
    const Report r = run(inv, spec);
    std::string where;
    if (e.contains("expect") && !json_matches(e.at("expect"), r.payload, where)) {
      out.detail = "payload mismatch at " + where + "; got " + r.payload.dump();
      return out;
    }
    if (e.contains("text")) {
      const std::string first = r.text.substr(0, r.text.find('\n'));
      if (first != e.at("text").get<std::string>()) {
        out.detail = "text mismatch; got \"" + first + "\"";
        return out;
      }
    }
    out.passed = true;
  } catch (const std::exception &ex) {
    out.detail = std::string("threw: ") + ex.what();
  }
  return out;
}

} // namespace

std::vector<FixtureOutcome> run_fixtures() {
  std::vector<FixtureOutcome> outcomes;
  for (const auto &fx : embedded_fixtures()) {
    try {
      const SpecFile sf = parse_spec_text(fx.text);
      if (!sf.expectations.is_array()) {
        continue;
      }
      for (const auto &e : sf.expectations) {
        outcomes.push_back(run_one(fx.file, sf.spec, e));
      }
    } catch (const std::exception &ex) {
      outcomes.push_back({fx.file, "(load)", false, ex.what()});
    }
  }
  return outcomes;
}

bool report_fixtures(const std::vector<FixtureOutcome> &outcomes, std::ostream &out) {
  std::size_t failed = 0;
  for (const auto &o : outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.file << ": " << o.command;
    if (!o.passed) {
      out << " -- " << o.detail;
      ++failed;
    }
    out << "\n";
  }
  out << outcomes.size() - failed << "/" << outcomes.size() << " fixture expectations passed\n";
  return failed == 0 && !outcomes.empty();
}

} // namespace projd::cli
