#pragma once

// On-disk ring specifications (JSON):
//
//   {
//     "name": "double_origin",
//     "group": {"rank": 2, "torsion": []},
//     "variables": [{"name": "x", "degree": {"free": [1, 0], "torsion": []}}, ...],
//     "B": ["x*z", "x*y"]
//   }
//
// "name", "description" and "expectations" are carried along for fixtures and
// ignored by the parser proper. Torsion orders may be any positive integers;
// they are normalized to a divisibility chain and degrees are mapped along.

#include <string>

#include <json.hpp>

#include "projd/ringspec.hpp"

namespace projd::cli {

struct SpecFile {
  std::string name;
  ring::RingSpec spec;
  nlohmann::ordered_json expectations; // null when absent
};

/// Throws ParseError (with line/column for syntax errors), NotEffective or
/// BadConicalIdeal.
SpecFile parse_spec_text(const std::string &text);
SpecFile parse_spec_path(const std::string &path);

/// Canonical text form; parse_spec_text(serialize_spec(s)).spec == s.
std::string serialize_spec(const ring::RingSpec &spec);

/// "sha256:<hex>" of the canonical text form.
std::string spec_digest(const ring::RingSpec &spec);

} // namespace projd::cli
