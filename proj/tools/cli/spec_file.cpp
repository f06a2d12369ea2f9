#include "spec_file.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "projd/errors.hpp"
#include "projd/notation.hpp"

namespace projd::cli {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> kTopLevelKeys = {"name", "description", "group", "variables", "B",
                                             "expectations"};

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw ParseError(path + ": " + what);
}

const ordered_json &require(const ordered_json &obj, const std::string &key,
                            const std::string &path) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(path, "missing key '" + key + "'");
  }
  return obj.at(key);
}

fgab::Integer as_integer(const ordered_json &v, const std::string &path) {
  if (v.is_number_integer()) {
    return fgab::Integer(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_number_unsigned()) {
    return fgab::Integer(std::to_string(v.get<std::uint64_t>()), 10);
  }
  fail(path, "expected an integer, got " + v.dump());
}

fgab::IntVector as_integers(const ordered_json &v, const std::string &path) {
  if (!v.is_array()) {
    fail(path, "expected a list of integers, got " + v.dump());
  }
  fgab::IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_integer(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::pair<int, int> line_column(const std::string &text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace

SpecFile parse_spec_text(const std::string &text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error &e) {
    // e.byte points one past the offending character.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw ParseError("malformed spec file: " + (colon == std::string::npos ? what : what.substr(colon + 2)),
                     line, col);
  }
  if (!doc.is_object()) {
    fail("spec", "top level must be an object");
  }
  for (const auto &[key, _] : doc.items()) {
    if (!kTopLevelKeys.contains(key)) {
      fail("spec", "unknown key '" + key + "'");
    }
  }

  const auto &group = require(doc, "group", "spec");
  const auto &rank_json = require(group, "rank", "group");
  const fgab::Integer rank = as_integer(rank_json, "group.rank");
  if (rank < 0 || rank > 64) {
    fail("group.rank", "rank must be between 0 and 64, got " + rank.get_str());
  }
  fgab::IntVector orders;
  if (group.contains("torsion")) {
    orders = as_integers(group.at("torsion"), "group.torsion");
  }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] <= 0) {
      fail("group.torsion[" + std::to_string(j) + "]",
           "torsion order must be positive, got " + orders[j].get_str());
    }
  }
  const auto normalized = fgab::FgAbGroup::normalize(rank.get_ui(), orders);

  std::vector<ring::Variable> vars;
  const auto &vjson = require(doc, "variables", "spec");
  if (!vjson.is_array()) {
    fail("variables", "expected a list");
  }
  for (std::size_t i = 0; i < vjson.size(); ++i) {
    const std::string path = "variables[" + std::to_string(i) + "]";
    const auto &v = vjson[i];
    const auto &name = require(v, "name", path);
    if (!name.is_string()) {
      fail(path + ".name", "expected a string");
    }
    const auto &deg = require(v, "degree", path);
    const auto free = deg.contains("free") ? as_integers(deg.at("free"), path + ".degree.free")
                                           : fgab::IntVector{};
    const auto tors = deg.contains("torsion")
                          ? as_integers(deg.at("torsion"), path + ".degree.torsion")
                          : fgab::IntVector{};
    if (free.size() != rank.get_ui()) {
      fail(path + ".degree.free", "expected " + rank.get_str() + " entries, got " +
                                      std::to_string(free.size()));
    }
    if (tors.size() != orders.size()) {
      fail(path + ".degree.torsion", "expected " + std::to_string(orders.size()) +
                                         " entries, got " + std::to_string(tors.size()));
    }
    vars.push_back({name.get<std::string>(), normalized.map(free, tors)});
  }

  // Monomials in B are parsed against a provisional spec without B.
  std::optional<std::vector<ring::Monomial>> B;
  ring::RingSpec plain(normalized.group, vars);
  if (doc.contains("B")) {
    const auto &bj = doc.at("B");
    if (!bj.is_array()) {
      fail("B", "expected a list of monomials");
    }
    B.emplace();
    for (std::size_t i = 0; i < bj.size(); ++i) {
      if (!bj[i].is_string()) {
        fail("B[" + std::to_string(i) + "]", "expected a monomial string");
      }
      B->push_back(notation::parse_monomial(plain, bj[i].get<std::string>()));
    }
  }

  SpecFile out{doc.value("name", std::string{}),
               B ? ring::RingSpec(normalized.group, std::move(vars), std::move(B)) : std::move(plain),
               doc.contains("expectations") ? doc.at("expectations") : ordered_json()};
  return out;
}

SpecFile parse_spec_path(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open spec file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

std::string serialize_spec(const ring::RingSpec &spec) {
  ordered_json doc;
  const auto &g = spec.group();
  ordered_json tors = ordered_json::array();
  for (const auto &m : g.torsion_orders()) {
    tors.push_back(m.get_si());
  }
  doc["group"] = {{"rank", g.rank()}, {"torsion", tors}};
  doc["variables"] = ordered_json::array();
  for (const auto &v : spec.variables()) {
    ordered_json free = ordered_json::array();
    ordered_json t = ordered_json::array();
    for (const auto &x : v.degree.free) {
      free.push_back(x.get_si());
    }
    for (const auto &x : v.degree.torsion) {
      t.push_back(x.get_si());
    }
    doc["variables"].push_back({{"name", v.name}, {"degree", {{"free", free}, {"torsion", t}}}});
  }
  if (spec.conical_ideal()) {
    doc["B"] = ordered_json::array();
    for (const auto &b : *spec.conical_ideal()) {
      doc["B"].push_back(notation::format_monomial(spec, b));
    }
  }
  return doc.dump(2) + "\n";
}

std::string spec_digest(const ring::RingSpec &spec) {
  const std::string text = serialize_spec(spec);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

} // namespace projd::cli
