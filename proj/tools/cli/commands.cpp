#include "commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "projd/charts.hpp"
#include "projd/errors.hpp"
#include "projd/notation.hpp"
#include "projd/separation.hpp"
#include "projd/sheaves.hpp"
#include "spec_file.hpp"

namespace projd::cli {

using diophantine::ExponentVector;
using nlohmann::ordered_json;

namespace {

struct Context {
  const Invocation &inv;
  const ring::RingSpec &spec;
  ordered_json payload = ordered_json::object();
  std::ostringstream text;

  std::string mono(const ExponentVector &a) const { return notation::format_monomial(spec, a); }
  std::string degree(const fgab::GroupElement &d) const {
    return notation::format_degree(spec.group(), d);
  }
  ring::Monomial monomial_arg(std::size_t i) const {
    return notation::parse_monomial(spec, inv.args.at(i));
  }
  fgab::GroupElement degree_arg(std::size_t i) const {
    return notation::parse_degree(spec.group(), inv.args.at(i));
  }
  ordered_json monos(const std::vector<ExponentVector> &v) const {
    ordered_json a = ordered_json::array();
    for (const auto &x : v) {
      a.push_back(mono(x));
    }
    return a;
  }
  std::string braces(const std::vector<ExponentVector> &v) const {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + mono(v[i]);
    }
    return s + "}";
  }
  ordered_json terms(const std::vector<ExponentVector> &gens,
                     const std::vector<diophantine::Exponent> &coeffs) const {
    ordered_json t = ordered_json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) {
        t.push_back({{"generator", mono(gens[i])}, {"coefficient", coeffs[i]}});
      }
    }
    return t;
  }
  std::string relation(const ExponentVector &a) const {
    ExponentVector pos(a.size(), 0);
    ExponentVector neg(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      (a[i] > 0 ? pos : neg)[i] = a[i] > 0 ? a[i] : -a[i];
    }
    return "deg(" + mono(pos) + ") = deg(" + mono(neg) + ")";
  }
};

ordered_json exponents(const std::vector<ExponentVector> &v) {
  ordered_json a = ordered_json::array();
  for (const auto &x : v) {
    a.push_back(x);
  }
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string group_name(const fgab::FgAbGroup &g) {
  std::string s;
  if (g.rank() > 0) {
    s = g.rank() == 1 ? "Z" : "Z^" + std::to_string(g.rank());
  }
  for (const auto &m : g.torsion_orders()) {
    s += (s.empty() ? "" : " x ") + ("Z/" + m.get_str());
  }
  return s.empty() ? "0" : s;
}

void cmd_check(Context &c) {
  const auto &spec = c.spec;
  c.payload["effective"] = true;
  c.payload["group"] = group_name(spec.group());
  ordered_json vars = ordered_json::array();
  for (const auto &v : spec.variables()) {
    vars.push_back({{"name", v.name}, {"degree", c.degree(v.degree)}});
  }
  c.payload["variables"] = vars;
  c.payload["kernel_lattice"] = c.monos(spec.kernel());
  c.payload["kernel_exponents"] = exponents(spec.kernel());
  c.payload["conical_ideal"] =
      spec.conical_ideal() ? c.monos(*spec.conical_ideal()) : ordered_json(nullptr);
  c.payload["pointed"] = sheaves::is_pointed(spec);
  c.text << "effective grading by " << group_name(spec.group()) << "\n";
  for (const auto &v : spec.variables()) {
    c.text << "  deg " << v.name << " = " << c.degree(v.degree) << "\n";
  }
  c.text << "degree-zero lattice: " << c.braces(spec.kernel()) << "\n";
  if (spec.conical_ideal()) {
    c.text << "B = " << c.braces(*spec.conical_ideal()) << "\n";
  }
}

void cmd_gens(Context &c) {
  const auto gens = ring::irrelevant_generators(c.spec);
  c.payload["generators"] = c.monos(gens);
  c.payload["exponents"] = exponents(gens);
  c.payload["finite_group"] = c.spec.group().is_finite();
  c.text << c.braces(gens);
  if (c.spec.group().is_finite()) {
    c.text << "; Proj = Spec(S_0)";
  }
  c.text << "\n";
}

std::string algebra_text(const Context &c, const charts::ChartAlgebra &a) {
  std::vector<ExponentVector> all = a.generators;
  for (const auto &u : a.units) {
    all.push_back(u);
    all.push_back(diophantine::negate(u));
  }
  std::string s = "C[";
  for (std::size_t i = 0; i < all.size(); ++i) {
    s += (i ? ", " : "") + c.mono(all[i]);
  }
  return s + "]";
}

void cmd_chart(Context &c) {
  const auto f = c.monomial_arg(0);
  const auto a = charts::chart_algebra(c.spec, f);
  c.payload["f"] = c.mono(f);
  c.payload["units"] = c.monos(a.units);
  c.payload["generators"] = c.monos(a.generators);
  c.payload["units_exponents"] = exponents(a.units);
  c.payload["generators_exponents"] = exponents(a.generators);
  c.text << "S_(" << c.mono(f) << ") = " << algebra_text(c, a) << "\n";
  c.text << "units " << c.braces(a.units) << "; generators " << c.braces(a.generators) << "\n";
}

void cmd_intersect(Context &c) {
  const auto f = c.monomial_arg(0);
  const auto g = c.monomial_arg(1);
  const auto r = charts::chart_intersection_check(c.spec, f, g);
  c.payload["f"] = c.mono(f);
  c.payload["g"] = c.mono(g);
  c.payload["product"] = c.mono(r.product.f);
  c.payload["product_units"] = c.monos(r.product.units);
  c.payload["product_generators"] = c.monos(r.product.generators);
  c.payload["inverted"] = c.monos(r.inverted);
  c.payload["localized"] = c.monos(r.localized);
  ordered_json fwd = ordered_json::array();
  for (const auto &d : r.forward) {
    fwd.push_back({{"element", c.mono(d.element)}, {"terms", c.terms(r.localized, d.coefficients)}});
  }
  c.payload["forward"] = fwd;
  c.payload["consistent"] = true;
  c.text << "S_(" << c.mono(r.product.f) << ") = " << algebra_text(c, r.product) << "\n";
  c.text << "  = S_(" << c.mono(f) << ") with " << c.braces(r.inverted) << " inverted\n";
}

void cmd_psi(Context &c) {
  const auto f = c.monomial_arg(0);
  c.payload["f"] = c.mono(f);
  if (c.inv.args.size() == 2) {
    const auto p = notation::parse_prime(c.spec, c.inv.args[1]);
    const auto image = charts::psi_image(c.spec, f, p);
    c.payload["prime"] = notation::format_prime(c.spec, p);
    c.payload["image"] = c.monos(image);
    c.text << "psi_" << c.mono(f) << notation::format_prime(c.spec, p) << " = "
           << (image.empty() ? "(0)" : "(" + c.braces(image).substr(1, c.braces(image).size() - 2) + ")")
           << "\n";
    return;
  }
  const auto scan = charts::psi_collision_scan(c.spec, f);
  c.payload["relevant"] = ring::is_relevant(c.spec, f);
  c.payload["injective"] = scan.injective();
  if (scan.collision) {
    c.payload["collision"] = {notation::format_prime(c.spec, scan.collision->first),
                              notation::format_prime(c.spec, scan.collision->second)};
  } else {
    c.payload["collision"] = nullptr;
  }
  ordered_json images = ordered_json::array();
  for (const auto &[p, img] : scan.images) {
    images.push_back({{"prime", notation::format_prime(c.spec, p)}, {"image", c.monos(img)}});
  }
  c.payload["images"] = images;
  if (scan.injective()) {
    c.text << "psi_" << c.mono(f) << " is injective on " << scan.images.size()
           << " monomial primes\n";
  } else {
    c.text << "psi_" << c.mono(f) << " collides: "
           << notation::format_prime(c.spec, scan.collision->first) << " and "
           << notation::format_prime(c.spec, scan.collision->second) << " have image "
           << c.braces(scan.images.back().second) << "\n";
  }
}

void cmd_cover(Context &c) {
  const auto h = c.monomial_arg(0);
  const auto r = charts::cover_decomposition(c.spec, h);
  c.payload["h"] = c.mono(h);
  c.payload["charts"] = c.monos(r.charts);
  c.payload["generators_only"] = r.generators_only;
  c.text << "D+(" << c.mono(h) << ") = union of D+(g) for g in " << c.braces(r.charts) << "\n";
}

std::vector<ring::Monomial> parse_ideal(const ring::RingSpec &spec, const std::string &text) {
  std::string body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
    body.erase(body.begin());
  }
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
    body.pop_back();
  }
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<ring::Monomial> out;
  if (body.empty() || body == "0") {
    return out;
  }
  std::string cur;
  for (char ch : body + ",") {
    if (ch == ',') {
      out.push_back(notation::parse_monomial(spec, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

void cmd_vplus(Context &c) {
  const auto ideal = parse_ideal(c.spec, c.inv.args.at(0));
  const auto primes = charts::v_plus(c.spec, ideal);
  c.payload["ideal"] = c.monos(ideal);
  ordered_json ps = ordered_json::array();
  std::string line;
  for (const auto &p : primes) {
    ps.push_back(notation::format_prime(c.spec, p));
    line += (line.empty() ? "" : ", ") + notation::format_prime(c.spec, p);
  }
  c.payload["primes"] = ps;
  c.text << "V+ = {" << line << "}\n";
}

ordered_json weak_json(const Context &c, const std::vector<separation::WeakPairReport> &w) {
  ordered_json out = ordered_json::array();
  for (const auto &r : w) {
    out.push_back({{"pair", {c.mono(r.f), c.mono(r.g)}}, {"witness", c.mono(*r.witness)}});
  }
  return out;
}

void cmd_weak_pairs(Context &c) {
  const auto gens = separation::pair_generators(c.spec, std::nullopt);
  const auto w = separation::weak_pairs(c.spec);
  c.payload["generators"] = c.monos(gens);
  c.payload["weak_pairs"] = weak_json(c, w);
  if (w.empty()) {
    c.text << "no weak pairs among " << c.braces(gens) << "\n";
  }
  for (const auto &r : w) {
    c.text << "weak pair (" << c.mono(r.f) << ", " << c.mono(r.g) << "); witness "
           << c.mono(*r.witness) << "\n";
  }
}

void cmd_separated(Context &c) {
  const auto v = separation::is_separated(c.spec);
  c.payload["separated"] = v.separated;
  c.payload["generators"] = c.monos(v.generators);
  c.payload["weak_pairs"] = weak_json(c, v.weak_pairs);
  // The dependency classification speaks about the whole ring, not about B.
  const bool whole_ring = !c.spec.conical_ideal().has_value();
  c.payload["dependency_class"] =
      whole_ring ? ordered_json(separation::to_string(v.dependencies.kind)) : ordered_json(nullptr);
  if (v.separated) {
    c.text << "SEPARATED";
  } else {
    c.text << "NOT SEPARATED";
    for (const auto &r : v.weak_pairs) {
      c.text << "; weak pair (" << c.mono(r.f) << ", " << c.mono(r.g) << "); witness "
             << c.mono(*r.witness);
    }
  }
  c.text << "\n";
  if (whole_ring) {
    c.text << "dependencies: " << separation::to_string(v.dependencies.kind) << "\n";
  }
}

void cmd_deps(Context &c) {
  const auto d = separation::classify_dependencies(c.spec);
  c.payload["class"] = separation::to_string(d.kind);
  c.payload["witness"] = d.witness ? ordered_json(c.relation(*d.witness)) : ordered_json(nullptr);
  c.payload["witness_exponents"] = d.witness ? ordered_json(*d.witness) : ordered_json(nullptr);
  ordered_json rel = ordered_json::array();
  for (const auto &a : d.minimal_relations) {
    rel.push_back(c.relation(a));
  }
  c.payload["minimal_relations"] = rel;
  c.payload["scope"] = d.scope;
  c.text << separation::to_string(d.kind);
  if (d.witness) {
    c.text << ", witness " << c.relation(*d.witness);
  }
  c.text << "\n";
  for (const auto &a : d.minimal_relations) {
    c.text << "  " << c.relation(a) << "\n";
  }
}

void cmd_submodels(Context &c) {
  const auto subs = separation::separated_submodels(c.spec);
  ordered_json out = ordered_json::array();
  for (const auto &s : subs) {
    out.push_back(c.monos(s));
    c.text << "B = " << c.braces(s) << "\n";
  }
  c.payload["submodels"] = out;
}

void cmd_sheaf(Context &c) {
  const auto d = c.degree_arg(0);
  const auto r = sheaves::is_invertible(c.spec, d);
  c.payload["d"] = c.degree(r.d);
  c.payload["free"] = r.free;
  c.payload["invertible"] = r.invertible;
  ordered_json units = ordered_json::array();
  std::string witnesses;
  for (const auto &[g, u] : r.chart_units) {
    units.push_back({{"chart", c.mono(g)}, {"unit", u ? ordered_json(c.mono(*u)) : ordered_json(nullptr)}});
    witnesses += (witnesses.empty() ? "" : " | ") + (u ? c.mono(*u) : std::string("none"));
  }
  c.payload["chart_units"] = units;
  c.payload["obstruction"] = r.obstruction ? ordered_json(c.mono(*r.obstruction)) : ordered_json(nullptr);
  c.text << "free: " << yes_no(r.free) << "; invertible: " << yes_no(r.invertible)
         << "; witnesses " << witnesses;
  if (r.obstruction) {
    c.text << "; obstruction chart " << c.mono(*r.obstruction);
  }
  c.text << "\n";
}

void cmd_sections(Context &c) {
  if (!c.inv.bound) {
    throw UsageError("sections needs --bound N");
  }
  const auto d = c.degree_arg(0);
  const auto s = sheaves::global_sections(c.spec, d, *c.inv.bound);
  c.payload["d"] = c.degree(c.spec.group().element(d.free, d.torsion));
  c.payload["bound"] = *c.inv.bound;
  c.payload["monomials"] = c.monos(s.monomials);
  c.payload["complete"] = s.complete;
  c.text << c.braces(s.monomials) << ", " << (s.complete ? "complete" : "partial") << "\n";
}

void cmd_companion(Context &c) {
  const auto h = c.monomial_arg(0);
  const auto f = c.monomial_arg(1);
  const auto r = ring::degree_zero_companion(c.spec, h, f);
  c.payload["h"] = c.mono(h);
  c.payload["f"] = c.mono(f);
  c.payload["relevant"] = r.has_value();
  if (!r) {
    c.text << "none: " << c.mono(f) << " is not relevant\n";
    return;
  }
  ExponentVector e = diophantine::add(diophantine::scale(h, r->N), r->g);
  e = diophantine::subtract(e, diophantine::scale(f, r->k));
  c.payload["N"] = r->N;
  c.payload["g"] = c.mono(r->g);
  c.payload["k"] = r->k;
  c.payload["element"] = c.mono(e);
  c.text << "N = " << r->N << ", g = " << c.mono(r->g) << ", k = " << r->k << "; h^N g / f^k = "
         << c.mono(e) << "\n";
}

struct CommandDef {
  std::size_t min_args;
  std::size_t max_args;
  std::string usage;
  std::string help;
  std::function<void(Context &)> handler;
};

const std::map<std::string, CommandDef> &commands() {
  static const std::map<std::string, CommandDef> table = {
      {"check", {0, 0, "check", "validate the spec and print the degree-zero lattice", cmd_check}},
      {"gens", {0, 0, "gens", "generators of the irrelevant ideal", cmd_gens}},
      {"chart", {1, 1, "chart <f>", "degree-zero chart algebra S_(f)", cmd_chart}},
      {"intersect", {2, 2, "intersect <f> <g>", "S_(fg) as a localization of S_(f)", cmd_intersect}},
      {"psi", {1, 2, "psi <f> [<p>]", "image of a monomial prime, or the injectivity scan", cmd_psi}},
      {"cover", {1, 1, "cover <h>", "charts covering D+(h)", cmd_cover}},
      {"vplus", {1, 1, "vplus <ideal>", "minimal monomial primes of V+(ideal)", cmd_vplus}},
      {"weak-pairs", {0, 0, "weak-pairs", "weak pairs among the generators of B", cmd_weak_pairs}},
      {"separated", {0, 0, "separated", "separatedness verdict", cmd_separated}},
      {"deps", {0, 0, "deps", "classification of degree dependencies", cmd_deps}},
      {"submodels", {0, 0, "submodels", "maximal separated submodels", cmd_submodels}},
      {"sheaf", {1, 1, "sheaf <d>", "freeness and invertibility of O_X(d)", cmd_sheaf}},
      {"sections", {1, 1, "sections <d> --bound N", "monomials of degree d", cmd_sections}},
      {"companion", {2, 2, "companion <h> <f>", "N, g, k with deg(h^N g) = deg(f^k)", cmd_companion}},
  };
  return table;
}

} // namespace

ordered_json Report::to_json() const {
  return {{"command", command}, {"spec_digest", spec_digest}, {"payload", payload}};
}

bool is_command(const std::string &name) { return commands().contains(name); }

std::string command_help() {
  std::ostringstream os;
  for (const auto &[name, def] : commands()) {
    os << "  " << def.usage << std::string(def.usage.size() < 26 ? 26 - def.usage.size() : 1, ' ')
       << def.help << "\n";
  }
  return os.str();
}

Report run(const Invocation &inv, const ring::RingSpec &spec) {
  const auto it = commands().find(inv.command);
  if (it == commands().end()) {
    throw UsageError("unknown command '" + inv.command + "'");
  }
  const auto &def = it->second;
  if (inv.args.size() < def.min_args || inv.args.size() > def.max_args) {
    throw UsageError("usage: projd " + def.usage);
  }
  Context c{inv, spec, ordered_json::object(), {}};
  def.handler(c);
  return Report{inv.command, spec_digest(spec), std::move(c.payload), c.text.str()};
}

} // namespace projd::cli
