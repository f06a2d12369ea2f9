#include "projd/ringspec.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

#include "projd/errors.hpp"
#include "projd/notation.hpp"

namespace projd::ring {

using fgab::GroupElement;
using fgab::Subgroup;

RingSpec::RingSpec(fgab::FgAbGroup group, std::vector<Variable> variables,
                   std::optional<std::vector<Monomial>> conical_ideal, Check check)
    : variables_(std::move(variables)), conical_(std::move(conical_ideal)) {
  std::set<std::string> seen;
  for (auto &v : variables_) {
    if (v.name.empty()) {
      throw Error("variable with empty name");
    }
    if (!seen.insert(v.name).second) {
      throw Error("duplicate variable name '" + v.name + "'");
    }
    v.degree = group.element(v.degree.free, v.degree.torsion);
  }
  if (variables_.size() > 62) {
    throw Error("too many variables (at most 62 are supported)");
  }
  grading_.group = std::move(group);
  for (const auto &v : variables_) {
    grading_.degrees.push_back(v.degree);
  }
  if (check == Check::full) {
    validate_effective(grading_.group, grading_.degrees);
  }
  kernel_ = diophantine::kernel_lattice(grading_);
  if (conical_) {
    for (const auto &b : *conical_) {
      check_monomial(*this, b);
      if (!is_relevant(*this, b)) {
        throw BadConicalIdeal("conical ideal entry " + notation::format_monomial(*this, b) +
                              " is not relevant");
      }
    }
  }
}

std::optional<std::size_t> RingSpec::variable_index(const std::string &name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::string> RingSpec::names() const {
  std::vector<std::string> out;
  for (const auto &v : variables_) {
    out.push_back(v.name);
  }
  return out;
}

void validate_effective(const fgab::FgAbGroup &group, const std::vector<GroupElement> &degrees) {
  const Subgroup span(group, degrees);
  for (const auto &g : group.standard_generators()) {
    if (!span.member(g)) {
      throw NotEffective("variable degrees do not generate the grading group: " +
                         notation::format_degree(group, g) + " is not reached");
    }
  }
}

void validate_effective(const RingSpec &spec) {
  validate_effective(spec.group(), spec.grading().degrees);
}

void check_monomial(const RingSpec &spec, const Monomial &m) {
  if (m.size() != spec.size()) {
    throw Error("monomial " + diophantine::to_string(m) + " has wrong length for a ring with " +
                std::to_string(spec.size()) + " variables");
  }
  if (!diophantine::is_nonnegative(m)) {
    throw Error("monomial " + diophantine::to_string(m) + " has a negative exponent");
  }
}

std::vector<std::size_t> support(const ExponentVector &a) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      s.push_back(i);
    }
  }
  return s;
}

std::vector<bool> support_mask(const ExponentVector &a) {
  std::vector<bool> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = a[i] != 0;
  }
  return m;
}

Monomial indicator(std::size_t n, const std::vector<std::size_t> &vars) {
  Monomial m(n, 0);
  for (std::size_t i : vars) {
    m.at(i) = 1;
  }
  return m;
}

bool divides(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

Subgroup support_group(const RingSpec &spec, const Monomial &f) {
  check_monomial(spec, f);
  std::vector<GroupElement> gens;
  for (std::size_t i : support(f)) {
    gens.push_back(spec.variables()[i].degree);
  }
  return Subgroup(spec.group(), std::move(gens));
}

bool is_relevant(const RingSpec &spec, const Monomial &f) {
  return support_group(spec, f).index().has_value();
}

bool relevance_via_components(const RingSpec &spec, const Monomial &f) {
  check_monomial(spec, f);
  const std::size_t r = spec.group().rank();
  if (r == 0) {
    return true;
  }
  const auto supp = support(f);
  if (supp.size() < r) {
    return false;
  }
  fgab::IntMatrix m(supp.size(), r);
  for (std::size_t i = 0; i < supp.size(); ++i) {
    const auto &d = spec.variables()[supp[i]].degree;
    for (std::size_t j = 0; j < r; ++j) {
      m(i, j) = d.free[j];
    }
  }
  return fgab::smith_normal_form(m).rank() == r;
}

std::vector<Monomial> irrelevant_generators(const RingSpec &spec) {
  const std::size_t n = spec.size();
  std::vector<std::uint64_t> found;
  std::vector<Monomial> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // Subsets of size k in lexicographic order of their index lists.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = i;
    }
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t i : idx) {
        mask |= std::uint64_t{1} << i;
      }
      const bool covered =
          std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (f & mask) == f; });
      if (!covered) {
        Monomial m = indicator(n, idx);
        if (is_relevant(spec, m)) {
          found.push_back(mask);
          out.push_back(std::move(m));
        }
      }
      // Advance to the next combination.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }
  diophantine::sort_graded_lex(out);
  return out;
}

std::vector<Monomial> conical_generators(const RingSpec &spec) {
  if (!spec.conical_ideal()) {
    return irrelevant_generators(spec);
  }
  std::vector<Monomial> entries = *spec.conical_ideal();
  diophantine::sort_graded_lex(entries);
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < entries.size() && minimal; ++j) {
      minimal = i == j || !divides(entries[j], entries[i]);
    }
    if (minimal) {
      out.push_back(entries[i]);
    }
  }
  return out;
}

std::optional<Companion> degree_zero_companion(const RingSpec &spec, const Monomial &h,
                                               const Monomial &f) {
  check_monomial(spec, h);
  check_monomial(spec, f);
  const auto index = support_group(spec, f).index();
  if (!index) {
    return std::nullopt;
  }
  const auto &group = spec.group();
  const std::size_t n = spec.size();
  const GroupElement deg_h = spec.degree(h);
  const GroupElement deg_f = spec.degree(f);

  // An extra variable of degree -deg(f) counts the power of f.
  diophantine::Grading with_f = spec.grading();
  with_f.degrees.push_back(group.negate(deg_f));
  const std::vector<bool> all_constrained(n + 1, false);

  for (Exponent N = 1; fgab::Integer(static_cast<long>(N)) <= *index; ++N) {
    const GroupElement target = group.negate(group.scale(deg_h, static_cast<long>(N)));
    const auto gens = diophantine::shifted_minimal_generators(with_f, all_constrained, target);
    if (gens.empty()) {
      continue;
    }
    Exponent k = gens.front()[n];
    for (const auto &g : gens) {
      k = std::min(k, g[n]);
    }
    const GroupElement rest = group.add(group.scale(deg_f, static_cast<long>(k)), target);
    const auto gs =
        diophantine::shifted_minimal_generators(spec.grading(), std::vector<bool>(n, false), rest);
    if (gs.empty()) {
      throw InvariantViolation("degree_zero_companion: lost the solution for N = " +
                               std::to_string(N));
    }
    return Companion{N, gs.front(), k};
  }
  throw InvariantViolation("degree_zero_companion: no solution up to the index of D^f");
}

RingSpec veronese_scaled_spec(const RingSpec &spec, Exponent n) {
  if (n < 1) {
    throw Error("Veronese factor must be positive, got " + std::to_string(n));
  }
  std::vector<Variable> vars = spec.variables();
  for (auto &v : vars) {
    v.degree = spec.group().scale(v.degree, static_cast<long>(n));
  }
  return RingSpec(spec.group(), std::move(vars), spec.conical_ideal(),
                  RingSpec::Check::skip_effectiveness);
}

} // namespace projd::ring
