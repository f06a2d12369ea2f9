#include "projd/sheaves.hpp"

#include <algorithm>

#include "projd/errors.hpp"
#include "projd/notation.hpp"

namespace projd::sheaves {

namespace {

void require_relevant(const RingSpec &spec, const Monomial &f) {
  ring::check_monomial(spec, f);
  if (!ring::is_relevant(spec, f)) {
    throw NotRelevant(notation::format_monomial(spec, f) + " is not relevant");
  }
}

GroupElement reduce(const RingSpec &spec, const GroupElement &d) {
  return spec.group().element(d.free, d.torsion);
}

} // namespace

std::optional<ExponentVector> unit_of_degree(const RingSpec &spec, const Monomial &f,
                                             const GroupElement &d) {
  require_relevant(spec, f);
  const auto &group = spec.group();
  const auto supp = ring::support(f);
  const GroupElement target = reduce(spec, d);

  // Solve sum c_i deg(x_i) + sum u_k m_k e_k = d over i in supp(f).
  diophantine::Grading local;
  local.group = group;
  for (std::size_t i : supp) {
    local.degrees.push_back(spec.variables()[i].degree);
  }
  const std::size_t dim = group.lifted_dimension();
  const auto rel = group.relation_vectors();
  fgab::IntMatrix m(dim, supp.size() + rel.size());
  for (std::size_t j = 0; j < supp.size(); ++j) {
    const auto l = group.lift(local.degrees[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, j) = l[i];
    }
  }
  for (std::size_t j = 0; j < rel.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, supp.size() + j) = rel[j][i];
    }
  }
  const auto x = fgab::solve_integer(m, group.lift(target));
  if (!x) {
    return std::nullopt;
  }
  ExponentVector local_unit = diophantine::from_integers(std::span(*x).first(supp.size()));
  local_unit = diophantine::coset_minimum(std::move(local_unit), diophantine::kernel_lattice(local));

  ExponentVector u(spec.size(), 0);
  for (std::size_t j = 0; j < supp.size(); ++j) {
    u[supp[j]] = local_unit[j];
  }
  if (spec.degree(u) != target) {
    throw InvariantViolation("unit_of_degree: witness has the wrong degree");
  }
  return u;
}

fgab::Subgroup free_degrees(const RingSpec &spec) {
  const auto gens = ring::irrelevant_generators(spec);
  fgab::Subgroup acc(spec.group(), spec.group().standard_generators());
  for (const auto &g : gens) {
    acc = fgab::subgroup_intersection(acc, ring::support_group(spec, g));
  }
  return acc;
}

bool is_free(const RingSpec &spec, const GroupElement &d) {
  return fgab::subgroup_member(free_degrees(spec), reduce(spec, d)).has_value();
}

SheafReport is_invertible(const RingSpec &spec, const GroupElement &d) {
  SheafReport r;
  r.d = reduce(spec, d);
  r.invertible = true;
  for (const auto &g : ring::irrelevant_generators(spec)) {
    auto u = unit_of_degree(spec, g, r.d);
    if (!u && !r.obstruction) {
      r.obstruction = g;
      r.invertible = false;
    }
    r.chart_units.emplace_back(g, std::move(u));
  }
  r.free = is_free(spec, r.d);
  return r;
}

std::vector<ExponentVector> twist_module_generators(const RingSpec &spec, const Monomial &f,
                                                    const GroupElement &d) {
  require_relevant(spec, f);
  return diophantine::shifted_minimal_generators(spec.grading(), ring::support_mask(f),
                                                 reduce(spec, d));
}

TwistProduct twist_product_surjective(const RingSpec &spec, const Monomial &f,
                                      const GroupElement &d, const GroupElement &e) {
  require_relevant(spec, f);
  const auto &group = spec.group();
  const auto gd = twist_module_generators(spec, f, d);
  const auto ge = twist_module_generators(spec, f, e);
  const auto gde = twist_module_generators(spec, f, group.add(reduce(spec, d), reduce(spec, e)));
  const auto chart = charts::chart_algebra(spec, f);
  const auto semigroup = chart.semigroup(spec);
  const auto chart_gens = chart.semigroup_generators();

  TwistProduct out;
  for (const auto &b : gde) {
    bool found = false;
    for (std::size_t i = 0; i < gd.size() && !found; ++i) {
      for (std::size_t j = 0; j < ge.size() && !found; ++j) {
        const auto rest = diophantine::subtract(diophantine::subtract(b, gd[i]), ge[j]);
        if (!semigroup.contains(rest)) {
          continue;
        }
        auto c = diophantine::semigroup_member(chart_gens, rest);
        if (!c) {
          throw InvariantViolation("twist product: chart element " +
                                   notation::format_monomial(spec, rest) +
                                   " has no decomposition over the chart generators");
        }
        out.decompositions.push_back({b, gd[i], ge[j], std::move(*c)});
        found = true;
      }
    }
    if (!found) {
      out.surjective = false;
      out.failure = b;
      break;
    }
  }
  return out;
}

bool is_pointed(const RingSpec &spec) {
  const diophantine::ConstrainedSemigroup s{spec.size(), spec.kernel(),
                                            std::vector<bool>(spec.size(), false)};
  return diophantine::hilbert_basis(s).generators.empty();
}

Sections global_sections(const RingSpec &spec, const GroupElement &d, Exponent bound) {
  if (bound < 0) {
    throw Error("total degree bound must be nonnegative");
  }
  const GroupElement target = reduce(spec, d);
  const std::size_t n = spec.size();
  Sections out;
  Monomial a(n, 0);
  auto fill = [&](auto &&self, std::size_t i, Exponent left) -> void {
    if (i == n) {
      if (spec.degree(a) == target) {
        out.monomials.push_back(a);
      }
      return;
    }
    for (Exponent k = 0; k <= left; ++k) {
      a[i] = k;
      self(self, i + 1, left - k);
    }
    a[i] = 0;
  };
  fill(fill, 0, bound);
  diophantine::sort_graded_lex(out.monomials);
  out.complete = is_pointed(spec);
  return out;
}

} // namespace projd::sheaves
