#include "projd/separation.hpp"

#include <algorithm>
#include <cstdint>

#include "projd/errors.hpp"
#include "projd/notation.hpp"

namespace projd::separation {

using diophantine::Exponent;

WeakPairReport mu_surjective(const RingSpec &spec, const Monomial &f, const Monomial &g) {
  const auto cf = charts::chart_algebra(spec, f);
  const auto cg = charts::chart_algebra(spec, g);
  const auto product = charts::chart_algebra(spec, diophantine::add(f, g));

  WeakPairReport r;
  r.f = f;
  r.g = g;
  r.union_generators = cf.semigroup_generators();
  for (auto &e : cg.semigroup_generators()) {
    r.union_generators.push_back(std::move(e));
  }
  for (const auto &e : product.semigroup_generators()) {
    auto c = diophantine::semigroup_member(r.union_generators, e);
    if (c) {
      r.decompositions.push_back({e, std::move(*c)});
    } else if (!r.witness) {
      r.witness = e;
    }
  }
  r.weak = r.witness.has_value();
  return r;
}

std::vector<Monomial> pair_generators(const RingSpec &spec,
                                      const std::optional<std::vector<Monomial>> &B) {
  if (!B) {
    return ring::conical_generators(spec);
  }
  for (const auto &b : *B) {
    ring::check_monomial(spec, b);
    if (!ring::is_relevant(spec, b)) {
      throw BadConicalIdeal("conical ideal entry " + notation::format_monomial(spec, b) +
                            " is not relevant");
    }
  }
  const RingSpec with_b(spec.group(), spec.variables(), *B, RingSpec::Check::skip_effectiveness);
  return ring::conical_generators(with_b);
}

std::vector<WeakPairReport> weak_pairs(const RingSpec &spec,
                                       const std::optional<std::vector<Monomial>> &B) {
  const auto gens = pair_generators(spec, B);
  std::vector<WeakPairReport> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto r = mu_surjective(spec, gens[i], gens[j]);
      if (r.weak) {
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::string to_string(DependencyClass c) {
  switch (c) {
  case DependencyClass::length_one_only:
    return "length-one-only";
  case DependencyClass::nontrivial_irreducible:
    return "nontrivial-irreducible";
  case DependencyClass::none:
    return "none";
  case DependencyClass::undetermined:
    return "undetermined";
  }
  return "undetermined";
}

namespace {

// The relations b with supp b+ ⊆ supp a+ and supp b- ⊆ supp a- form a
// pointed cone; a is irreducible when that cone is the ray through a.
bool spans_sign_ray(const RingSpec &spec, const ExponentVector &a) {
  diophantine::Grading sub;
  sub.group = spec.group();
  std::vector<Exponent> restricted;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    const auto &d = spec.variables()[i].degree;
    sub.degrees.push_back(a[i] > 0 ? d : spec.group().negate(d));
    restricted.push_back(a[i] > 0 ? a[i] : -a[i]);
  }
  const diophantine::ConstrainedSemigroup cone{
      sub.size(), diophantine::kernel_lattice(sub), std::vector<bool>(sub.size(), false)};
  const auto hb = diophantine::hilbert_basis(cone);
  return hb.generators.size() == 1 && hb.generators.front() == restricted;
}

} // namespace

DependencyReport classify_dependencies(const RingSpec &spec) {
  DependencyReport r;
  r.minimal_relations = diophantine::graver_basis(spec.kernel(), spec.size());
  if (r.minimal_relations.empty()) {
    r.kind = DependencyClass::none;
    return r;
  }
  bool length_one = true;
  for (const auto &a : r.minimal_relations) {
    const auto pos = std::count_if(a.begin(), a.end(), [](Exponent x) { return x > 0; });
    const auto neg = std::count_if(a.begin(), a.end(), [](Exponent x) { return x < 0; });
    if (pos == 1 && neg == 1) {
      continue;
    }
    length_one = false;
    if (pos == 0 || neg == 0) {
      continue; // a nonnegative relation: degree zero monomial, not a dependency
    }
    if (!r.witness && spans_sign_ray(spec, a)) {
      r.witness = a;
    }
  }
  if (r.witness) {
    r.kind = DependencyClass::nontrivial_irreducible;
  } else if (length_one) {
    r.kind = DependencyClass::length_one_only;
  } else {
    r.kind = DependencyClass::undetermined;
  }
  return r;
}

SeparationVerdict is_separated(const RingSpec &spec, const std::optional<std::vector<Monomial>> &B) {
  SeparationVerdict v;
  v.generators = pair_generators(spec, B);
  v.weak_pairs = weak_pairs(spec, B);
  v.separated = v.weak_pairs.empty();
  v.dependencies = classify_dependencies(spec);
  return v;
}

std::vector<std::vector<Monomial>> separated_submodels(const RingSpec &spec) {
  const auto gens = ring::irrelevant_generators(spec);
  const std::size_t k = gens.size();
  if (k > 62) {
    throw Error("too many generators for a submodel scan");
  }
  std::vector<std::uint64_t> compatible(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!mu_surjective(spec, gens[i], gens[j]).weak) {
        compatible[i] |= std::uint64_t{1} << j;
        compatible[j] |= std::uint64_t{1} << i;
      }
    }
  }
  // Bron-Kerbosch on the compatibility graph.
  std::vector<std::uint64_t> cliques;
  auto expand = [&](auto &&self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    for (std::size_t v = 0; v < k; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(p & bit)) {
        continue;
      }
      self(self, r | bit, p & compatible[v], x & compatible[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const std::uint64_t all = k == 0 ? 0 : (k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  expand(expand, 0, all, 0);

  std::vector<std::vector<std::size_t>> index_sets;
  for (auto c : cliques) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < k; ++v) {
      if (c & (std::uint64_t{1} << v)) {
        s.push_back(v);
      }
    }
    index_sets.push_back(std::move(s));
  }
  std::sort(index_sets.begin(), index_sets.end());
  std::vector<std::vector<Monomial>> out;
  for (const auto &s : index_sets) {
    std::vector<Monomial> m;
    for (std::size_t v : s) {
      m.push_back(gens[v]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace projd::separation
