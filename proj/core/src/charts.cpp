#include "projd/charts.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "projd/errors.hpp"
#include "projd/notation.hpp"

namespace projd::charts {

namespace {

bool size_then_lex(const MonomialPrime &a, const MonomialPrime &b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

bool is_subset(const MonomialPrime &a, const MonomialPrime &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool meets(const MonomialPrime &p, const std::vector<std::size_t> &s) {
  return std::any_of(s.begin(), s.end(),
                     [&](std::size_t i) { return std::binary_search(p.begin(), p.end(), i); });
}

// Inclusion-minimal sets meeting every given set, ordered by size then lex.
std::vector<MonomialPrime> minimal_transversals(const std::vector<std::vector<std::size_t>> &sets) {
  std::set<MonomialPrime> found;
  auto grow = [&](auto &&self, MonomialPrime current) -> void {
    const auto open = std::find_if(sets.begin(), sets.end(),
                                   [&](const auto &s) { return !meets(current, s); });
    if (open == sets.end()) {
      found.insert(std::move(current));
      return;
    }
    for (std::size_t v : *open) {
      MonomialPrime next = current;
      next.insert(std::upper_bound(next.begin(), next.end(), v), v);
      self(self, std::move(next));
    }
  };
  grow(grow, {});
  std::vector<MonomialPrime> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), size_then_lex);
  std::vector<MonomialPrime> out;
  for (const auto &t : all) {
    if (std::none_of(out.begin(), out.end(), [&](const auto &m) { return is_subset(m, t); })) {
      out.push_back(t);
    }
  }
  return out;
}

void require_relevant(const RingSpec &spec, const Monomial &f) {
  ring::check_monomial(spec, f);
  if (!ring::is_relevant(spec, f)) {
    throw NotRelevant(notation::format_monomial(spec, f) + " is not relevant");
  }
}

std::vector<std::size_t> positive_support(const ExponentVector &a) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) {
      s.push_back(i);
    }
  }
  return s;
}

// Units are supported on supp(f), so they never meet p.
std::vector<ExponentVector> image_of(const ChartAlgebra &chart, const MonomialPrime &p) {
  std::vector<ExponentVector> out;
  for (const auto &a : chart.generators) {
    if (meets(p, positive_support(a))) {
      out.push_back(a);
    }
  }
  return out;
}

bool contains_all(const std::vector<Monomial> &gens, const MonomialPrime &p) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Monomial &g) { return meets(p, ring::support(g)); });
}

} // namespace

std::vector<ExponentVector> ChartAlgebra::semigroup_generators() const {
  return diophantine::semigroup_generators({units, generators});
}

diophantine::ConstrainedSemigroup ChartAlgebra::semigroup(const RingSpec &spec) const {
  return {spec.size(), spec.kernel(), free_coords};
}

ChartAlgebra localization_semigroup(const RingSpec &spec, const Monomial &f) {
  ring::check_monomial(spec, f);
  ChartAlgebra c;
  c.f = f;
  c.free_coords = ring::support_mask(f);
  auto hb = diophantine::hilbert_basis({spec.size(), spec.kernel(), c.free_coords});
  c.units = std::move(hb.units);
  c.generators = std::move(hb.generators);
  return c;
}

ChartAlgebra chart_algebra(const RingSpec &spec, const Monomial &f) {
  require_relevant(spec, f);
  return localization_semigroup(spec, f);
}

ChartIntersection chart_intersection_check(const RingSpec &spec, const Monomial &f,
                                           const Monomial &g) {
  require_relevant(spec, f);
  require_relevant(spec, g);
  const Monomial fg = diophantine::add(f, g);
  ChartIntersection out;
  out.product = chart_algebra(spec, fg);
  const ChartAlgebra cf = chart_algebra(spec, f);

  const auto inside = ring::support_mask(fg);
  for (const auto &a : cf.generators) {
    bool face = true;
    for (std::size_t i = 0; i < a.size() && face; ++i) {
      face = inside[i] || a[i] == 0;
    }
    if (face) {
      out.inverted.push_back(a);
    }
  }
  out.localized = cf.semigroup_generators();
  for (const auto &a : out.inverted) {
    out.localized.push_back(diophantine::negate(a));
  }

  const auto product_gens = out.product.semigroup_generators();
  for (const auto &e : product_gens) {
    auto c = diophantine::semigroup_member(out.localized, e);
    if (!c) {
      throw InvariantViolation("chart intersection: " + notation::format_monomial(spec, e) +
                               " is missing from the localized chart");
    }
    out.forward.push_back({e, std::move(*c)});
  }
  for (const auto &e : out.localized) {
    auto c = diophantine::semigroup_member(product_gens, e);
    if (!c) {
      throw InvariantViolation("chart intersection: " + notation::format_monomial(spec, e) +
                               " is missing from the product chart");
    }
    out.backward.push_back({e, std::move(*c)});
  }
  return out;
}

std::vector<ExponentVector> psi_image(const RingSpec &spec, const Monomial &f,
                                      const MonomialPrime &p) {
  ring::check_monomial(spec, f);
  for (std::size_t i : p) {
    if (i >= spec.size()) {
      throw Error("prime refers to variable index " + std::to_string(i) + " out of range");
    }
    if (f[i] != 0) {
      throw PrimeMeetsF("prime " + notation::format_prime(spec, p) + " contains " +
                        spec.variables()[i].name + ", a variable of " +
                        notation::format_monomial(spec, f));
    }
  }
  if (p.empty()) {
    return {};
  }
  return image_of(localization_semigroup(spec, f), p);
}

std::vector<MonomialPrime> primes_avoiding(std::size_t n, const std::vector<std::size_t> &avoid) {
  std::vector<std::size_t> allowed;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(avoid.begin(), avoid.end(), i) == avoid.end()) {
      allowed.push_back(i);
    }
  }
  if (allowed.size() > 24) {
    throw Error("too many variables for a prime scan");
  }
  std::vector<MonomialPrime> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << allowed.size()); ++mask) {
    MonomialPrime p;
    for (std::size_t b = 0; b < allowed.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) {
        p.push_back(allowed[b]);
      }
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

PsiScan psi_collision_scan(const RingSpec &spec, const Monomial &f) {
  ring::check_monomial(spec, f);
  PsiScan scan;
  std::map<std::vector<ExponentVector>, MonomialPrime> seen;
  const ChartAlgebra chart = localization_semigroup(spec, f);
  for (auto &p : primes_avoiding(spec.size(), ring::support(f))) {
    auto image = image_of(chart, p);
    auto [it, fresh] = seen.emplace(image, p);
    scan.images.emplace_back(p, std::move(image));
    if (!fresh) {
      scan.collision.emplace(it->second, std::move(p));
      break;
    }
  }
  return scan;
}

bool contains_irrelevant(const RingSpec &spec, const MonomialPrime &p) {
  return contains_all(ring::irrelevant_generators(spec), p);
}

CoverDecomposition cover_decomposition(const RingSpec &spec, const Monomial &h) {
  ring::check_monomial(spec, h);
  const auto gens = ring::irrelevant_generators(spec);
  const auto supp_h = ring::support(h);

  CoverDecomposition out;
  for (const auto &g : gens) {
    const auto sg = ring::support(g);
    if (std::includes(sg.begin(), sg.end(), supp_h.begin(), supp_h.end())) {
      out.charts.push_back(g);
    }
  }
  bool covers = spec.size() <= 16;
  if (covers) {
    for (const auto &p : primes_avoiding(spec.size(), supp_h)) {
      if (contains_all(gens, p)) {
        continue;
      }
      const bool hit = std::any_of(out.charts.begin(), out.charts.end(), [&](const Monomial &g) {
        return !meets(p, ring::support(g));
      });
      if (!hit) {
        covers = false;
        break;
      }
    }
  }
  if (covers) {
    return out;
  }
  out.generators_only = false;
  out.charts.clear();
  for (const auto &g : gens) {
    Monomial l(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      l[i] = std::max(h[i], g[i]);
    }
    if (std::find(out.charts.begin(), out.charts.end(), l) == out.charts.end()) {
      out.charts.push_back(std::move(l));
    }
  }
  diophantine::sort_graded_lex(out.charts);
  return out;
}

std::vector<MonomialPrime> v_plus(const RingSpec &spec, const std::vector<Monomial> &ideal) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto &m : ideal) {
    ring::check_monomial(spec, m);
    supports.push_back(ring::support(m));
  }
  const auto gens = ring::irrelevant_generators(spec);
  std::vector<MonomialPrime> out;
  for (auto &p : minimal_transversals(supports)) {
    if (!contains_all(gens, p)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Monomial> vanishing_ideal(std::size_t n, const std::vector<MonomialPrime> &primes) {
  std::vector<Monomial> out;
  for (const auto &t : minimal_transversals(primes)) {
    out.push_back(ring::indicator(n, t));
  }
  return out;
}

} // namespace projd::charts
