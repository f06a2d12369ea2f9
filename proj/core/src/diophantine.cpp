#include "projd/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "projd/errors.hpp"

namespace projd::diophantine {

using fgab::Integer;
using fgab::IntMatrix;
using fgab::IntVector;

// ---------------------------------------------------------------------------
// Vector helpers

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("exponent overflow");
  }
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("exponent overflow");
  }
  return r;
}

static Exponent checked_abs(Exponent a) {
  if (a == std::numeric_limits<Exponent>::min()) {
    throw Error("exponent overflow");
  }
  return a < 0 ? -a : a;
}

Exponent total_size(std::span<const Exponent> a) {
  Exponent s = 0;
  for (Exponent x : a) {
    s = checked_add(s, checked_abs(x));
  }
  return s;
}

bool graded_lex_less(std::span<const Exponent> a, std::span<const Exponent> b) {
  const Exponent sa = total_size(a);
  const Exponent sb = total_size(b);
  if (sa != sb) {
    return sa < sb;
  }
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) {
      return a[i] > b[i];
    }
  }
  return a.size() < b.size();
}

void sort_graded_lex(std::vector<ExponentVector> &v) {
  std::sort(v.begin(), v.end(),
            [](const ExponentVector &a, const ExponentVector &b) { return graded_lex_less(a, b); });
}

ExponentVector add(std::span<const Exponent> a, std::span<const Exponent> b) {
  if (a.size() != b.size()) {
    throw Error("exponent vectors of different length");
  }
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_add(a[i], b[i]);
  }
  return r;
}

ExponentVector negate(std::span<const Exponent> a) { return scale(a, -1); }

ExponentVector subtract(std::span<const Exponent> a, std::span<const Exponent> b) {
  return add(a, negate(b));
}

ExponentVector scale(std::span<const Exponent> a, Exponent k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_mul(a[i], k);
  }
  return r;
}

bool is_zero(std::span<const Exponent> a) {
  return std::all_of(a.begin(), a.end(), [](Exponent x) { return x == 0; });
}

bool is_nonnegative(std::span<const Exponent> a) {
  return std::all_of(a.begin(), a.end(), [](Exponent x) { return x >= 0; });
}

Exponent to_exponent(const Integer &v) {
  if (!v.fits_slong_p()) {
    throw Error("exponent overflow: " + v.get_str());
  }
  return static_cast<Exponent>(v.get_si());
}

IntVector to_integers(std::span<const Exponent> a) {
  IntVector r;
  r.reserve(a.size());
  for (Exponent x : a) {
    r.emplace_back(static_cast<long>(x));
  }
  return r;
}

ExponentVector from_integers(std::span<const Integer> a) {
  ExponentVector r;
  r.reserve(a.size());
  for (const auto &x : a) {
    r.push_back(to_exponent(x));
  }
  return r;
}

std::string to_string(std::span<const Exponent> a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << a[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Gradings and lattices

fgab::GroupElement Grading::degree(std::span<const Exponent> a) const {
  if (a.size() != degrees.size()) {
    throw Error("exponent vector " + to_string(a) + " has wrong length for a ring with " +
                std::to_string(degrees.size()) + " variables");
  }
  IntVector sum(group.lifted_dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    const IntVector l = group.lift(degrees[i]);
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] += l[k] * static_cast<long>(a[i]);
    }
  }
  return group.element(sum);
}

bool ConstrainedSemigroup::contains(std::span<const Exponent> a) const {
  if (a.size() != dimension) {
    return false;
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    if (!free_coords[i] && a[i] < 0) {
      return false;
    }
  }
  return lattice_contains(kernel_basis, a);
}

std::vector<ExponentVector> kernel_lattice(const Grading &grading) {
  const auto &g = grading.group;
  const std::size_t n = grading.size();
  const std::size_t dim = g.lifted_dimension();
  const std::size_t t = g.torsion_rank();
  IntMatrix m(dim, n + t);
  for (std::size_t j = 0; j < n; ++j) {
    const IntVector l = g.lift(grading.degrees[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, j) = l[i];
    }
  }
  for (std::size_t k = 0; k < t; ++k) {
    m(g.rank() + k, n + k) = g.torsion_orders()[k];
  }
  std::vector<IntVector> projected;
  for (const auto &row : fgab::integer_kernel(m)) {
    projected.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
  }
  std::vector<ExponentVector> basis;
  for (const auto &row : fgab::hermite_basis(projected, n)) {
    basis.push_back(from_integers(row));
  }
  return basis;
}

bool lattice_contains(std::span<const ExponentVector> basis, std::span<const Exponent> a) {
  if (is_zero(a)) {
    return true;
  }
  if (basis.empty()) {
    return false;
  }
  IntMatrix m(a.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      m(i, j) = static_cast<long>(basis[j][i]);
    }
  }
  return fgab::solve_integer(m, to_integers(a)).has_value();
}

// ---------------------------------------------------------------------------
// Completion

namespace {

struct Element {
  ExponentVector proj;
  ExponentVector lift; // may be empty when no lift is tracked
};

// g is conformally below s: same signs, no larger in absolute value.
bool conformal_le(const ExponentVector &g, const ExponentVector &s) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) {
      continue;
    }
    if ((g[i] > 0) != (s[i] > 0) || s[i] == 0) {
      return false;
    }
    if (checked_abs(g[i]) > checked_abs(s[i])) {
      return false;
    }
  }
  return true;
}

bool sign_compatible(const ExponentVector &a, const ExponentVector &b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) {
      return false;
    }
  }
  return true;
}

void axpy(ExponentVector &dst, const ExponentVector &src, Exponent k) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = checked_add(dst[i], checked_mul(k, src[i]));
  }
}

Element normal_form(Element s, const std::vector<Element> &basis) {
  bool changed = true;
  while (changed && !is_zero(s.proj)) {
    changed = false;
    for (const auto &g : basis) {
      if (!conformal_le(g.proj, s.proj)) {
        continue;
      }
      Exponent k = std::numeric_limits<Exponent>::max();
      for (std::size_t i = 0; i < g.proj.size(); ++i) {
        if (g.proj[i] != 0) {
          k = std::min(k, s.proj[i] / g.proj[i]);
        }
      }
      axpy(s.proj, g.proj, -k);
      if (!s.lift.empty()) {
        axpy(s.lift, g.lift, -k);
      }
      changed = true;
      break;
    }
  }
  return s;
}

// Pottier-style completion: the conformally minimal elements of the result
// form the Graver basis of the lattice generated by `gens`.
std::vector<Element> graver_completion(const std::vector<Element> &gens) {
  std::vector<Element> g;
  for (const auto &e : gens) {
    if (is_zero(e.proj)) {
      continue;
    }
    g.push_back(e);
    g.push_back({negate(e.proj), e.lift.empty() ? ExponentVector{} : negate(e.lift)});
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sign_compatible(g[i].proj, g[j].proj)) {
        continue;
      }
      Element s{add(g[i].proj, g[j].proj),
                g[i].lift.empty() ? ExponentVector{} : add(g[i].lift, g[j].lift)};
      if (is_zero(s.proj)) {
        continue;
      }
      Element r = normal_form(std::move(s), g);
      if (!is_zero(r.proj)) {
        g.push_back(std::move(r));
      }
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j || !conformal_le(g[j].proj, g[i].proj)) {
        continue;
      }
      // Strictly below, or an equal copy appearing earlier.
      if (g[j].proj != g[i].proj || j < i) {
        keep = false;
      }
    }
    if (keep) {
      minimal.push_back(g[i]);
    }
  }
  return minimal;
}

} // namespace

ExponentVector coset_minimum(ExponentVector v, const std::vector<ExponentVector> &units) {
  if (units.empty()) {
    return v;
  }
  const std::size_t n = v.size();
  std::vector<std::size_t> piv;
  for (const auto &u : units) {
    std::size_t p = 0;
    while (p < n && u[p] == 0) {
      ++p;
    }
    piv.push_back(p);
  }

  // Greedy start: centre the pivot coordinates, then local descent.
  for (std::size_t i = 0; i < units.size(); ++i) {
    const double q = static_cast<double>(v[piv[i]]) / static_cast<double>(units[i][piv[i]]);
    axpy(v, units[i], -static_cast<Exponent>(std::llround(q)));
  }
  std::vector<ExponentVector> moves;
  for (std::size_t i = 0; i < units.size(); ++i) {
    moves.push_back(units[i]);
    moves.push_back(negate(units[i]));
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      moves.push_back(add(units[i], units[j]));
      moves.push_back(negate(moves.back()));
      moves.push_back(subtract(units[i], units[j]));
      moves.push_back(negate(moves.back()));
    }
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto &m : moves) {
      ExponentVector w = add(v, m);
      if (graded_lex_less(w, v)) {
        v = std::move(w);
        improved = true;
      }
    }
  }

  // Exact search: any better element has every entry bounded by the current
  // total size, which pins each pivot coefficient to a finite range.
  const Exponent bound = total_size(v);
  ExponentVector best = v;
  const ExponentVector base = v;
  std::size_t budget = 2'000'000;
  auto floor_div = [](Exponent a, Exponent b) {
    Exponent q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
      --q;
    }
    return q;
  };
  auto search = [&](auto &&self, std::size_t level, const ExponentVector &w) -> void {
    if (budget == 0) {
      return;
    }
    --budget;
    const std::size_t settled = level < units.size() ? piv[level] : n;
    Exponent partial = 0;
    for (std::size_t c = 0; c < settled; ++c) {
      partial = checked_add(partial, checked_abs(w[c]));
    }
    if (partial > bound) {
      return;
    }
    if (level == units.size()) {
      if (graded_lex_less(w, best)) {
        best = w;
      }
      return;
    }
    const Exponent p = units[level][piv[level]];
    const Exponent x = w[piv[level]];
    const Exponent lo = -floor_div(checked_add(bound, x), p);
    const Exponent hi = floor_div(checked_add(bound, -x), p);
    for (Exponent c = lo; c <= hi; ++c) {
      ExponentVector next = w;
      axpy(next, units[level], c);
      self(self, level + 1, next);
    }
  };
  search(search, 0, base);
  return best;
}

namespace {

std::vector<ExponentVector> to_exponent_rows(const std::vector<IntVector> &rows) {
  std::vector<ExponentVector> out;
  for (const auto &r : rows) {
    out.push_back(from_integers(r));
  }
  return out;
}

} // namespace

std::vector<ExponentVector> graver_basis(std::span<const ExponentVector> basis, std::size_t n) {
  std::vector<Element> gens;
  for (const auto &b : basis) {
    if (b.size() != n) {
      throw Error("graver_basis: basis vector of wrong length");
    }
    gens.push_back({b, {}});
  }
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> out;
  for (auto &e : graver_completion(gens)) {
    auto it = std::find_if(e.proj.begin(), e.proj.end(), [](Exponent x) { return x != 0; });
    if (*it < 0) {
      e.proj = negate(e.proj);
    }
    if (seen.insert(e.proj).second) {
      out.push_back(std::move(e.proj));
    }
  }
  sort_graded_lex(out);
  return out;
}

HilbertBasis hilbert_basis(const ConstrainedSemigroup &s) {
  const std::size_t n = s.dimension;
  if (s.free_coords.size() != n) {
    throw Error("hilbert_basis: free coordinate mask has wrong length");
  }
  std::vector<std::size_t> constrained;
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.free_coords[i]) {
      constrained.push_back(i);
    }
  }
  const std::size_t c = constrained.size();

  // Rows [a_C | a]: the Hermite form separates a basis of the projection
  // (with lifts) from a basis of the units (zero projection).
  std::vector<IntVector> rows;
  for (const auto &b : s.kernel_basis) {
    if (b.size() != n) {
      throw Error("hilbert_basis: kernel vector of wrong length");
    }
    IntVector r;
    for (std::size_t i : constrained) {
      r.emplace_back(static_cast<long>(b[i]));
    }
    for (Exponent x : b) {
      r.emplace_back(static_cast<long>(x));
    }
    rows.push_back(std::move(r));
  }
  std::vector<IntVector> unit_rows;
  std::vector<Element> projected;
  for (const auto &h : fgab::hermite_basis(rows, c + n)) {
    const bool in_units = std::all_of(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(c),
                                      [](const Integer &x) { return x == 0; });
    IntVector tail(h.begin() + static_cast<std::ptrdiff_t>(c), h.end());
    if (in_units) {
      unit_rows.push_back(std::move(tail));
    } else {
      projected.push_back({from_integers(std::span(h).first(c)), from_integers(tail)});
    }
  }

  HilbertBasis hb;
  hb.units = to_exponent_rows(fgab::hermite_basis(unit_rows, n));

  std::set<ExponentVector> seen;
  for (const auto &e : graver_completion(projected)) {
    if (!is_nonnegative(e.proj) || !seen.insert(e.proj).second) {
      continue;
    }
    hb.generators.push_back(coset_minimum(e.lift, hb.units));
  }
  sort_graded_lex(hb.generators);
  return hb;
}

std::vector<ExponentVector> semigroup_generators(const HilbertBasis &hb) {
  std::vector<ExponentVector> out = hb.generators;
  out.insert(out.end(), hb.units.begin(), hb.units.end());
  for (const auto &u : hb.units) {
    out.push_back(negate(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

Exponent dot(const ExponentVector &a, const ExponentVector &b) {
  Exponent s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s = checked_add(s, checked_mul(a[i], b[i]));
  }
  return s;
}

bool dominates(const std::vector<Exponent> &c, const std::vector<Exponent> &s) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < s[i]) {
      return false;
    }
  }
  return true;
}

} // namespace

std::optional<std::vector<Exponent>> semigroup_member(std::span<const ExponentVector> generators,
                                                      std::span<const Exponent> b) {
  const std::size_t n = b.size();
  std::vector<Exponent> result(generators.size(), 0);
  if (is_zero(b)) {
    return result;
  }
  // Distinct nonzero generators, with their original positions.
  std::vector<ExponentVector> gens;
  std::vector<std::size_t> origin;
  {
    std::set<ExponentVector> seen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].size() != n) {
        throw Error("semigroup_member: generator " + to_string(generators[i]) +
                    " has wrong length");
      }
      if (!is_zero(generators[i]) && seen.insert(generators[i]).second) {
        gens.push_back(generators[i]);
        origin.push_back(i);
      }
    }
  }
  // Coordinates where every generator has the same sign bound how often each
  // generator can be used; drop the ones that overshoot and repeat.
  std::vector<int> sign(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool nonneg = std::all_of(gens.begin(), gens.end(), [&](const auto &g) { return g[i] >= 0; });
      const bool nonpos = std::all_of(gens.begin(), gens.end(), [&](const auto &g) { return g[i] <= 0; });
      sign[i] = nonneg ? 1 : nonpos ? -1 : 0;
      if ((nonneg && b[i] < 0) || (nonpos && b[i] > 0)) {
        return std::nullopt;
      }
      for (std::size_t j = gens.size(); j-- > 0;) {
        if ((nonneg && gens[j][i] > b[i]) || (nonpos && gens[j][i] < b[i])) {
          gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j));
          origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  if (gens.empty() || !lattice_contains(gens, b)) {
    return std::nullopt;
  }
  const std::size_t k = gens.size();
  auto overshoots = [&](const ExponentVector &defect) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((sign[i] > 0 && defect[i] > 0) || (sign[i] < 0 && defect[i] < 0)) {
        return true;
      }
    }
    return false;
  };
  const ExponentVector minus_b = negate(b);

  // Contejean-Devie completion on the homogenized system
  //   sum c_j g_j - t b = 0,  t in {0, 1},
  // grown one unit at a time along directions that decrease the defect.
  // States with t = 0 only find the homogeneous minimal solutions, which
  // prune the search for the t = 1 solution.
  struct State {
    bool t;
    std::vector<Exponent> c;
    bool operator<(const State &o) const { return std::tie(t, c) < std::tie(o.t, o.c); }
  };
  std::map<State, ExponentVector> frontier;
  frontier.emplace(State{true, std::vector<Exponent>(k, 0)}, minus_b);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Exponent> c(k, 0);
    c[j] = 1;
    if (!overshoots(gens[j])) {
      frontier.emplace(State{false, std::move(c)}, gens[j]);
    }
  }
  std::vector<std::vector<Exponent>> homogeneous;

  while (!frontier.empty()) {
    for (const auto &[state, defect] : frontier) {
      if (!is_zero(defect)) {
        continue;
      }
      if (state.t) {
        for (std::size_t j = 0; j < k; ++j) {
          result[origin[j]] = state.c[j];
        }
        return result;
      }
      homogeneous.push_back(state.c);
    }
    std::map<State, ExponentVector> next;
    for (const auto &[state, defect] : frontier) {
      if (is_zero(defect)) {
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (dot(defect, gens[j]) >= 0) {
          continue;
        }
        State s = state;
        s.c[j] = checked_add(s.c[j], 1);
        const bool pruned = std::any_of(homogeneous.begin(), homogeneous.end(),
                                        [&](const auto &h) { return dominates(s.c, h); });
        if (pruned || next.contains(s)) {
          continue;
        }
        ExponentVector d = add(defect, gens[j]);
        if (overshoots(d)) {
          continue;
        }
        next.emplace(std::move(s), std::move(d));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::vector<Exponent>> semigroup_member(const ConstrainedSemigroup &s,
                                                      std::span<const Exponent> b) {
  const auto gens = semigroup_generators(hilbert_basis(s));
  return semigroup_member(gens, b);
}

std::vector<ExponentVector> shifted_minimal_generators(const Grading &grading,
                                                       const std::vector<bool> &free_coords,
                                                       const fgab::GroupElement &d) {
  const std::size_t n = grading.size();
  if (free_coords.size() != n) {
    throw Error("shifted_minimal_generators: free coordinate mask has wrong length");
  }
  // One extra variable of degree -d; its degree-one slice is the shifted set.
  Grading augmented = grading;
  augmented.degrees.push_back(grading.group.negate(grading.group.element(d.free, d.torsion)));
  ConstrainedSemigroup s;
  s.dimension = n + 1;
  s.kernel_basis = kernel_lattice(augmented);
  s.free_coords = free_coords;
  s.free_coords.push_back(false);

  std::vector<ExponentVector> out;
  for (const auto &g : hilbert_basis(s).generators) {
    if (g[n] == 1) {
      out.emplace_back(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    }
  }
  sort_graded_lex(out);
  return out;
}

} // namespace projd::diophantine
