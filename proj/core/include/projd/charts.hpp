#pragma once

// Degree-zero charts S_(f), the correspondence p -> pS_f ∩ S_(f) on monomial
// primes, chart intersections, covers of D+(h) and V+ of monomial ideals.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "projd/diophantine.hpp"
#include "projd/ringspec.hpp"

namespace projd::charts {

using diophantine::Exponent;
using diophantine::ExponentVector;
using ring::Monomial;
using ring::RingSpec;

/// A monomial prime: sorted variable indices; empty is the zero ideal.
using MonomialPrime = std::vector<std::size_t>;

struct ChartAlgebra {
  Monomial f;
  std::vector<ExponentVector> units;
  std::vector<ExponentVector> generators;
  std::vector<bool> free_coords;

  /// generators, units, negated units.
  std::vector<ExponentVector> semigroup_generators() const;
  diophantine::ConstrainedSemigroup semigroup(const RingSpec &spec) const;
};

/// S_(f) for relevant f; throws NotRelevant otherwise.
ChartAlgebra chart_algebra(const RingSpec &spec, const Monomial &f);
/// The degree-zero semigroup of S_f for any monomial f.
ChartAlgebra localization_semigroup(const RingSpec &spec, const Monomial &f);

struct Decomposition {
  ExponentVector element;
  std::vector<Exponent> coefficients; // over the list the report names
};

struct ChartIntersection {
  ChartAlgebra product;                  // S_(fg)
  std::vector<ExponentVector> inverted;  // generators of S_(f) that become units
  std::vector<ExponentVector> localized; // generators of S_(f) localized at `inverted`
  std::vector<Decomposition> forward;    // S_(fg) elements over `localized`
  std::vector<Decomposition> backward;   // `localized` over S_(fg)
};

/// Checks S_(fg) = S_(f)[u^-1 : u in inverted] by mutual membership and
/// returns the certificates. Throws NotRelevant, or InvariantViolation if the
/// two semigroups differ.
ChartIntersection chart_intersection_check(const RingSpec &spec, const Monomial &f,
                                           const Monomial &g);

/// Chart generators of S_f's degree-zero part whose positive support meets p.
/// f need not be relevant. Throws PrimeMeetsF if p contains a variable of f.
std::vector<ExponentVector> psi_image(const RingSpec &spec, const Monomial &f,
                                      const MonomialPrime &p);

struct PsiScan {
  std::vector<std::pair<MonomialPrime, std::vector<ExponentVector>>> images;
  std::optional<std::pair<MonomialPrime, MonomialPrime>> collision;

  bool injective() const noexcept { return !collision.has_value(); }
};

/// Runs psi_image over all monomial primes avoiding supp(f), ordered by size
/// then lexicographically, and stops at the first collision.
PsiScan psi_collision_scan(const RingSpec &spec, const Monomial &f);

/// Monomial primes avoiding every variable of `avoid`, ordered by size then
/// lexicographically.
std::vector<MonomialPrime> primes_avoiding(std::size_t n, const std::vector<std::size_t> &avoid);

/// Does p contain every element of Gen^D(S)?
bool contains_irrelevant(const RingSpec &spec, const MonomialPrime &p);

struct CoverDecomposition {
  std::vector<Monomial> charts;
  /// True when the charts are the Gen^D(S) elements whose support contains
  /// supp(h); false when those do not cover D+(h) and the relevant monomials
  /// lcm(h, g), g in Gen^D(S), are returned instead.
  bool generators_only = true;
};

CoverDecomposition cover_decomposition(const RingSpec &spec, const Monomial &h);

/// Minimal monomial primes over the ideal that do not contain S+. The zero
/// ideal (empty list) gives the single prime (0).
std::vector<MonomialPrime> v_plus(const RingSpec &spec, const std::vector<Monomial> &ideal);

/// Square-free generators of the intersection of the given primes. An empty
/// list of primes gives the unit ideal {1}; a zero prime gives the zero ideal.
std::vector<Monomial> vanishing_ideal(std::size_t n, const std::vector<MonomialPrime> &primes);

} // namespace projd::charts
