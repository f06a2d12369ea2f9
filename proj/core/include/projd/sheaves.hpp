#pragma once

// Twisting sheaves O_X(d) on Proj^D(S): freeness through the intersection of
// the support groups, invertibility through per-chart units of degree d,
// generators of the chart modules S(d)_(f), the multiplication maps
// S(d)_(f) ⊗ S(e)_(f) -> S(d+e)_(f), and degree slices of global sections.

#include <optional>
#include <utility>
#include <vector>

#include "projd/charts.hpp"
#include "projd/fgab.hpp"
#include "projd/ringspec.hpp"

namespace projd::sheaves {

using diophantine::Exponent;
using diophantine::ExponentVector;
using fgab::GroupElement;
using ring::Monomial;
using ring::RingSpec;

/// Graded-lex smallest vector supported on supp(f) with degree d, or nullopt
/// iff d is not in D^f. Throws NotRelevant.
std::optional<ExponentVector> unit_of_degree(const RingSpec &spec, const Monomial &f,
                                             const GroupElement &d);

/// The intersection of D^g over g in Gen^D(S).
fgab::Subgroup free_degrees(const RingSpec &spec);

bool is_free(const RingSpec &spec, const GroupElement &d);

struct SheafReport {
  GroupElement d;
  bool free = false;
  bool invertible = false;
  std::vector<std::pair<Monomial, std::optional<ExponentVector>>> chart_units;
  /// First chart without a unit of degree d.
  std::optional<Monomial> obstruction;
};

SheafReport is_invertible(const RingSpec &spec, const GroupElement &d);

/// Generators of S(d)_(f) modulo units. Throws NotRelevant.
std::vector<ExponentVector> twist_module_generators(const RingSpec &spec, const Monomial &f,
                                                    const GroupElement &d);

struct ProductDecomposition {
  ExponentVector target;      // generator of S(d+e)_(f)
  ExponentVector d_part;      // generator of S(d)_(f)
  ExponentVector e_part;      // generator of S(e)_(f)
  std::vector<Exponent> rest; // coefficients over the chart's semigroup generators
};

struct TwistProduct {
  bool surjective = true;
  std::vector<ProductDecomposition> decompositions;
  std::optional<ExponentVector> failure;
};

/// Does every generator of S(d+e)_(f) split as (d-part)(e-part)(chart element)?
TwistProduct twist_product_surjective(const RingSpec &spec, const Monomial &f,
                                      const GroupElement &d, const GroupElement &e);

struct Sections {
  std::vector<Monomial> monomials;
  /// True when the grading is pointed (no nonconstant monomial of degree
  /// zero), so that every degree slice is finite.
  bool complete = false;
};

/// Monomials of degree d with total degree at most `bound`, graded-lex.
Sections global_sections(const RingSpec &spec, const GroupElement &d, Exponent bound);

/// No nonzero nonnegative monomial of degree zero.
bool is_pointed(const RingSpec &spec);

} // namespace projd::sheaves
