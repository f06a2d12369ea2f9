#pragma once

// Separatedness of Proj^D_B(S): surjectivity of the multiplication maps
// S_(f) ⊗ S_(g) -> S_(fg), weak pairs, separated submodels and a
// classification of the linear dependencies among the variable degrees.

#include <optional>
#include <string>
#include <vector>

#include "projd/charts.hpp"
#include "projd/ringspec.hpp"

namespace projd::separation {

using charts::Decomposition;
using diophantine::ExponentVector;
using ring::Monomial;
using ring::RingSpec;

struct WeakPairReport {
  Monomial f;
  Monomial g;
  bool weak = false;
  /// First element of S_(fg) (generator, unit or inverse unit) without a
  /// decomposition over the union.
  std::optional<ExponentVector> witness;
  /// Semigroup generators of S_(f) followed by those of S_(g).
  std::vector<ExponentVector> union_generators;
  /// Elements of S_(fg) that do decompose, with coefficients over the union.
  std::vector<Decomposition> decompositions;
};

WeakPairReport mu_surjective(const RingSpec &spec, const Monomial &f, const Monomial &g);

/// Generators scanned for weak pairs: the divisibility-minimal entries of B
/// when given (each must be relevant, else BadConicalIdeal), otherwise
/// conical_generators(spec).
std::vector<Monomial> pair_generators(const RingSpec &spec,
                                      const std::optional<std::vector<Monomial>> &B);

/// All weak unordered pairs among pair_generators(spec, B), in pair order.
std::vector<WeakPairReport> weak_pairs(const RingSpec &spec,
                                       const std::optional<std::vector<Monomial>> &B = std::nullopt);

enum class DependencyClass { length_one_only, nontrivial_irreducible, none, undetermined };

std::string to_string(DependencyClass c);

struct DependencyReport {
  DependencyClass kind = DependencyClass::none;
  /// For nontrivial_irreducible: the relation a (deg a+ = deg a-).
  std::optional<ExponentVector> witness;
  /// Minimal relations: Graver basis of the degree-zero lattice.
  std::vector<ExponentVector> minimal_relations;
  /// Only relations among variable degrees are classified.
  std::string scope = "variable-degree relations";
};

/// Length-one-only when every minimal relation is x_i^a ~ x_j^b;
/// nontrivial_irreducible when some minimal relation with a side of two or
/// more variables spans the only degree-zero ray with its sign pattern;
/// none when there are no relations; undetermined otherwise.
DependencyReport classify_dependencies(const RingSpec &spec);

struct SeparationVerdict {
  bool separated = true;
  std::vector<Monomial> generators;
  std::vector<WeakPairReport> weak_pairs;
  DependencyReport dependencies;
};

SeparationVerdict is_separated(const RingSpec &spec,
                               const std::optional<std::vector<Monomial>> &B = std::nullopt);

/// Inclusion-maximal subsets of Gen^D(S) without a weak pair, each in
/// generator order, the list ordered lexicographically by generator index.
std::vector<std::vector<Monomial>> separated_submodels(const RingSpec &spec);

} // namespace projd::separation
