#pragma once

// Kernel lattices of grading maps, Hilbert bases of sign-constrained lattice
// semigroups and exact membership in finitely generated semigroups of Z^n.
//
// Exponent vectors use 64-bit entries; every arithmetic step is overflow
// checked and throws projd::Error instead of wrapping. Lattice bases are
// computed with the arbitrary-precision routines of fgab and converted back.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projd/fgab.hpp"

namespace projd::diophantine {

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

/// Sum of absolute values of the entries.
Exponent total_size(std::span<const Exponent> a);

/// Graded-lex order: smaller total_size first, then lexicographic with the
/// larger leading entry first (x^2 < xy < y^2 < xz for x > y > z).
bool graded_lex_less(std::span<const Exponent> a, std::span<const Exponent> b);
void sort_graded_lex(std::vector<ExponentVector> &v);

ExponentVector add(std::span<const Exponent> a, std::span<const Exponent> b);
ExponentVector subtract(std::span<const Exponent> a, std::span<const Exponent> b);
ExponentVector negate(std::span<const Exponent> a);
ExponentVector scale(std::span<const Exponent> a, Exponent k);
bool is_zero(std::span<const Exponent> a);
bool is_nonnegative(std::span<const Exponent> a);

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
Exponent to_exponent(const fgab::Integer &v);
fgab::IntVector to_integers(std::span<const Exponent> a);
ExponentVector from_integers(std::span<const fgab::Integer> a);

std::string to_string(std::span<const Exponent> a);

/// A degree map Z^n -> D, one degree per variable.
struct Grading {
  fgab::FgAbGroup group;
  std::vector<fgab::GroupElement> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
  fgab::GroupElement degree(std::span<const Exponent> a) const;
};

/// {a in L : a_i >= 0 for every i outside free_coords}, L given by a basis.
struct ConstrainedSemigroup {
  std::size_t dimension = 0;
  std::vector<ExponentVector> kernel_basis;
  std::vector<bool> free_coords; // length dimension

  bool contains(std::span<const Exponent> a) const;
};

/// Basis (Hermite form) of {a in Z^n : sum a_i deg(x_i) = 0 in D}.
std::vector<ExponentVector> kernel_lattice(const Grading &grading);

/// Integer-span membership in the lattice with the given basis.
bool lattice_contains(std::span<const ExponentVector> basis, std::span<const Exponent> a);

struct HilbertBasis {
  /// Lattice basis of the invertible elements (Hermite form).
  std::vector<ExponentVector> units;
  /// Minimal generators of the pointed quotient, each the graded-lex smallest
  /// representative of its class modulo units; sorted graded-lex.
  std::vector<ExponentVector> generators;
};

HilbertBasis hilbert_basis(const ConstrainedSemigroup &s);

/// Graded-lex smallest element of v + span(units); `units` in Hermite form.
ExponentVector coset_minimum(ExponentVector v, const std::vector<ExponentVector> &units);

/// generators, then units, then negated units.
std::vector<ExponentVector> semigroup_generators(const HilbertBasis &hb);

/// Graver basis (conformally minimal nonzero elements) of the lattice spanned
/// by `basis` in Z^n, one vector per +- pair with first nonzero entry positive.
std::vector<ExponentVector> graver_basis(std::span<const ExponentVector> basis, std::size_t n);

/// Nonnegative integer coefficients c with sum c_i generators[i] = b, or
/// nullopt. Complete decision procedure.
std::optional<std::vector<Exponent>> semigroup_member(std::span<const ExponentVector> generators,
                                                      std::span<const Exponent> b);

/// Membership over semigroup_generators(hilbert_basis(s)); the coefficients
/// refer to that list.
std::optional<std::vector<Exponent>> semigroup_member(const ConstrainedSemigroup &s,
                                                      std::span<const Exponent> b);

/// Minimal generators, modulo the degree-zero semigroup and its units, of
/// {a in Z^n : deg(a) = d, a_i >= 0 for i outside free_coords}. Each is the
/// graded-lex smallest representative modulo units; sorted graded-lex.
std::vector<ExponentVector> shifted_minimal_generators(const Grading &grading,
                                                       const std::vector<bool> &free_coords,
                                                       const fgab::GroupElement &d);

} // namespace projd::diophantine
