#pragma once

// Exact arithmetic for finitely generated abelian groups
//   D = Z^r (+) Z/m_1 (+) ... (+) Z/m_t,   m_1 | m_2 | ... | m_t,
// their elements and subgroups. Every torsion question is lifted to a
// question about a lattice in Z^(r+t) that contains the relation lattice
// m_1 Z e_(r+1) + ... + m_t Z e_(r+t); everything below is plain integer
// linear algebra on top of Smith and Hermite normal forms.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace projd::fgab {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = S with U, V unimodular and S diagonal, d_i | d_(i+1), d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const;
  IntVector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

/// Row-style Hermite normal form of the lattice spanned by `rows`: nonzero
/// echelon rows, positive pivots, entries above a pivot reduced into
/// [0, pivot). Canonical for the lattice.
std::vector<IntVector> hermite_basis(std::span<const IntVector> rows, std::size_t cols);

/// Basis (rows) of the integer kernel {x : m x = 0}, in Hermite form.
std::vector<IntVector> integer_kernel(const IntMatrix &m);

/// Some integer solution of m x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix &m, std::span<const Integer> b);

class FgAbGroup;

/// An element of an FgAbGroup. Torsion coordinates are kept reduced by the
/// group that created the element; equality is componentwise.
struct GroupElement {
  IntVector free;
  IntVector torsion;

  friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

class FgAbGroup {
public:
  /// Z^rank (+) Z/orders[0] (+) ... . The orders may be arbitrary positive
  /// integers; they are brought to the divisibility chain and trivial
  /// factors are dropped. Use `normalize` to also get the coordinate change.
  FgAbGroup(std::size_t rank, std::span<const Integer> orders);
  explicit FgAbGroup(std::size_t rank = 0) : rank_(rank) {}

  struct Normalized;
  static Normalized normalize(std::size_t rank, std::span<const Integer> orders);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t torsion_rank() const noexcept { return orders_.size(); }
  std::size_t lifted_dimension() const noexcept { return rank_ + orders_.size(); }
  const IntVector &torsion_orders() const noexcept { return orders_; }
  bool is_finite() const noexcept { return rank_ == 0; }
  /// Exponent of the torsion part (1 if torsion-free).
  Integer torsion_exponent() const;

  GroupElement element(IntVector free, IntVector torsion) const;
  /// Element from r + t concatenated coordinates.
  GroupElement element(std::span<const Integer> lifted) const;
  GroupElement zero() const;
  std::vector<GroupElement> standard_generators() const;

  GroupElement add(const GroupElement &a, const GroupElement &b) const;
  GroupElement negate(const GroupElement &a) const;
  GroupElement scale(const GroupElement &a, const Integer &k) const;
  GroupElement subtract(const GroupElement &a, const GroupElement &b) const {
    return add(a, negate(b));
  }

  IntVector lift(const GroupElement &a) const;
  bool contains(const GroupElement &a) const;

  /// Columns m_j e_(r+j): the relations of the torsion part inside Z^(r+t).
  std::vector<IntVector> relation_vectors() const;

  friend bool operator==(const FgAbGroup &, const FgAbGroup &) = default;

private:
  std::size_t rank_ = 0;
  IntVector orders_;
};

/// Result of normalizing a raw presentation: the canonical group together with
/// the matrix sending raw torsion coordinates to canonical ones.
struct FgAbGroup::Normalized {
  FgAbGroup group;
  IntMatrix torsion_map; // canonical_t x raw_t

  GroupElement map(std::span<const Integer> free, std::span<const Integer> raw_torsion) const;
};

/// Subgroup of an FgAbGroup given by generators. The derived relation data is
/// the Hermite basis of the lifted lattice (generators plus torsion relations).
class Subgroup {
public:
  Subgroup(FgAbGroup ambient, std::vector<GroupElement> generators);

  const FgAbGroup &ambient() const noexcept { return ambient_; }
  const std::vector<GroupElement> &generators() const noexcept { return generators_; }
  const std::vector<IntVector> &relation_basis() const noexcept { return hermite_; }

  /// Integer coefficients c with sum c_i g_i = d, or nullopt.
  std::optional<IntVector> member(const GroupElement &d) const;
  /// [D : H], or nullopt when the index is infinite.
  std::optional<Integer> index() const;
  /// Canonical generator list derived from the relation basis.
  std::vector<GroupElement> canonical_generators() const;
  /// Rank of the free part of the subgroup.
  std::size_t free_rank() const;

  bool operator==(const Subgroup &other) const;

private:
  FgAbGroup ambient_;
  std::vector<GroupElement> generators_;
  std::vector<IntVector> hermite_;
};

std::optional<Integer> subgroup_index(const FgAbGroup &group, const Subgroup &h);
std::optional<IntVector> subgroup_member(const Subgroup &h, const GroupElement &d);
Subgroup subgroup_intersection(const Subgroup &a, const Subgroup &b);

std::string to_string(const IntVector &v);

} // namespace projd::fgab
