#include "projd/fgab.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "projd/errors.hpp"

namespace projd::fgab {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error("IntMatrix::from_rows: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  IntMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto &r : rows) {
    if (r.size() != cols) {
      throw Error("IntMatrix::from_rows: ragged rows");
    }
    std::size_t j = 0;
    for (long v : r) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    c[i] = (*this)(i, j);
  }
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    std::swap((*this)(i, a), (*this)(i, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(dst, j) += factor * (*this)(src, j);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, dst) += factor * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(i, j) = -(*this)(i, j);
  }
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) {
    throw Error("IntMatrix: dimension mismatch in product");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(S.rows(), S.cols());
  while (r < n && S(r, r) != 0) {
    ++r;
  }
  return r;
}

IntVector SmithForm::diagonal() const {
  const std::size_t n = std::min(S.rows(), S.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = S(i, i);
  }
  return d;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix &S = f.S;
  const std::size_t rows = S.rows();
  const std::size_t cols = S.cols();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    bool found = true;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (S(i, j) != 0 && (pi == rows || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        found = false;
        break;
      }
      S.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) != 0) {
          Integer q = S(i, t) / S(t, t);
          S.add_row_multiple(i, t, -q);
          f.U.add_row_multiple(i, t, -q);
          clean = clean && S(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) != 0) {
          Integer q = S(t, j) / S(t, t);
          S.add_col_multiple(j, t, -q);
          f.V.add_col_multiple(j, t, -q);
          clean = clean && S(t, j) == 0;
        }
      }
      if (!clean) {
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) {
        break;
      }
      S.add_row_multiple(t, bad, 1);
      f.U.add_row_multiple(t, bad, 1);
    }
    if (!found) {
      break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Hermite basis, kernels, solving

std::vector<IntVector> hermite_basis(std::span<const IntVector> rows, std::size_t cols) {
  std::vector<IntVector> mat(rows.begin(), rows.end());
  for (const auto &r : mat) {
    if (r.size() != cols) {
      throw Error("hermite_basis: ragged rows");
    }
  }
  auto axpy = [](IntVector &dst, const IntVector &src, const Integer &k) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      dst[j] += k * src[j];
    }
  };

  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < mat.size(); ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = mat.size();
      for (std::size_t i = p; i < mat.size(); ++i) {
        if (mat[i][c] != 0 && (best == mat.size() || abs(mat[i][c]) < abs(mat[best][c]))) {
          best = i;
        }
      }
      if (best == mat.size()) {
        break;
      }
      have_pivot = true;
      std::swap(mat[p], mat[best]);
      bool clean = true;
      for (std::size_t i = p + 1; i < mat.size(); ++i) {
        if (mat[i][c] != 0) {
          Integer q = mat[i][c] / mat[p][c];
          axpy(mat[i], mat[p], -q);
          clean = clean && mat[i][c] == 0;
        }
      }
      if (clean) {
        break;
      }
    }
    if (!have_pivot) {
      continue;
    }
    if (mat[p][c] < 0) {
      for (auto &x : mat[p]) {
        x = -x;
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), mat[i][c].get_mpz_t(), mat[p][c].get_mpz_t());
      axpy(mat[i], mat[p], -q);
    }
    ++p;
  }
  mat.resize(p);
  return mat;
}

std::vector<IntVector> integer_kernel(const IntMatrix &m) {
  const SmithForm f = smith_normal_form(m);
  const std::size_t r = f.rank();
  std::vector<IntVector> basis;
  for (std::size_t j = r; j < m.cols(); ++j) {
    basis.push_back(f.V.column(j));
  }
  return hermite_basis(basis, m.cols());
}

std::optional<IntVector> solve_integer(const IntMatrix &m, std::span<const Integer> b) {
  if (b.size() != m.rows()) {
    throw Error("solve_integer: right-hand side has wrong length");
  }
  const SmithForm f = smith_normal_form(m);
  const std::size_t r = f.rank();
  IntVector c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      c[i] += f.U(i, k) * b[k];
    }
  }
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < r) {
      if (c[i] % f.S(i, i) != 0) {
        return std::nullopt;
      }
      y[i] = c[i] / f.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      x[i] += f.V(i, k) * y[k];
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::Normalized FgAbGroup::normalize(std::size_t rank, std::span<const Integer> orders) {
  for (const auto &m : orders) {
    if (m <= 0) {
      throw Error("torsion order must be positive, got " + m.get_str());
    }
  }
  const std::size_t t = orders.size();
  IntMatrix diag(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    diag(i, i) = orders[i];
  }
  const SmithForm f = smith_normal_form(diag);

  Normalized out;
  out.group.rank_ = rank;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < t; ++i) {
    if (f.S(i, i) >= 2) {
      kept.push_back(i);
      out.group.orders_.push_back(f.S(i, i));
    }
  }
  out.torsion_map = IntMatrix(kept.size(), t);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t j = 0; j < t; ++j) {
      out.torsion_map(k, j) = f.U(kept[k], j);
    }
  }
  return out;
}

GroupElement FgAbGroup::Normalized::map(std::span<const Integer> free,
                                        std::span<const Integer> raw_torsion) const {
  if (raw_torsion.size() != torsion_map.cols()) {
    throw Error("group element has " + std::to_string(raw_torsion.size()) +
                " torsion coordinates, expected " + std::to_string(torsion_map.cols()));
  }
  IntVector t(torsion_map.rows());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < raw_torsion.size(); ++j) {
      t[i] += torsion_map(i, j) * raw_torsion[j];
    }
  }
  return group.element(IntVector(free.begin(), free.end()), std::move(t));
}

FgAbGroup::FgAbGroup(std::size_t rank, std::span<const Integer> orders)
    : FgAbGroup(normalize(rank, orders).group) {}

Integer FgAbGroup::torsion_exponent() const {
  Integer e = 1;
  for (const auto &m : orders_) {
    mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  }
  return e;
}

GroupElement FgAbGroup::element(IntVector free, IntVector torsion) const {
  if (free.size() != rank_ || torsion.size() != orders_.size()) {
    throw Error("group element " + to_string(free) + "|" + to_string(torsion) +
                " does not match a group of rank " + std::to_string(rank_) + " with " +
                std::to_string(orders_.size()) + " torsion factors");
  }
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    mpz_fdiv_r(torsion[j].get_mpz_t(), torsion[j].get_mpz_t(), orders_[j].get_mpz_t());
  }
  return GroupElement{std::move(free), std::move(torsion)};
}

GroupElement FgAbGroup::element(std::span<const Integer> lifted) const {
  if (lifted.size() != lifted_dimension()) {
    throw Error("lifted group element has wrong length");
  }
  return element(IntVector(lifted.begin(), lifted.begin() + static_cast<std::ptrdiff_t>(rank_)),
                 IntVector(lifted.begin() + static_cast<std::ptrdiff_t>(rank_), lifted.end()));
}

GroupElement FgAbGroup::zero() const {
  return GroupElement{IntVector(rank_), IntVector(orders_.size())};
}

std::vector<GroupElement> FgAbGroup::standard_generators() const {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < lifted_dimension(); ++i) {
    IntVector v(lifted_dimension());
    v[i] = 1;
    gens.push_back(element(v));
  }
  return gens;
}

GroupElement FgAbGroup::add(const GroupElement &a, const GroupElement &b) const {
  IntVector f(rank_);
  IntVector t(orders_.size());
  for (std::size_t i = 0; i < rank_; ++i) {
    f[i] = a.free[i] + b.free[i];
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    t[j] = a.torsion[j] + b.torsion[j];
  }
  return element(std::move(f), std::move(t));
}

GroupElement FgAbGroup::negate(const GroupElement &a) const { return scale(a, -1); }

GroupElement FgAbGroup::scale(const GroupElement &a, const Integer &k) const {
  IntVector f(rank_);
  IntVector t(orders_.size());
  for (std::size_t i = 0; i < rank_; ++i) {
    f[i] = a.free[i] * k;
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    t[j] = a.torsion[j] * k;
  }
  return element(std::move(f), std::move(t));
}

IntVector FgAbGroup::lift(const GroupElement &a) const {
  IntVector v = a.free;
  v.insert(v.end(), a.torsion.begin(), a.torsion.end());
  return v;
}

bool FgAbGroup::contains(const GroupElement &a) const {
  if (a.free.size() != rank_ || a.torsion.size() != orders_.size()) {
    return false;
  }
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (a.torsion[j] < 0 || a.torsion[j] >= orders_[j]) {
      return false;
    }
  }
  return true;
}

std::vector<IntVector> FgAbGroup::relation_vectors() const {
  std::vector<IntVector> rel;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    IntVector v(lifted_dimension());
    v[rank_ + j] = orders_[j];
    rel.push_back(std::move(v));
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

// Columns: lifted generators followed by the torsion relations.
IntMatrix lifted_system(const FgAbGroup &g, std::span<const GroupElement> gens) {
  const std::size_t dim = g.lifted_dimension();
  const auto rel = g.relation_vectors();
  IntMatrix m(dim, gens.size() + rel.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const IntVector v = g.lift(gens[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, j) = v[i];
    }
  }
  for (std::size_t j = 0; j < rel.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, gens.size() + j) = rel[j][i];
    }
  }
  return m;
}

} // namespace

Subgroup::Subgroup(FgAbGroup ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  std::vector<IntVector> rows;
  for (auto &g : generators_) {
    if (!ambient_.contains(g)) {
      // Reduce foreign-looking coordinates; shape mismatches throw here.
      g = ambient_.element(g.free, g.torsion);
    }
    rows.push_back(ambient_.lift(g));
  }
  for (auto &r : ambient_.relation_vectors()) {
    rows.push_back(std::move(r));
  }
  hermite_ = hermite_basis(rows, ambient_.lifted_dimension());
}

std::optional<IntVector> Subgroup::member(const GroupElement &d) const {
  const GroupElement e = ambient_.element(d.free, d.torsion);
  const IntMatrix m = lifted_system(ambient_, generators_);
  const IntVector rhs = ambient_.lift(e);
  auto x = solve_integer(m, rhs);
  if (!x) {
    return std::nullopt;
  }
  x->resize(generators_.size());
  return x;
}

std::optional<Integer> Subgroup::index() const {
  const std::size_t dim = ambient_.lifted_dimension();
  if (hermite_.size() < dim) {
    return std::nullopt;
  }
  // Square echelon form: the index is the product of the pivots.
  Integer idx = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    idx *= hermite_[i][i];
  }
  return idx;
}

std::vector<GroupElement> Subgroup::canonical_generators() const {
  std::vector<GroupElement> gens;
  const GroupElement zero = ambient_.zero();
  for (const auto &row : hermite_) {
    GroupElement e = ambient_.element(row);
    if (e != zero && std::find(gens.begin(), gens.end(), e) == gens.end()) {
      gens.push_back(std::move(e));
    }
  }
  return gens;
}

std::size_t Subgroup::free_rank() const { return hermite_.size() - ambient_.torsion_rank(); }

bool Subgroup::operator==(const Subgroup &other) const {
  if (!(ambient_ == other.ambient_)) {
    return false;
  }
  return hermite_ == other.hermite_;
}

std::optional<Integer> subgroup_index(const FgAbGroup &group, const Subgroup &h) {
  if (!(group == h.ambient())) {
    throw Error("subgroup_index: subgroup lives in a different group");
  }
  return h.index();
}

std::optional<IntVector> subgroup_member(const Subgroup &h, const GroupElement &d) {
  return h.member(d);
}

Subgroup subgroup_intersection(const Subgroup &a, const Subgroup &b) {
  if (!(a.ambient() == b.ambient())) {
    throw Error("subgroup_intersection: subgroups live in different groups");
  }
  const FgAbGroup &g = a.ambient();
  const auto &ga = a.generators();
  const auto &gb = b.generators();
  const std::size_t dim = g.lifted_dimension();
  const auto rel = g.relation_vectors();

  // sum c_i a_i - sum c'_j b_j + sum u_k m_k e_k = 0
  IntMatrix m(dim, ga.size() + gb.size() + rel.size());
  std::size_t col = 0;
  for (const auto &e : ga) {
    const IntVector v = g.lift(e);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, col) = v[i];
    }
    ++col;
  }
  for (const auto &e : gb) {
    const IntVector v = g.lift(e);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, col) = -v[i];
    }
    ++col;
  }
  for (const auto &r : rel) {
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, col) = r[i];
    }
    ++col;
  }

  std::vector<GroupElement> gens;
  for (const auto &x : integer_kernel(m)) {
    IntVector v(dim);
    for (std::size_t k = 0; k < ga.size(); ++k) {
      const IntVector l = g.lift(ga[k]);
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] += x[k] * l[i];
      }
    }
    gens.push_back(g.element(v));
  }
  const Subgroup raw(g, std::move(gens));
  return Subgroup(g, raw.canonical_generators());
}

std::string to_string(const IntVector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

} // namespace projd::fgab
