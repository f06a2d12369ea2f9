#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "projd/fgab.hpp"
#include "specs.hpp"

using namespace projd;
using fgab::Integer;
using fgab::IntMatrix;
using test::deg;
using test::group;

namespace {

bool unimodular(const IntMatrix &m) {
  std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_si();
    }
  }
  return std::labs(oracle::det(rows)) == 1;
}

void check_smith(const IntMatrix &m) {
  const auto s = fgab::smith_normal_form(m);
  CHECK(s.U * m * s.V == s.S);
  CHECK(unimodular(s.U));
  CHECK(unimodular(s.V));
  for (std::size_t i = 0; i < s.S.rows(); ++i) {
    for (std::size_t j = 0; j < s.S.cols(); ++j) {
      if (i != j) {
        CHECK(s.S(i, j) == 0);
      }
    }
  }
  const auto d = s.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] != 0) {
      CHECK(d[i + 1] % d[i] == 0);
    } else {
      CHECK(d[i + 1] == 0);
    }
  }
  std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_si();
    }
  }
  const auto expected = oracle::smith_diagonal(rows);
  std::vector<long> nonzero;
  for (const auto &x : d) {
    if (x != 0) {
      nonzero.push_back(x.get_si());
    }
  }
  CHECK(nonzero == expected);
}

} // namespace

TEST_CASE("smith normal form of the identity") {
  const auto s = fgab::smith_normal_form(IntMatrix::identity(2));
  CHECK(s.S == IntMatrix::identity(2));
  CHECK(s.U == IntMatrix::identity(2));
  CHECK(s.V == IntMatrix::identity(2));
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  const auto m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  const auto s = fgab::smith_normal_form(m);
  CHECK(s.S == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  check_smith(m);
}

TEST_CASE("smith normal form of a unimodular matrix") {
  const auto m = IntMatrix::from_rows({{1, 0}, {1, 1}});
  CHECK(fgab::smith_normal_form(m).S == IntMatrix::identity(2));
  check_smith(m);
}

TEST_CASE("smith normal form of empty and zero matrices") {
  CHECK(fgab::smith_normal_form(IntMatrix(0, 0)).S.rows() == 0);
  const auto s = fgab::smith_normal_form(IntMatrix(2, 3));
  CHECK(s.rank() == 0);
  CHECK(s.U * IntMatrix(2, 3) * s.V == s.S);
}

TEST_CASE("smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(i, j) = entry(rng);
      }
    }
    check_smith(m);
  }
}

TEST_CASE("smith normal form survives entries beyond 64 bits") {
  IntMatrix m(2, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = Integer("98765432109876543210");
  m(1, 0) = Integer("-5555555555555555555555");
  m(1, 1) = 7;
  const auto s = fgab::smith_normal_form(m);
  CHECK(s.U * m * s.V == s.S);
}

TEST_CASE("group construction normalizes torsion to a divisibility chain") {
  const auto g = group(1, {2, 3});
  CHECK(g.torsion_orders() == fgab::IntVector{6});
  const auto h = group(0, {4, 6});
  CHECK(h.torsion_orders() == fgab::IntVector{2, 12});
  CHECK(group(2, {1}).torsion_rank() == 0);
  const auto e = deg(group(1, {2}), {3}, {5});
  CHECK(e.torsion[0] == 1);
}

TEST_CASE("subgroup index") {
  SUBCASE("<(1,0),(1,1)> has index 1 in Z^2") {
    const auto g = group(2);
    const std::vector h{deg(g, {1, 0}), deg(g, {1, 1})};
    CHECK(fgab::subgroup_index(g, fgab::Subgroup(g, h)) == Integer(1));
    CHECK(oracle::coset_count(g, h, 3, 6) == 1);
  }
  SUBCASE("<(1|0)> has index 2 in Z x Z/2") {
    const auto g = group(1, {2});
    const std::vector h{deg(g, {1}, {0})};
    CHECK(fgab::subgroup_index(g, fgab::Subgroup(g, h)) == Integer(2));
    CHECK(oracle::coset_count(g, h, 3, 6) == 2);
  }
  SUBCASE("standard generators have index 1") {
    for (const auto &g : {group(0, {6}), group(3), group(2, {2, 4})}) {
      CHECK(fgab::subgroup_index(g, fgab::Subgroup(g, g.standard_generators())) == Integer(1));
    }
  }
  SUBCASE("rank deficit gives infinite index") {
    const auto g = group(2);
    CHECK_FALSE(fgab::subgroup_index(g, fgab::Subgroup(g, {deg(g, {1, 1})})).has_value());
  }
}

TEST_CASE("subgroup membership") {
  const auto g = group(1, {2});
  SUBCASE("(2|0) in <(1|1)> with coefficient 2") {
    const fgab::Subgroup h(g, {deg(g, {1}, {1})});
    const auto w = fgab::subgroup_member(h, deg(g, {2}, {0}));
    REQUIRE(w.has_value());
    CHECK(*w == fgab::IntVector{2});
  }
  SUBCASE("zero is always a member with zero witness") {
    const fgab::Subgroup h(g, {deg(g, {1}, {1}), deg(g, {3}, {0})});
    const auto w = fgab::subgroup_member(h, g.zero());
    REQUIRE(w.has_value());
    for (const auto &c : *w) {
      CHECK(c == 0);
    }
  }
  SUBCASE("(1|1) not in <(1|0)>") {
    const fgab::Subgroup h(g, {deg(g, {1}, {0})});
    CHECK_FALSE(fgab::subgroup_member(h, deg(g, {1}, {1})).has_value());
    CHECK_FALSE(oracle::small_combination({{1, 0}}, 1, {2}, {1, 1}, 4));
  }
}

TEST_CASE("subgroup intersection") {
  SUBCASE("<(1|0)> meets <(1|1)> in <(2|0)>") {
    const auto g = group(1, {2});
    const auto i = fgab::subgroup_intersection(fgab::Subgroup(g, {deg(g, {1}, {0})}),
                                               fgab::Subgroup(g, {deg(g, {1}, {1})}));
    CHECK(i == fgab::Subgroup(g, {deg(g, {2}, {0})}));
  }
  SUBCASE("<(2,0),(0,2)> meets <(1,1)> in <(2,2)>") {
    const auto g = group(2);
    const auto i = fgab::subgroup_intersection(
        fgab::Subgroup(g, {deg(g, {2, 0}), deg(g, {0, 2})}), fgab::Subgroup(g, {deg(g, {1, 1})}));
    CHECK(i == fgab::Subgroup(g, {deg(g, {2, 2})}));
    for (long a = -6; a <= 6; ++a) {
      for (long b = -6; b <= 6; ++b) {
        const bool in_both = oracle::small_combination({{2, 0}, {0, 2}}, 2, {}, {a, b}, 6) &&
                             oracle::small_combination({{1, 1}}, 2, {}, {a, b}, 6);
        CHECK(i.member(deg(g, {a, b})).has_value() == in_both);
      }
    }
  }
  SUBCASE("H meets H in H") {
    const auto g = group(2, {3});
    const fgab::Subgroup h(g, {deg(g, {1, 2}, {1}), deg(g, {0, 3}, {0})});
    CHECK(fgab::subgroup_intersection(h, h) == h);
  }
}

namespace {

fgab::GroupElement random_element(std::mt19937 &rng, const fgab::FgAbGroup &g, long spread) {
  std::uniform_int_distribution<long> entry(-spread, spread);
  fgab::IntVector free(g.rank());
  fgab::IntVector tors(g.torsion_rank());
  for (auto &x : free) {
    x = entry(rng);
  }
  for (auto &x : tors) {
    x = entry(rng);
  }
  return g.element(free, tors);
}

fgab::FgAbGroup random_group(std::mt19937 &rng) {
  std::uniform_int_distribution<std::size_t> rank(0, 3);
  std::uniform_int_distribution<std::size_t> tcount(0, 2);
  std::uniform_int_distribution<long> order(2, 6);
  std::vector<long> orders(tcount(rng));
  for (auto &m : orders) {
    m = order(rng);
  }
  return group(rank(rng), orders);
}

} // namespace

TEST_CASE("property: index 1 iff every standard generator is a member") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_group(rng);
    std::vector<fgab::GroupElement> gens;
    for (std::size_t k = 0; k < 1 + trial % 4; ++k) {
      gens.push_back(random_element(rng, g, 3));
    }
    const fgab::Subgroup h(g, gens);
    bool all = true;
    for (const auto &e : g.standard_generators()) {
      all = all && h.member(e).has_value();
    }
    CHECK((fgab::subgroup_index(g, h) == Integer(1)) == all);
    for (const auto &x : gens) {
      CHECK(h.member(x).has_value());
    }
  }
}

TEST_CASE("property: intersection membership matches box enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_group(rng);
    if (g.rank() > 2) {
      continue;
    }
    std::vector<fgab::GroupElement> a{random_element(rng, g, 2), random_element(rng, g, 2)};
    std::vector<fgab::GroupElement> b{random_element(rng, g, 2)};
    const fgab::Subgroup ha(g, a);
    const fgab::Subgroup hb(g, b);
    const auto i = fgab::subgroup_intersection(ha, hb);
    std::vector<std::vector<long>> pa;
    std::vector<std::vector<long>> pb;
    for (const auto &x : a) {
      pa.push_back(oracle::plain(x));
    }
    for (const auto &x : b) {
      pb.push_back(oracle::plain(x));
    }
    std::vector<long> orders;
    for (const auto &m : g.torsion_orders()) {
      orders.push_back(m.get_si());
    }
    // Box elements with a witness found by small search are in H_a (resp. H_b)
    // for sure; absence of a small witness is only trusted when the exact test
    // also says no, so the check is one-sided where the search is incomplete.
    for (int k = 0; k < 30; ++k) {
      const auto e = random_element(rng, g, 4);
      const bool in_a = ha.member(e).has_value();
      const bool in_b = hb.member(e).has_value();
      CHECK(i.member(e).has_value() == (in_a && in_b));
      if (oracle::small_combination(pa, g.rank(), orders, oracle::plain(e), 6)) {
        CHECK(in_a);
      }
      if (oracle::small_combination(pb, g.rank(), orders, oracle::plain(e), 12)) {
        CHECK(in_b);
      }
    }
    for (const auto &x : i.generators()) {
      CHECK(ha.member(x).has_value());
      CHECK(hb.member(x).has_value());
    }
  }
}

TEST_CASE("property: index is multiplicative along chains") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const auto g = random_group(rng);
    std::vector<fgab::GroupElement> gens;
    for (std::size_t k = 0; k < g.rank() + 1; ++k) {
      gens.push_back(random_element(rng, g, 2));
    }
    const fgab::Subgroup h1(g, gens);
    const fgab::Subgroup h2 =
        fgab::subgroup_intersection(h1, fgab::Subgroup(g, {random_element(rng, g, 2), random_element(rng, g, 2),
                                                           random_element(rng, g, 2), random_element(rng, g, 2)}));
    const auto i1 = fgab::subgroup_index(g, h1);
    const auto i2 = fgab::subgroup_index(g, h2);
    if (!i1 || !i2 || *i2 > 40) {
      continue;
    }
    // [H1 : H2] by counting classes of sum c_i g_i, 0 <= c_i < [G : H2].
    const long bound = i2->get_si();
    if (std::pow(static_cast<double>(bound), static_cast<double>(gens.size())) > 4000) {
      continue;
    }
    std::vector<fgab::GroupElement> reps;
    std::vector<long> c(gens.size(), 0);
    while (true) {
      fgab::GroupElement e = g.zero();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        e = g.add(e, g.scale(gens[j], c[j]));
      }
      const bool known = std::any_of(reps.begin(), reps.end(), [&](const auto &r) {
        return h2.member(g.subtract(e, r)).has_value();
      });
      if (!known) {
        reps.push_back(e);
      }
      std::size_t j = 0;
      while (j < c.size() && c[j] == bound - 1) {
        c[j] = 0;
        ++j;
      }
      if (j == c.size()) {
        break;
      }
      ++c[j];
    }
    CHECK(*i2 == *i1 * static_cast<long>(reps.size()));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("solve_integer and integer_kernel") {
  const auto m = IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  const auto k = fgab::integer_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == fgab::IntVector{1, 1, -1});
  const fgab::IntVector b{2, 3};
  const auto x = fgab::solve_integer(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[2] == 2);
  CHECK((*x)[1] + (*x)[2] == 3);
  const auto two = IntMatrix::from_rows({{2, 4}});
  const fgab::IntVector odd{3};
  CHECK_FALSE(fgab::solve_integer(two, odd).has_value());
}

TEST_CASE("hermite basis is canonical for the lattice") {
  const std::vector<fgab::IntVector> a{{2, 0}, {0, 2}, {1, 1}};
  const std::vector<fgab::IntVector> b{{1, 1}, {1, -1}};
  CHECK(fgab::hermite_basis(a, 2) == fgab::hermite_basis(b, 2));
}
