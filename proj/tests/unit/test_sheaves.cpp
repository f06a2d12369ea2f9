#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "projd/charts.hpp"
#include "projd/errors.hpp"
#include "projd/sheaves.hpp"
#include "random_specs.hpp"
#include "specs.hpp"

using namespace projd;
using diophantine::ExponentVector;
using test::deg;
using test::degree_box;
using test::mono;
using test::names;
using Strings = std::vector<std::string>;

TEST_CASE("units of a given degree") {
  const auto t = test::torsion_z2();
  const auto x = mono(t, "x");
  CHECK(sheaves::unit_of_degree(t, x, t.group().zero()) == ExponentVector{0, 0, 0});
  CHECK(sheaves::unit_of_degree(t, x, deg(t.group(), {2}, {0})) == ExponentVector{2, 0, 0});
  CHECK_FALSE(sheaves::unit_of_degree(t, x, deg(t.group(), {1}, {1})).has_value());
  CHECK_THROWS_AS(sheaves::unit_of_degree(t, mono(t, "y"), t.group().zero()), NotRelevant);
}

TEST_CASE("freeness") {
  const auto t = test::torsion_z2();
  CHECK(sheaves::is_free(t, deg(t.group(), {2}, {0})));
  CHECK_FALSE(sheaves::is_free(t, deg(t.group(), {1}, {0})));
  CHECK(sheaves::is_free(t, t.group().zero()));
  const auto d = test::double_origin();
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      CHECK(sheaves::is_free(d, deg(d.group(), {a, b})));
    }
  }
}

TEST_CASE("invertibility reports") {
  const auto d = test::double_origin();
  const auto r = sheaves::is_invertible(d, deg(d.group(), {1, 1}));
  CHECK(r.invertible);
  CHECK(r.free);
  REQUIRE(r.chart_units.size() == 3);
  CHECK(names(d, {*r.chart_units[0].second}) == Strings{"xy"});
  CHECK(names(d, {*r.chart_units[1].second}) == Strings{"z"});
  const auto t = test::torsion_z2();
  const auto bad = sheaves::is_invertible(t, deg(t.group(), {1}, {0}));
  CHECK_FALSE(bad.invertible);
  REQUIRE(bad.obstruction.has_value());
  CHECK(names(t, {*bad.obstruction}) == Strings{"z"});
  const auto zero = sheaves::is_invertible(t, t.group().zero());
  CHECK(zero.invertible);
  for (const auto &[chart, unit] : zero.chart_units) {
    CHECK(unit == ExponentVector{0, 0, 0});
  }
}

TEST_CASE("twist module generators") {
  const auto d = test::double_origin();
  CHECK(sheaves::twist_module_generators(d, mono(d, "xy"), d.group().zero()) ==
        std::vector<ExponentVector>{{0, 0, 0}});
  CHECK(names(d, sheaves::twist_module_generators(d, mono(d, "xy"), deg(d.group(), {1, 1}))) ==
        Strings{"xy"});
  const auto t = test::torsion_z2();
  CHECK(oracle::as_set(sheaves::twist_module_generators(t, mono(t, "x"), deg(t.group(), {0}, {1}))) ==
        oracle::as_set({{0, 1, 0}, {-1, 0, 1}}));
}

namespace {

void check_product(const ring::RingSpec &spec, const ring::Monomial &f,
                   const sheaves::TwistProduct &p) {
  const auto chart = charts::chart_algebra(spec, f).semigroup_generators();
  for (const auto &dec : p.decompositions) {
    ExponentVector sum = diophantine::add(dec.d_part, dec.e_part);
    for (std::size_t k = 0; k < dec.rest.size(); ++k) {
      CHECK(dec.rest[k] >= 0);
      sum = diophantine::add(sum, diophantine::scale(chart[k], dec.rest[k]));
    }
    CHECK(sum == dec.target);
  }
}

} // namespace

TEST_CASE("twist products") {
  const auto d = test::double_origin();
  const auto zero = sheaves::twist_product_surjective(d, mono(d, "xy"), d.group().zero(),
                                                      d.group().zero());
  CHECK(zero.surjective);
  const auto t = test::torsion_z2();
  const auto e = deg(t.group(), {1}, {0});
  const auto p = sheaves::twist_product_surjective(t, mono(t, "x"), e, e);
  CHECK(p.surjective);
  check_product(t, mono(t, "x"), p);
  const auto q = sheaves::twist_product_surjective(d, mono(d, "xy"), deg(d.group(), {1, 1}),
                                                   deg(d.group(), {1, 1}));
  CHECK(q.surjective);
  REQUIRE(q.decompositions.size() == 1);
  CHECK(names(d, {q.decompositions[0].target}) == Strings{"x^2y^2"});
  check_product(d, mono(d, "xy"), q);
}

TEST_CASE("global sections") {
  const auto d = test::double_origin();
  const auto s = sheaves::global_sections(d, deg(d.group(), {1, 1}), 3);
  CHECK(names(d, s.monomials) == Strings{"z", "xy"});
  CHECK(s.complete);
  const auto z2 = test::finite_z2();
  const auto t = sheaves::global_sections(z2, z2.group().zero(), 4);
  CHECK(names(z2, t.monomials) == Strings{"1", "x^2", "x^4"});
  CHECK_FALSE(t.complete);
  CHECK(sheaves::global_sections(d, deg(d.group(), {-1, 0}), 5).monomials.empty());
  CHECK_THROWS_AS(sheaves::global_sections(d, d.group().zero(), -1), Error);
}

namespace {

std::vector<ring::RingSpec> specs_for_properties() {
  std::vector<ring::RingSpec> specs;
  for (const auto &[_, s] : test::all_fixtures()) {
    specs.push_back(s);
  }
  std::mt19937 rng(1701);
  while (specs.size() < 16) {
    if (auto s = test::random_spec(rng, {2, 4, 2, 1, -1, 2})) {
      specs.push_back(*s);
    }
  }
  return specs;
}

} // namespace

TEST_CASE("property: free iff invertible, and the free degrees form a subgroup") {
  for (const auto &spec : specs_for_properties()) {
    const auto &g = spec.group();
    const auto box = degree_box(g, 2);
    std::vector<fgab::GroupElement> free;
    for (const auto &d : box) {
      const bool f = sheaves::is_free(spec, d);
      CHECK(f == sheaves::is_invertible(spec, d).invertible);
      if (f) {
        free.push_back(d);
        CHECK(sheaves::is_free(spec, g.negate(d)));
      }
    }
    CHECK(sheaves::is_free(spec, g.zero()));
    for (const auto &a : free) {
      for (const auto &b : free) {
        CHECK(sheaves::is_free(spec, g.add(a, b)));
      }
    }
  }
}

TEST_CASE("a single twist generator need not be a unit") {
  const auto spec = test::make_spec(1, {}, {{"x", {2}, {}}, {"y", {1}, {}}});
  const auto x = mono(spec, "x");
  const auto d = deg(spec.group(), {1});
  CHECK(names(spec, sheaves::twist_module_generators(spec, x, d)) == Strings{"y"});
  CHECK_FALSE(sheaves::unit_of_degree(spec, x, d).has_value());
  CHECK_FALSE(sheaves::is_invertible(spec, d).invertible);
}

TEST_CASE("property: a unit of degree d is the single twist generator") {
  for (const auto &spec : specs_for_properties()) {
    const auto gens = ring::irrelevant_generators(spec);
    for (const auto &d : degree_box(spec.group(), 1)) {
      for (const auto &f : gens) {
        const auto unit = sheaves::unit_of_degree(spec, f, d);
        const auto mod = sheaves::twist_module_generators(spec, f, d);
        if (mod.size() == 1 && !unit) {
          bool outside = false;
          for (std::size_t i = 0; i < f.size(); ++i) {
            outside = outside || (f[i] == 0 && mod[0][i] != 0);
          }
          CHECK(outside);
        }
        if (unit) {
          REQUIRE(mod.size() == 1);
          CHECK(mod[0] == *unit);
          CHECK(spec.degree(*unit) == spec.group().element(d.free, d.torsion));
          for (std::size_t i = 0; i < unit->size(); ++i) {
            if ((*unit)[i] != 0) {
              CHECK(f[i] > 0);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("property: multiplication by a unit translates degree 0 onto degree d") {
  for (const auto &spec : specs_for_properties()) {
    if (spec.size() > 4) {
      continue;
    }
    const oracle::PlainGrading pg(spec.grading());
    for (const auto &f : ring::irrelevant_generators(spec)) {
      const auto mask = ring::support_mask(f);
      for (const auto &d : degree_box(spec.group(), 1)) {
        const auto u = sheaves::unit_of_degree(spec, f, d);
        if (!u) {
          continue;
        }
        const auto target = pg.reduce(d);
        oracle::for_each_box(spec.size(), 2, [&](const ExponentVector &a) {
          if (oracle::in_semigroup(pg, mask, a)) {
            CHECK(oracle::in_shifted(pg, mask, target, oracle::plus(a, *u)));
          }
          if (oracle::in_shifted(pg, mask, target, a)) {
            CHECK(oracle::in_semigroup(pg, mask, oracle::sub(a, *u)));
          }
        });
      }
    }
  }
}

TEST_CASE("property: sections are the monomials of degree d, seen on every chart") {
  for (const auto &spec : specs_for_properties()) {
    if (spec.size() > 4) {
      continue;
    }
    const oracle::PlainGrading pg(spec.grading());
    for (const auto &d : degree_box(spec.group(), 1)) {
      const auto s = sheaves::global_sections(spec, d, 3);
      CHECK(s.complete == sheaves::is_pointed(spec));
      const auto target = pg.reduce(d);
      std::set<ExponentVector> expected;
      oracle::for_each_box(spec.size(), 3, [&](const ExponentVector &a) {
        if (diophantine::is_nonnegative(a) && diophantine::total_size(a) <= 3 &&
            pg.degree(a) == target) {
          expected.insert(a);
        }
      });
      CHECK(oracle::as_set(s.monomials) == expected);
      for (const auto &f : ring::irrelevant_generators(spec)) {
        for (const auto &m : s.monomials) {
          CHECK(oracle::in_shifted(pg, ring::support_mask(f), target, m));
        }
      }
    }
  }
}
