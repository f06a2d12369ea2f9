#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "projd/errors.hpp"
#include "projd/ringspec.hpp"
#include "random_specs.hpp"
#include "specs.hpp"

using namespace projd;
using test::deg;
using test::mono;
using test::names;

TEST_CASE("effectiveness") {
  CHECK_NOTHROW(test::double_origin());
  CHECK_THROWS_AS(test::make_spec(2, {}, {{"x", {2, 0}}}), NotEffective);
  CHECK_THROWS_AS(test::make_spec(1, {2}, {{"x", {1}, {0}}}), NotEffective);
  CHECK_THROWS_AS(test::make_spec(1, {}, {}), NotEffective);
  CHECK_NOTHROW(test::make_spec(0, {}, {}));
}

TEST_CASE("variable names must be unique and nonempty") {
  CHECK_THROWS_AS(test::make_spec(1, {}, {{"x", {1}}, {"x", {1}}}), Error);
  CHECK_THROWS_AS(test::make_spec(1, {}, {{"", {1}}}), Error);
}

TEST_CASE("support groups") {
  const auto spec = test::double_origin();
  const auto &g = spec.group();
  CHECK(fgab::subgroup_index(g, ring::support_group(spec, mono(spec, "xz"))) == fgab::Integer(1));
  const auto dz = ring::support_group(spec, mono(spec, "z"));
  CHECK_FALSE(fgab::subgroup_index(g, dz).has_value());
  CHECK(dz.member(deg(g, {2, 2})).has_value());
  CHECK_FALSE(dz.member(deg(g, {1, 0})).has_value());
  const auto d1 = ring::support_group(spec, mono(spec, "1"));
  CHECK(d1.member(g.zero()).has_value());
  CHECK_FALSE(d1.member(deg(g, {1, 0})).has_value());
}

TEST_CASE("relevance examples") {
  const auto finite = test::finite_z2();
  CHECK(ring::is_relevant(finite, mono(finite, "1")));
  const auto d = test::double_origin();
  CHECK(ring::is_relevant(d, mono(d, "xy")));
  CHECK_FALSE(ring::is_relevant(d, mono(d, "z")));
  CHECK_FALSE(ring::is_relevant(d, mono(d, "z^5")));
  const auto t = test::torsion_z2();
  CHECK(ring::is_relevant(t, mono(t, "x")));
  CHECK_FALSE(ring::is_relevant(t, mono(t, "y")));
}

TEST_CASE("generators of the irrelevant ideal") {
  const auto d = test::double_origin();
  CHECK(names(d, ring::irrelevant_generators(d)) == std::vector<std::string>{"xy", "xz", "yz"});
  const auto t = test::torsion_z2();
  CHECK(names(t, ring::irrelevant_generators(t)) == std::vector<std::string>{"x", "z"});
  const auto f = test::four_var();
  CHECK(oracle::as_set(ring::irrelevant_generators(f)) ==
        oracle::as_set(test::monos(f, {"xw", "yw", "zw", "xz", "yz"})));
  const auto z2 = test::finite_z2();
  CHECK(names(z2, ring::irrelevant_generators(z2)) == std::vector<std::string>{"1"});
}

TEST_CASE("degree-zero companions") {
  const auto spec = test::double_origin();
  SUBCASE("h of degree zero") {
    const auto z2 = test::finite_z2();
    const auto c = ring::degree_zero_companion(z2, mono(z2, "x^2"), mono(z2, "x"));
    REQUIRE(c.has_value());
    CHECK(*c == ring::Companion{1, mono(z2, "1"), 0});
  }
  SUBCASE("h = y, f = xz") {
    const auto c = ring::degree_zero_companion(spec, mono(spec, "y"), mono(spec, "xz"));
    REQUIRE(c.has_value());
    CHECK(*c == ring::Companion{1, mono(spec, "x^2"), 1});
  }
  SUBCASE("h = yz, f = xz") {
    const auto c = ring::degree_zero_companion(spec, mono(spec, "yz"), mono(spec, "xz"));
    REQUIRE(c.has_value());
    CHECK(*c == ring::Companion{1, mono(spec, "x^3"), 2});
  }
  SUBCASE("f not relevant") {
    CHECK_FALSE(ring::degree_zero_companion(spec, mono(spec, "x"), mono(spec, "z")).has_value());
  }
}

TEST_CASE("companions against exhaustive search") {
  for (const auto &[name, spec] : test::all_fixtures()) {
    CAPTURE(name);
    const oracle::PlainGrading pg(spec.grading());
    const auto gens = ring::irrelevant_generators(spec);
    for (const auto &h : test::square_free(spec.size())) {
      for (const auto &f : gens) {
        const auto c = ring::degree_zero_companion(spec, h, f);
        REQUIRE(c.has_value());
        const auto e = oracle::sub(oracle::plus(diophantine::scale(h, c->N), c->g),
                                   diophantine::scale(f, c->k));
        CHECK(oracle::is_zero_degree(pg, e));
        CHECK(diophantine::is_nonnegative(c->g));
        // No smaller (N, k) admits a monomial g with total degree <= 4.
        bool smaller = false;
        for (diophantine::Exponent N = 1; N <= c->N && !smaller; ++N) {
          for (diophantine::Exponent k = 0; k <= 4 && !smaller; ++k) {
            if (N == c->N && k >= c->k) {
              break;
            }
            oracle::for_each_box(spec.size(), 4, [&](const diophantine::ExponentVector &g) {
              if (!diophantine::is_nonnegative(g) || diophantine::total_size(g) > 4) {
                return;
              }
              const auto t = oracle::sub(oracle::plus(diophantine::scale(h, N), g),
                                         diophantine::scale(f, k));
              smaller = smaller || oracle::is_zero_degree(pg, t);
            });
          }
        }
        CHECK_FALSE(smaller);
      }
    }
  }
}

TEST_CASE("relevance via components") {
  const auto d = test::double_origin();
  CHECK(ring::relevance_via_components(d, mono(d, "xy")));
  CHECK_FALSE(ring::relevance_via_components(d, mono(d, "z")));
  const auto z2 = test::finite_z2();
  CHECK(ring::relevance_via_components(z2, mono(z2, "x")));
  CHECK(ring::relevance_via_components(z2, mono(z2, "1")));
}

TEST_CASE("veronese scaling") {
  const auto d = test::double_origin();
  CHECK(ring::veronese_scaled_spec(d, 1) == d);
  const auto v2 = ring::veronese_scaled_spec(d, 2);
  CHECK(v2.variables()[2].degree == deg(d.group(), {2, 2}));
  CHECK(ring::irrelevant_generators(v2) == ring::irrelevant_generators(d));
  const auto t = test::torsion_z2();
  const auto t2 = ring::veronese_scaled_spec(t, 2);
  CHECK(t2.variables()[1].degree == deg(t.group(), {0}, {0}));
  CHECK(ring::is_relevant(t2, mono(t, "x")));
  CHECK(ring::is_relevant(t2, mono(t, "z")));
}

TEST_CASE("property: relevance, finite index and components agree; monotone; generator antichain") {
  std::vector<ring::RingSpec> specs;
  for (const auto &[_, s] : test::all_fixtures()) {
    specs.push_back(s);
  }
  std::mt19937 rng(11);
  while (specs.size() < 40) {
    if (auto s = test::random_spec(rng, {2, 6, 3, 1, -1, 2})) {
      specs.push_back(*s);
    }
  }
  for (const auto &spec : specs) {
    const auto sf = test::square_free(spec.size());
    const auto gens = ring::irrelevant_generators(spec);
    for (const auto &f : sf) {
      const bool relevant = ring::is_relevant(spec, f);
      CHECK(relevant == fgab::subgroup_index(spec.group(), ring::support_group(spec, f)).has_value());
      CHECK(relevant == ring::relevance_via_components(spec, f));
      for (const auto &g : sf) {
        if (relevant && ring::divides(f, g)) {
          CHECK(ring::is_relevant(spec, g));
        }
      }
      if (relevant) {
        CHECK(std::any_of(gens.begin(), gens.end(), [&](const auto &g) { return ring::divides(g, f); }));
      }
      for (diophantine::Exponent n : {2, 3}) {
        CHECK(ring::is_relevant(ring::veronese_scaled_spec(spec, n), f) == relevant);
      }
    }
    for (const auto &g : gens) {
      CHECK(ring::is_relevant(spec, g));
      for (const auto &h : gens) {
        if (g != h) {
          CHECK_FALSE(ring::divides(g, h));
        }
      }
    }
  }
}

TEST_CASE("generators use exactly r variables on nondegenerate gradings") {
  // Nondegenerate: every r of the free degrees are independent.
  for (const auto &spec : {test::double_origin(), test::four_var(), test::five_var()}) {
    for (const auto &g : ring::irrelevant_generators(spec)) {
      CHECK(ring::support(g).size() == spec.group().rank());
    }
  }
}

TEST_CASE("conical ideal entries must be relevant") {
  const auto t = test::torsion_z2();
  CHECK_THROWS_AS(test::make_spec(1, {2}, {{"x", {1}, {0}}, {"y", {0}, {1}}, {"z", {1}, {1}}},
                                  std::vector<ring::Monomial>{{0, 1, 0}}),
                  BadConicalIdeal);
  const auto d = test::make_spec(2, {}, {{"x", {1, 0}}, {"y", {0, 1}}, {"z", {1, 1}}},
                                 std::vector<ring::Monomial>{{1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
  CHECK(names(d, ring::conical_generators(d)) == std::vector<std::string>{"xy", "xz"});
}
