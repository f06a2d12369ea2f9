#pragma once

// Seeded generators for random gradings and specs.

#include <random>

#include "projd/errors.hpp"
#include "specs.hpp"

namespace projd::test {

struct GradingShape {
  std::size_t min_vars = 2;
  std::size_t max_vars = 5;
  std::size_t max_rank = 2;
  std::size_t max_torsion = 1;
  long min_entry = -2;
  long max_entry = 2;
};

inline diophantine::Grading random_grading(std::mt19937 &rng, const GradingShape &shape) {
  std::uniform_int_distribution<std::size_t> nvars(shape.min_vars, shape.max_vars);
  std::uniform_int_distribution<std::size_t> rank(0, shape.max_rank);
  std::uniform_int_distribution<std::size_t> tcount(0, shape.max_torsion);
  std::uniform_int_distribution<long> order(2, 4);
  std::uniform_int_distribution<long> entry(shape.min_entry, shape.max_entry);
  const std::size_t r = rank(rng);
  std::vector<long> orders(tcount(rng));
  for (auto &m : orders) {
    m = order(rng);
  }
  diophantine::Grading g;
  g.group = group(r, orders);
  const std::size_t n = nvars(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> free(r);
    std::vector<long> tors(g.group.torsion_rank());
    for (auto &x : free) {
      x = entry(rng);
    }
    for (auto &x : tors) {
      x = entry(rng);
    }
    g.degrees.push_back(deg(g.group, free, tors));
  }
  return g;
}

inline std::vector<bool> random_mask(std::mt19937 &rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<bool> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = coin(rng);
  }
  return m;
}

/// Random effective grading with variables named x0, x1, ...; nullopt when
/// the draw is not effective.
inline std::optional<ring::RingSpec> random_spec(std::mt19937 &rng, const GradingShape &shape) {
  const auto g = random_grading(rng, shape);
  std::vector<ring::Variable> vars;
  for (std::size_t i = 0; i < g.size(); ++i) {
    vars.push_back({"x" + std::to_string(i), g.degrees[i]});
  }
  try {
    return ring::RingSpec(g.group, std::move(vars));
  } catch (const NotEffective &) {
    return std::nullopt;
  }
}

} // namespace projd::test
