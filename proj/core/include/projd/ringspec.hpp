#pragma once

// D-graded polynomial rings over a field, modeled at the monomial level:
// named variables with degrees in D and an optional conical ideal B given by
// monomials. Relevance, support groups, generators of the irrelevant ideal
// and degree-zero companions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "projd/diophantine.hpp"
#include "projd/fgab.hpp"

namespace projd::ring {

using diophantine::Exponent;
using diophantine::ExponentVector;

/// Exponent vector with nonnegative entries.
using Monomial = ExponentVector;

struct Variable {
  std::string name;
  fgab::GroupElement degree;

  friend bool operator==(const Variable &, const Variable &) = default;
};

class RingSpec {
public:
  enum class Check { full, skip_effectiveness };

  /// Validates names, reduces degrees, checks effectiveness and that every
  /// entry of the conical ideal is a relevant monomial.
  RingSpec(fgab::FgAbGroup group, std::vector<Variable> variables,
           std::optional<std::vector<Monomial>> conical_ideal = std::nullopt,
           Check check = Check::full);

  const fgab::FgAbGroup &group() const noexcept { return grading_.group; }
  const std::vector<Variable> &variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  const diophantine::Grading &grading() const noexcept { return grading_; }
  const std::optional<std::vector<Monomial>> &conical_ideal() const noexcept { return conical_; }
  /// Hermite basis of the degree-zero lattice.
  const std::vector<ExponentVector> &kernel() const noexcept { return kernel_; }

  std::optional<std::size_t> variable_index(const std::string &name) const;
  std::vector<std::string> names() const;
  fgab::GroupElement degree(const ExponentVector &a) const { return grading_.degree(a); }

  friend bool operator==(const RingSpec &a, const RingSpec &b) {
    return a.variables_ == b.variables_ && a.grading_.group == b.grading_.group &&
           a.conical_ == b.conical_;
  }

private:
  std::vector<Variable> variables_;
  diophantine::Grading grading_;
  std::optional<std::vector<Monomial>> conical_;
  std::vector<ExponentVector> kernel_;
};

/// Throws NotEffective naming a standard generator of D missing from the
/// span of the variable degrees.
void validate_effective(const fgab::FgAbGroup &group, const std::vector<fgab::GroupElement> &degrees);
void validate_effective(const RingSpec &spec);

/// Throws Error unless m is a nonnegative vector of the right length.
void check_monomial(const RingSpec &spec, const Monomial &m);

std::vector<std::size_t> support(const ExponentVector &a);
std::vector<bool> support_mask(const ExponentVector &a);
/// Square-free monomial with the given support.
Monomial indicator(std::size_t n, const std::vector<std::size_t> &vars);
bool divides(const Monomial &a, const Monomial &b);

/// D^f: the subgroup generated by the degrees of the variables dividing f.
fgab::Subgroup support_group(const RingSpec &spec, const Monomial &f);
bool is_relevant(const RingSpec &spec, const Monomial &f);
/// Rank of the free parts of the degrees in supp(f) equals the rank of D.
bool relevance_via_components(const RingSpec &spec, const Monomial &f);

/// Gen^D(S): the inclusion-minimal square-free relevant monomials, sorted
/// graded-lex. {1} when D is finite.
std::vector<Monomial> irrelevant_generators(const RingSpec &spec);

/// The divisibility-minimal entries of the conical ideal, or Gen^D(S) when
/// no conical ideal is set. Sorted graded-lex.
std::vector<Monomial> conical_generators(const RingSpec &spec);

struct Companion {
  Exponent N = 0;
  Monomial g;
  Exponent k = 0;

  friend bool operator==(const Companion &, const Companion &) = default;
};

/// Smallest N >= 1, then smallest k, then graded-lex smallest monomial g with
/// deg(h^N g) = deg(f^k). nullopt iff f is not relevant.
std::optional<Companion> degree_zero_companion(const RingSpec &spec, const Monomial &h,
                                               const Monomial &f);

/// Same variables with all degrees multiplied by n, graded by the same group.
/// The result is usually not effective; that check is skipped for it.
RingSpec veronese_scaled_spec(const RingSpec &spec, Exponent n);

} // namespace projd::ring
