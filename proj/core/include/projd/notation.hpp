#pragma once

// Text forms of degrees, monomials and monomial primes:
//   degrees   "(2,0)", "(1 | 1 mod 2)"
//   monomials "xy/z", "z/(xy)", "x^2", "u1*u2" when names are longer than one
//   primes    "(0)", "(x,y)"

#include <string>
#include <vector>

#include "projd/fgab.hpp"
#include "projd/ringspec.hpp"

namespace projd::notation {

std::string format_degree(const fgab::FgAbGroup &group, const fgab::GroupElement &d);

/// Accepts "(a,b,c)" with the free coordinates followed by the torsion ones,
/// or "(a,b | c)" / "(a,b | c mod m)". Throws ParseError.
fgab::GroupElement parse_degree(const fgab::FgAbGroup &group, const std::string &text);

std::string format_monomial(const ring::RingSpec &spec, const diophantine::ExponentVector &a);
std::string format_monomial(const std::vector<std::string> &names,
                            const diophantine::ExponentVector &a);

/// Accepts "1", "x*z", "xz", "x^2*y", "x^2y". Variable names are matched
/// longest first. Throws ParseError naming the offending token.
ring::Monomial parse_monomial(const ring::RingSpec &spec, const std::string &text);

std::string format_prime(const ring::RingSpec &spec, const std::vector<std::size_t> &vars);
/// "(0)" (or "0") for the zero ideal, otherwise "(x,y)" or "x,y".
std::vector<std::size_t> parse_prime(const ring::RingSpec &spec, const std::string &text);

} // namespace projd::notation
