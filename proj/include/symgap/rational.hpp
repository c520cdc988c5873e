#pragma once

// Exact scalar type used throughout: arbitrary-precision rationals backed by
// GMP.  Structure constants and Cartan data stay in machine integers; every
// derived quantity (Killing pairings, Weyl dimension products, elimination
// pivots) is a Rat so nothing ever rounds.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symgap {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Narrowing accessor for values known to be small integers (structure
// constants, gradings).  Throws instead of truncating.
inline long long to_ll(const Rat& x) {
  if (!is_integer(x)) throw std::domain_error("to_ll: non-integer rational");
  return numerator(x).convert_to<long long>();
}

// Canonical "p/q" rendering; integers render without the denominator.
inline std::string rat_str(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace symgap
