#pragma once

#include "qm/primes.hpp"

#include <utility>
#include <vector>

namespace qm {

// Exact factorization over O_K: unit * prod generator^exponent, generators
// canonical, pairwise non-associate, sorted by (norm, u, v).
struct Factorization {
  Element unit;
  std::vector<std::pair<PrimeElement, int>> factors;
};

// Per-field cached prime elements above p.
const std::vector<PrimeElement>& primes_above_cached(const Field& f, i64 p);

Factorization factor(const Element& x);  // throws ZeroInput

// Multiplies the factorization back out.
Element factorization_value(const Factorization& fa);

// Canonical generator of aO_K + bO_K, via shared prime factorization.
// Throws BothZero.
Element gcd(const Element& a, const Element& b);

// Canonical generator of aO_K ∩ bO_K. Throws ZeroInput.
Element lcm(const Element& a, const Element& b);

}  // namespace qm
