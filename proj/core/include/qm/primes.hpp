#pragma once

#include "qm/element.hpp"

#include <memory>
#include <vector>

namespace qm {

enum class Splitting { split, inert, ramified };

// A prime element of O_K, i.e. a generator of a prime ideal.
struct PrimeElement {
  Element generator;  // canonical associate
  i64 residue_char;   // rational prime below
  Splitting splitting;
  i64 nrm;  // residue_char or residue_char^2

  friend bool operator==(const PrimeElement& a, const PrimeElement& b) {
    return a.generator == b.generator;
  }
};

// Kronecker symbol (D/p) for a registered discriminant and a prime p.
int kronecker(i64 D, i64 p);

// Trial-division primality; intended for desk-scale inputs (<= ~1e12).
bool is_prime(i64 n);

// Shared ascending prime list covering at least [2, limit]. Snapshots stay
// valid while the cache grows underneath.
std::shared_ptr<const std::vector<i64>> prime_snapshot(i64 limit);

// The prime elements above p: two conjugate non-associates when p splits,
// p itself when inert, a single ramified generator when p | D_K. Sorted by
// (norm, u, v). Throws NotPrime.
std::vector<PrimeElement> primes_above(const Field& f, i64 p);

}  // namespace qm
