#pragma once

#include "qm/factor.hpp"
#include "qm/rat.hpp"

#include <vector>

namespace qm {

// Nonzero integral ideal of O_K: canonical generator plus cached prime
// factorization. Since O_K is principal, ideals are canonical associates.
struct Ideal {
  Element gen;
  Factorization fact;
  i64 nrm{1};
};

Ideal make_ideal(const Element& x);  // throws ZeroInput
Ideal unit_ideal(const Field& f);
const Field& field_of(const Ideal& a);

bool is_unit_ideal(const Ideal& a);
bool same_ideal(const Ideal& a, const Ideal& b);

int valuation(const Ideal& a, const PrimeElement& p);
bool ideal_divides(const Ideal& a, const Ideal& b);  // a | b

Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_gcd(const Ideal& a, const Ideal& b);
Ideal ideal_lcm(const Ideal& a, const Ideal& b);
Ideal ideal_div(const Ideal& a, const Ideal& b);  // requires b | a

// phi_K(a) = N(a) prod_{p | a} (1 - 1/N(p)), computed on the cached
// factorization in exact arithmetic.
i64 euler_phi(const Ideal& a);

// +1 on O_K, 0 when a prime square divides, (-1)^m on squarefree products.
int moebius(const Ideal& a);

// All divisor ideals, canonical and deduplicated, sorted by (norm, u, v).
std::vector<Ideal> divisors(const Ideal& a);

// c_m = N(m) prod_{p | m} (1 + 1/N(p)), exact.
Rat congruence_factor(const Ideal& m);

}  // namespace qm
