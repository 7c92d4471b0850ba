#pragma once

#include "qm/factor.hpp"

#include <optional>

namespace qm {

// Solution set of n = base (mod modulus O_K): base plus the lattice
// generated by the lcm of the two moduli.
struct CongruenceSolution {
  Element base;
  Element modulus;  // canonical generator of [alpha, beta] O_K
};

// Solves n = alpha0 (mod alpha), n = beta0 (mod beta). Empty when
// gcd(alpha, beta) does not divide alpha0 - beta0. Throws ZeroModulus.
std::optional<CongruenceSolution> crt_solve(const Element& alpha0, const Element& alpha,
                                            const Element& beta0, const Element& beta);

}  // namespace qm
