#pragma once

#include "qm/field.hpp"

#include "qm/util.hpp"

namespace qm {

// zeta_K(s) for s > 1 via the Euler product over rational primes,
// zeta(s) * L(s, chi_{D_K}) with the Kronecker character. The prime cutoff
// grows until the integral-comparison tail bound drops below tolerance/2.
// Throws DomainError for s <= 1, ToleranceUnreachable past the prime cap.
double dedekind_zeta(const Field& f, double s, double tolerance);

// Direct partial sum over ideals of norm <= max_norm; the independent
// cross-check route for the Euler product.
double zeta_ideal_partial_sum(const Field& f, double s, i64 max_norm);

// Cached zeta_K values entering certified tail bounds: (s, rel. tolerance)
// = (2, 1e-6), (5/2, 1e-6), (3/2, 1e-2).
struct ZetaTriple {
  double z2, z52, z32;
  double z2_tol, z52_tol, z32_tol;
};
const ZetaTriple& zeta_triple(const Field& f);

}  // namespace qm
