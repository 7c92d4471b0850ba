#pragma once

#include "qm/rat.hpp"

#include <span>

namespace qm {

// Constant of the shape coeff * pi^pi_pow * sqrt(|D_K|)^sqrt_pow, kept in
// exact parts so identities between field constants can be tested without
// rounding. Realized as a double only at report time.
struct SymReal {
  Rat coeff;
  int pi_pow{0};
  int sqrt_pow{0};

  double value(int abs_disc) const;
};

// One of the nine imaginary quadratic fields K = Q(sqrt(d)) whose ring of
// integers Z[omega] is principal (class number 1). Integral basis {1, omega}
// with omega = sqrt(d) for d = 2, 3 mod 4 and omega = (1 + sqrt(d))/2 for
// d = 1 mod 4, so the norm form N(u + v omega) = u^2 + B u v + C v^2 is
// integral and positive definite with B^2 - 4C = D_K.
struct Field {
  int d;           // squarefree negative integer
  int disc;        // fundamental discriminant D_K
  int unit_count;  // omega_K: 6 for D=-3, 4 for D=-4, 2 otherwise
  int B;
  int C;

  // Invariants shared by all nine fields.
  static constexpr int real_places = 0;     // r_1
  static constexpr int complex_places = 1;  // r_2
  static constexpr int degree = 2;          // n_K
  static constexpr int regulator = 1;       // R_K
  static constexpr int class_number = 1;    // h_K

  SymReal rho;       // ideal-count density 2 pi / (omega_K sqrt|D_K|)
  SymReal covolume;  // sqrt|D_K| / 2

  int abs_disc() const { return -disc; }
  double sqrt_abs_disc() const;
  // Embedding of omega into C: (B + i sqrt|D_K|) / 2.
  double omega_re() const { return B / 2.0; }
  double omega_im() const { return sqrt_abs_disc() / 2.0; }
  double covolume_value() const { return covolume.value(abs_disc()); }
  double rho_value() const { return rho.value(abs_disc()); }
};

// Looks a field up by fundamental discriminant. Throws
// NotPrincipalImaginaryQuadratic for anything outside the nine-element list.
const Field& lookup_field(int disc);

// The nine fields, ordered by |D_K| ascending.
std::span<const Field> all_fields();

}  // namespace qm
