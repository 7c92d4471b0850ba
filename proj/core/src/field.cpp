#include "qm/field.hpp"

#include "qm/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qm {

double SymReal::value(int abs_disc) const {
  double v = coeff.to_double();
  if (pi_pow) v *= std::pow(std::numbers::pi, pi_pow);
  if (sqrt_pow) v *= std::pow(std::sqrt(double(abs_disc)), sqrt_pow);
  return v;
}

double Field::sqrt_abs_disc() const { return std::sqrt(double(abs_disc())); }

namespace {

Field make_field(int d) {
  Field f{};
  f.d = d;
  int m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) {
    f.disc = d;
    f.B = 1;
    f.C = (1 - d) / 4;
  } else {
    f.disc = 4 * d;
    f.B = 0;
    f.C = -d;
  }
  f.unit_count = f.disc == -3 ? 6 : f.disc == -4 ? 4 : 2;
  f.rho = SymReal{rat(2, f.unit_count), 1, -1};
  f.covolume = SymReal{rat(1, 2), 0, 1};
  return f;
}

const std::array<Field, 9>& registry() {
  // Ordered by |D_K|: -3, -4, -7, -8, -11, -19, -43, -67, -163.
  static const std::array<Field, 9> fields = {
      make_field(-3),  make_field(-1),  make_field(-7),
      make_field(-2),  make_field(-11), make_field(-19),
      make_field(-43), make_field(-67), make_field(-163)};
  return fields;
}

}  // namespace

const Field& lookup_field(int disc) {
  for (const Field& f : registry())
    if (f.disc == disc) return f;
  throw NotPrincipalImaginaryQuadratic(
      "discriminant " + std::to_string(disc) +
      " is not one of the nine principal imaginary quadratic fields");
}

std::span<const Field> all_fields() { return registry(); }

}  // namespace qm
