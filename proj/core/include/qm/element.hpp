#pragma once

#include "qm/errors.hpp"
#include "qm/field.hpp"
#include "qm/util.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qm {

// Algebraic integer u + v*omega of a fixed field. Coordinates are 64-bit
// with 128-bit intermediates; operations assert against overflow (the
// library targets norms up to ~1e12).
struct Element {
  i64 u{0};
  i64 v{0};
  const Field* fld{nullptr};

  Element() = default;
  Element(i64 uu, i64 vv, const Field& f) : u(uu), v(vv), fld(&f) {}

  bool is_zero() const { return u == 0 && v == 0; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.u == b.u && a.v == b.v &&
           ((a.fld == b.fld) || (a.fld && b.fld && a.fld->disc == b.fld->disc));
  }
};

const Field& same_field(const Element& a, const Element& b);  // FieldMismatch

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);
Element conj(const Element& a);

i128 norm128(const Element& a);
i64 norm(const Element& a);  // overflow-checked narrowing

// y | x test; returns x / y when the division is exact.
std::optional<Element> try_exact_div(const Element& x, const Element& y);
// Exact division; throws ZeroInput when y = 0, NotDivisible otherwise.
Element exact_div(const Element& x, const Element& y);
bool divides(const Element& y, const Element& x);

// The omega_K units, ordered counterclockwise starting at 1.
std::vector<Element> units(const Field& f);

// Complex argument in [0, 2 pi / omega_K)? Decidable exactly from the
// coordinates: per unit count the window is a coordinate cone.
bool is_canonical_associate(const Element& x);

struct CanonicalPair {
  Element unit;       // x = unit * canonical
  Element canonical;  // the associate with argument in [0, 2 pi / omega_K)
};
CanonicalPair canonical_associate(const Element& x);  // throws ZeroInput

std::complex<double> embed(const Element& a);

// "u+v*w" syntax, e.g. "3+2*w", "1-1*w", "5", "2*w".
std::string format_element(const Element& a);
Element parse_element(const std::string& text, const Field& f);  // ConfigError

inline Element one(const Field& f) { return Element(1, 0, f); }

}  // namespace qm
