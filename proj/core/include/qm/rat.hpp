#pragma once

#include "qm/errors.hpp"
#include "qm/util.hpp"

#include <string>

namespace qm {

// Exact rational on __int128. Only used for quantities whose reduced
// numerator and denominator stay far below 2^127 (per-prime Euler factors,
// field constants); every multiply is overflow-checked.
struct Rat {
  i128 num{0};
  i128 den{1};

  Rat() = default;
  Rat(i128 n) : num(n), den(1) {}
  Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static i128 mul_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("Rat: 128-bit overflow");
    return r;
  }

  void reduce() {
    if (den == 0) throw Error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i128 g = gcd128(a.den, b.den);
    i128 bd = b.den / g;
    i128 n = mul_checked(a.num, bd);
    i128 m = mul_checked(b.num, a.den / g);
    return Rat(n + m, mul_checked(a.den, bd));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i128 g1 = gcd128(a.num, b.den);
    i128 g2 = gcd128(b.num, a.den);
    return Rat(mul_checked(a.num / g1, b.num / g2),
               mul_checked(a.den / g2, b.den / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error("Rat: division by zero");
    return a * Rat(b.den, b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return mul_checked(a.num, b.den) < mul_checked(b.num, a.den);
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }

  long double to_long_double() const {
    return (long double)num / (long double)den;
  }
  double to_double() const { return double(to_long_double()); }

  std::string str() const {
    if (den == 1) return to_string_i128(num);
    return to_string_i128(num) + "/" + to_string_i128(den);
  }
};

inline Rat rat(i64 n, i64 d = 1) { return Rat(i128(n), i128(d)); }

}  // namespace qm
