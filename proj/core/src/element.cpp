#include "qm/element.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace qm {

const Field& same_field(const Element& a, const Element& b) {
  if (!a.fld || !b.fld || a.fld->disc != b.fld->disc)
    throw FieldMismatch("elements belong to different fields");
  return *a.fld;
}

Element operator+(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return Element(narrow_i64(i128(a.u) + b.u), narrow_i64(i128(a.v) + b.v), f);
}

Element operator-(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return Element(narrow_i64(i128(a.u) - b.u), narrow_i64(i128(a.v) - b.v), f);
}

Element operator*(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  // omega^2 = B omega - C
  i128 uu = i128(a.u) * b.u - i128(f.C) * a.v * b.v;
  i128 vv = i128(a.u) * b.v + i128(a.v) * b.u + i128(f.B) * a.v * b.v;
  return Element(narrow_i64(uu), narrow_i64(vv), f);
}

Element operator-(const Element& a) {
  return Element(narrow_i64(-i128(a.u)), narrow_i64(-i128(a.v)), *a.fld);
}

Element conj(const Element& a) {
  // conj(omega) = B - omega
  return Element(narrow_i64(i128(a.u) + i128(a.fld->B) * a.v), narrow_i64(-i128(a.v)),
                 *a.fld);
}

i128 norm128(const Element& a) {
  const Field& f = *a.fld;
  return i128(a.u) * a.u + i128(f.B) * a.u * a.v + i128(f.C) * a.v * a.v;
}

i64 norm(const Element& a) { return narrow_i64(norm128(a)); }

std::optional<Element> try_exact_div(const Element& x, const Element& y) {
  const Field& f = same_field(x, y);
  if (y.is_zero()) return std::nullopt;
  // x / y = x * conj(y) / N(y)
  i128 cu = i128(y.u) + i128(f.B) * y.v;
  i128 cv = -i128(y.v);
  i128 tu = i128(x.u) * cu - i128(f.C) * x.v * cv;
  i128 tv = i128(x.u) * cv + i128(x.v) * cu + i128(f.B) * x.v * cv;
  i128 n = norm128(y);
  if (tu % n != 0 || tv % n != 0) return std::nullopt;
  return Element(narrow_i64(tu / n), narrow_i64(tv / n), f);
}

Element exact_div(const Element& x, const Element& y) {
  if (y.is_zero()) throw ZeroInput("exact division by zero");
  auto q = try_exact_div(x, y);
  if (!q) throw NotDivisible(format_element(y) + " does not divide " + format_element(x));
  return *q;
}

bool divides(const Element& y, const Element& x) {
  return try_exact_div(x, y).has_value();
}

std::vector<Element> units(const Field& f) {
  // Solve u^2 + B u v + C v^2 = 1; positive definiteness bounds |v| by 1.
  std::vector<Element> out;
  for (i64 v = -1; v <= 1; ++v) {
    i64 delta = i64(f.disc) * v * v + 4;
    if (delta < 0) continue;
    i64 s = isqrt64(delta);
    if (s * s != delta) continue;
    for (i64 sign : {+1, -1}) {
      i64 t = -f.B * v + sign * s;
      if (t % 2 != 0) continue;
      Element e(t / 2, v, f);
      if (norm128(e) == 1 && std::find(out.begin(), out.end(), e) == out.end())
        out.push_back(e);
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
    double ta = std::atan2(a.v * f.omega_im(), a.u + a.v * f.omega_re());
    double tb = std::atan2(b.v * f.omega_im(), b.u + b.v * f.omega_re());
    if (ta < 0) ta += 2 * 3.14159265358979323846;
    if (tb < 0) tb += 2 * 3.14159265358979323846;
    return ta < tb;
  });
  return out;
}

bool is_canonical_associate(const Element& x) {
  if (x.is_zero()) return false;
  if (x.fld->unit_count == 2) return x.v > 0 || (x.v == 0 && x.u > 0);
  // omega_K = 4: window [0, pi/2); omega_K = 6: window [0, pi/3).
  // Both are exactly the cone u > 0, v >= 0 in {1, omega} coordinates.
  return x.u > 0 && x.v >= 0;
}

CanonicalPair canonical_associate(const Element& x) {
  if (x.is_zero()) throw ZeroInput("canonical associate of zero");
  for (const Element& e : units(*x.fld)) {
    Element c = x * e;
    if (is_canonical_associate(c)) return CanonicalPair{conj(e), c};
  }
  throw Error("no canonical associate found");  // unreachable
}

std::complex<double> embed(const Element& a) {
  const Field& f = *a.fld;
  return {a.u + a.v * f.omega_re(), a.v * f.omega_im()};
}

std::string format_element(const Element& a) {
  if (a.v == 0) return std::to_string(a.u);
  std::string tail = std::to_string(a.v < 0 ? -a.v : a.v) + "*w";
  if (a.u == 0) return (a.v < 0 ? "-" : "") + tail;
  return std::to_string(a.u) + (a.v < 0 ? "-" : "+") + tail;
}

namespace {

bool parse_i64(const std::string& s, std::size_t& pos, i64& out) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    pos = start;
    return false;
  }
  i64 val = 0;
  int digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (++digits > 18) throw ConfigError("integer literal too large");
    val = val * 10 + (s[pos] - '0');
    ++pos;
  }
  out = neg ? -val : val;
  return true;
}

}  // namespace

Element parse_element(const std::string& text, const Field& f) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty element literal");

  auto fail = [&]() -> Element {
    throw ConfigError("cannot parse element '" + text + "' (expected u+v*w)");
  };

  std::size_t pos = 0;
  i64 first = 0;
  bool have_first = parse_i64(s, pos, first);

  // Bare omega term: "w", "-w", "3*w", "-2*w".
  if (pos < s.size() && s[pos] == '*') {
    ++pos;
    if (pos >= s.size() || s[pos] != 'w') return fail();
    ++pos;
    if (pos != s.size() || !have_first) return fail();
    return Element(0, first, f);
  }
  if (!have_first && (s[pos] == 'w' || (s[pos] == '-' && pos + 1 < s.size() && s[pos + 1] == 'w'))) {
    i64 sign = 1;
    if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    ++pos;  // 'w'
    if (pos != s.size()) return fail();
    return Element(0, sign, f);
  }
  if (!have_first) return fail();
  if (pos == s.size()) return Element(first, 0, f);

  // "u+v*w" / "u-v*w" / "u+w".
  if (s[pos] != '+' && s[pos] != '-') return fail();
  i64 second = 0;
  if (!parse_i64(s, pos, second)) {
    second = s[pos] == '-' ? -1 : 1;
    ++pos;
    if (pos >= s.size() || s[pos] != 'w') return fail();
    ++pos;
    if (pos != s.size()) return fail();
    return Element(first, second, f);
  }
  if (pos < s.size() && s[pos] == '*') {
    ++pos;
    if (pos >= s.size() || s[pos] != 'w') return fail();
    ++pos;
  } else if (pos < s.size() && s[pos] == 'w') {
    ++pos;
  } else {
    return fail();
  }
  if (pos != s.size()) return fail();
  return Element(first, second, f);
}

}  // namespace qm
