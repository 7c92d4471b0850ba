#include "qm/sector.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qm {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kBoundaryGuard = 1e-12L;

int sign_of(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// sign(s1 * sqrt(m1) - s2 * sqrt(m2)), m1, m2 >= 0.
int cmp_signed_sqrt(int s1, i128 m1, int s2, i128 m2) {
  if (m1 == 0) s1 = 0;
  if (m2 == 0) s2 = 0;
  if (s1 != s2) return s1 > s2 ? 1 : -1;
  if (s1 == 0) return 0;
  if (m1 == m2) return 0;
  int mag = m1 > m2 ? 1 : -1;
  return s1 > 0 ? mag : -mag;
}

}  // namespace

Angle angle_pi(long num, long den) {
  if (den <= 0) throw ConfigError("angle: nonpositive denominator");
  Angle a;
  a.symbolic = true;
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  a.num = num / g;
  a.den = den / g;
  a.radians = double(kPi * a.num / a.den);
  return a;
}

Angle angle_radians(double radians) {
  Angle a;
  a.symbolic = false;
  a.radians = radians;
  return a;
}

bool is_full_circle(const Angle& theta) {
  return theta.symbolic && theta.num == 2 && theta.den == 1;
}

double angle_value(const Angle& theta) {
  return theta.symbolic ? double(kPi * theta.num / theta.den) : theta.radians;
}

namespace {

void check_theta(const Angle& theta) {
  if (theta.symbolic) {
    if (theta.num <= 0 || theta.num > 2 * theta.den)
      throw ConfigError("theta must lie in ]0, 2*pi]");
  } else {
    if (!(theta.radians > 0.0) || theta.radians > 2 * double(kPi) + 1e-12)
      throw ConfigError("theta must lie in ]0, 2*pi]");
  }
}

// Exact (cos^2, sin^2) with signs for phi = (a/b)*pi when tan^2 is rational
// (b in {1, 2, 3, 4, 6} after reduction).
bool fill_exact_dir(SectorEnum& e, long num, long den) {
  long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num <= 0 || den <= 0 || num > den) return false;
  auto set = [&](int cs, int ss, i64 c2n, i64 c2d, i64 s2n, i64 s2d) {
    e.cos_sgn = cs;
    e.sin_sgn = ss;
    e.cos2_num = c2n;
    e.cos2_den = c2d;
    e.sin2_num = s2n;
    e.sin2_den = s2d;
    return true;
  };
  switch (den) {
    case 1: return set(-1, 0, 1, 1, 0, 1);                       // pi
    case 2: return set(0, 1, 0, 1, 1, 1);                        // pi/2
    case 3: return set(num == 1 ? 1 : -1, 1, 1, 4, 3, 4);        // pi/3, 2pi/3
    case 4: return set(num == 1 ? 1 : -1, 1, 1, 2, 1, 2);        // pi/4, 3pi/4
    case 6: return set(num == 1 ? 1 : -1, 1, 3, 4, 1, 4);        // pi/6, 5pi/6
    default: return false;
  }
}

void fill_angle_data(SectorEnum& e, const Angle& theta) {
  e.ang_full = is_full_circle(theta);
  e.ang_exact = false;
  e.ang_half = 0.0L;
  if (e.ang_full) return;
  if (theta.symbolic) {
    e.ang_half = kPi * theta.num / (2.0L * theta.den);
    e.ang_exact = fill_exact_dir(e, theta.num, 2 * theta.den);
  } else {
    e.ang_half = (long double)theta.radians / 2.0L;
  }
}

// sign of sin(phi)*x -/+ cos(phi)*y at the exact ratio w: scaled by 2 this
// compares sin(phi)*X against +/-cos(phi)*q*sqrt|D| with X = 2u + Bv, q = v.
int boundary_sign_exact(const SectorEnum& e, const Element& w, bool upper) {
  const Field& f = *e.fld;
  i128 X = 2 * i128(w.u) + i128(f.B) * w.v;
  i128 q = w.v;
  int s1 = e.sin_sgn * sign_of(X);
  int s2 = (upper ? e.cos_sgn : -e.cos_sgn) * sign_of(q);
  i128 m1 = i128(e.sin2_num) * X * X * e.cos2_den;
  i128 m2 = i128(e.cos2_num) * f.abs_disc() * q * q * e.sin2_den;
  return cmp_signed_sqrt(s1, m1, s2, m2);
}

bool window_exact(const SectorEnum& e, const Element& w) {
  if (e.ang_full) return true;
  const Field& f = *e.fld;
  long double x = 2.0L * w.u + (long double)f.B * w.v;
  long double y = (long double)w.v * std::sqrt((long double)f.abs_disc());
  long double ang = std::atan2(y, x);
  if (std::fabs(ang - e.ang_half) <= kBoundaryGuard) {
    // On the upper boundary include; decided by sign of sin(phi - t).
    if (e.ang_exact) return boundary_sign_exact(e, w, /*upper=*/true) >= 0;
    return std::sin(e.ang_half) * x - std::cos(e.ang_half) * y >= 0;
  }
  if (std::fabs(ang + e.ang_half) <= kBoundaryGuard) {
    // On the lower boundary exclude; sign of sin(t + phi).
    if (e.ang_exact) return boundary_sign_exact(e, w, /*upper=*/false) > 0;
    return std::sin(e.ang_half) * x + std::cos(e.ang_half) * y > 0;
  }
  return ang > -e.ang_half && ang <= e.ang_half;
}

bool window_free(const SectorEnum& e, std::complex<long double> w) {
  if (e.ang_full) return true;
  long double ang = std::atan2(w.imag(), w.real());
  if (std::fabs(ang - e.ang_half) <= kBoundaryGuard)
    return std::sin(e.ang_half) * w.real() - std::cos(e.ang_half) * w.imag() >= 0;
  if (std::fabs(ang + e.ang_half) <= kBoundaryGuard)
    return std::sin(e.ang_half) * w.real() + std::cos(e.ang_half) * w.imag() > 0;
  return ang > -e.ang_half && ang <= e.ang_half;
}

}  // namespace

Sector make_sector(const Field& f, const Element& z, Angle theta, double radius) {
  if (z.is_zero()) throw ConfigError("sector anchor must be nonzero");
  if (z.fld->disc != f.disc) throw FieldMismatch("sector anchor from wrong field");
  check_theta(theta);
  if (radius < 0) throw ConfigError("sector radius must be >= 0");
  Sector s;
  s.fld = &f;
  s.exact_anchor = true;
  s.z = z;
  s.z_dir = embed(z);
  s.theta = theta;
  s.radius = radius;
  return s;
}

Sector make_sector(const Field& f, std::complex<double> z, Angle theta, double radius) {
  if (z == std::complex<double>(0.0, 0.0)) throw ConfigError("sector anchor must be nonzero");
  check_theta(theta);
  if (radius < 0) throw ConfigError("sector radius must be >= 0");
  Sector s;
  s.fld = &f;
  s.exact_anchor = false;
  s.z_dir = z;
  s.theta = theta;
  s.radius = radius;
  return s;
}

SectorEnum make_enum(const Ideal& m, const Sector& s) {
  const Field& f = *s.fld;
  if (field_of(m).disc != f.disc) throw FieldMismatch("enumerate: wrong field");
  SectorEnum e{};
  e.fld = &f;
  e.gen = m.gen;
  e.gen_norm = m.nrm;
  e.exact = s.exact_anchor;
  if (s.exact_anchor) e.w_mult = conj(s.z) * m.gen;
  e.w_dir = embed(m.gen) * std::conj(s.z_dir);
  e.r2 = (long double)s.radius * s.radius;
  fill_angle_data(e, s.theta);
  long double r2_pulled = e.r2 / e.gen_norm;
  long double h = std::sqrt((long double)f.abs_disc()) / 2.0L;
  i64 vmax = r2_pulled > 0 ? i64(std::sqrt(r2_pulled) / h) + 2 : 0;
  e.v_min = -vmax;
  e.v_max = vmax;
  return e;
}

SectorEnum::URange SectorEnum::row(i64 v) const {
  const Field& f = *fld;
  long double r2_pulled = r2 / gen_norm;
  long double h2 = (long double)f.abs_disc() / 4.0L;
  long double rad = r2_pulled - h2 * v * v;
  if (rad < 0) return {1, 0};
  long double s = std::sqrt(rad);
  long double c = -(long double)f.B * v / 2.0L;
  return {i64(std::floor(c - s)) - 1, i64(std::ceil(c + s)) + 1};
}

bool SectorEnum::accept(i64 u, i64 v) const {
  const Field& f = *fld;
  i128 n = i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v;
  if (n == 0) return false;
  if ((long double)n * gen_norm > r2) return false;
  if (exact) return window_exact(*this, Element(u, v, f) * w_mult);
  std::complex<long double> d((long double)u + (long double)v * f.omega_re(),
                              (long double)v * f.omega_im());
  std::complex<long double> wc((long double)w_dir.real(), (long double)w_dir.imag());
  return window_free(*this, d * wc);
}

void enumerate(const Ideal& m, const Sector& s,
               const std::function<void(const Element&)>& fn) {
  SectorEnum e = make_enum(m, s);
  for (i64 v = e.v_min; v <= e.v_max; ++v) {
    auto [lo, hi] = e.row(v);
    for (i64 u = lo; u <= hi; ++u)
      if (e.accept(u, v)) fn(e.element(u, v));
  }
}

std::vector<Element> enumerate_vec(const Ideal& m, const Sector& s) {
  std::vector<Element> out;
  enumerate(m, s, [&](const Element& a) { out.push_back(a); });
  return out;
}

bool contains(const Sector& s, const Element& a) {
  if (a.fld->disc != s.fld->disc) throw FieldMismatch("contains: wrong field");
  if (a.is_zero()) return false;
  if ((long double)norm128(a) > (long double)s.radius * s.radius) return false;
  SectorEnum e = make_enum(unit_ideal(*s.fld), s);
  if (e.exact) return window_exact(e, a * conj(s.z));
  std::complex<long double> w(embed(a).real(), embed(a).imag());
  std::complex<long double> zc((long double)s.z_dir.real(), (long double)s.z_dir.imag());
  return window_free(e, w * std::conj(zc));
}

namespace {

// Per-row closed forms over the full disk norm <= bound (origin included).
i64 disk_count(const Field& f, i64 bound) {
  if (bound < 0) return 0;
  i64 absD = f.abs_disc();
  i64 total = 0;
  i64 vmax = isqrt64(4 * bound / absD) + 1;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i64 delta = 4 * bound - absD * v * v;
    if (delta < 0) continue;
    i64 s = isqrt64(delta);
    i64 lo = ceil_div(-s - f.B * v, 2), hi = floor_div(s - f.B * v, 2);
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

i128 disk_norm_sum(const Field& f, i64 bound) {
  if (bound < 0) return 0;
  i64 absD = f.abs_disc();
  i128 total = 0;
  auto s0 = [](i64 n) -> i128 {  // sum of u^2 over [0, n]
    if (n < 0) return 0;
    return i128(n) * (n + 1) * (2 * i128(n) + 1) / 6;
  };
  auto sum2 = [&](i64 a, i64 b) -> i128 {
    if (a > b) return 0;
    if (a >= 0) return s0(b) - s0(a - 1);
    if (b < 0) return s0(-a) - s0(-b - 1);
    return s0(-a) + s0(b);
  };
  auto sum1 = [](i64 a, i64 b) -> i128 {
    if (a > b) return 0;
    return (i128(a) + b) * (b - a + 1) / 2;
  };
  i64 vmax = isqrt64(4 * bound / absD) + 1;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i64 delta = 4 * bound - absD * v * v;
    if (delta < 0) continue;
    i64 s = isqrt64(delta);
    i64 lo = ceil_div(-s - f.B * v, 2), hi = floor_div(s - f.B * v, 2);
    if (hi < lo) continue;
    i128 cnt = hi - lo + 1;
    total += sum2(lo, hi) + i128(f.B) * v * sum1(lo, hi) + i128(f.C) * v * v * cnt;
  }
  return total;
}

i64 radial_bound(double radius) {
  long double r2 = (long double)radius * radius;
  i64 bound = i64(r2);
  while (bound > 0 && (long double)bound > r2) --bound;
  while ((long double)(bound + 1) <= r2) ++bound;
  return bound;
}

}  // namespace

i64 count_points(const Sector& s) {
  if (s.radius <= 0) return 0;
  if (is_full_circle(s.theta)) return disk_count(*s.fld, radial_bound(s.radius)) - 1;
  i64 n = 0;
  enumerate(unit_ideal(*s.fld), s, [&](const Element&) { ++n; });
  return n;
}

double gauss_estimate(const Sector& s) {
  return angle_value(s.theta) * s.radius * s.radius / s.fld->sqrt_abs_disc();
}

i128 sum_norms_sector(const Sector& s) {
  if (s.radius <= 0) return 0;
  if (is_full_circle(s.theta)) return disk_norm_sum(*s.fld, radial_bound(s.radius));
  i128 total = 0;
  enumerate(unit_ideal(*s.fld), s, [&](const Element& a) { total += norm128(a); });
  return total;
}

std::pair<double, double> covol_diam(const Ideal& m) {
  const Field& f = field_of(m);
  double covol = double(m.nrm) * f.sqrt_abs_disc() / 2.0;
  // Longer diagonal of the parallelogram spanned by gen and gen*omega:
  // |gen| * |1 + omega| with |1 + omega|^2 = 1 + B + C.
  double diam = std::sqrt(double(m.nrm) * (1 + f.B + f.C));
  return {covol, diam};
}

}  // namespace qm
