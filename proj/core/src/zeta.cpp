#include "qm/zeta.hpp"

#include "qm/errors.hpp"
#include "qm/primes.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qm {

double dedekind_zeta(const Field& f, double s, double tolerance) {
  if (s <= 1.0) throw DomainError("dedekind_zeta: s must be > 1");
  if (tolerance <= 0.0) throw DomainError("dedekind_zeta: tolerance must be positive");

  constexpr i64 kPrimeCap = 500'000'000;
  long double cs_bound = 1.0L / (1.0L - std::pow(2.0L, (long double)-s));
  // The truncated product never drops below 1, so the tail bound at the cap
  // already decides unreachable tolerances without any sieving.
  {
    long double integral = std::pow((long double)kPrimeCap, (long double)(1.0 - s)) /
                           (long double)(s - 1.0);
    if (std::expm1(2.0L * cs_bound * integral) >= (long double)tolerance / 2)
      throw ToleranceUnreachable("dedekind_zeta: tolerance needs primes beyond cap");
  }
  long double prod = 1.0L;
  i64 done = 1;  // primes <= done already multiplied in
  for (i64 cutoff = 1 << 16;; cutoff *= 2) {
    if (cutoff > kPrimeCap)
      throw ToleranceUnreachable("dedekind_zeta: tolerance needs primes beyond cap");
    auto primes = prime_snapshot(cutoff);
    for (i64 p : *primes) {
      if (p <= done || p > cutoff) continue;
      long double ps = std::pow((long double)p, (long double)-s);
      prod /= (1.0L - ps);
      int chi = kronecker(f.disc, p);
      if (chi == 1)
        prod /= (1.0L - ps);
      else if (chi == -1)
        prod /= (1.0L + ps);
    }
    done = cutoff;
    // Tail of log zeta_K over p > cutoff: at most 2 sum p^-s / (1 - 2^-s),
    // and sum_{n > P} n^-s <= P^{1-s} / (s - 1) by integral comparison.
    long double integral = std::pow((long double)cutoff, (long double)(1.0 - s)) /
                           (long double)(s - 1.0);
    long double bound = std::expm1(2.0L * cs_bound * integral);
    if (bound * prod < (long double)tolerance / 2) return double(prod);
  }
}

double zeta_ideal_partial_sum(const Field& f, double s, i64 max_norm) {
  if (s <= 1.0) throw DomainError("zeta_ideal_partial_sum: s must be > 1");
  // Sum over all nonzero lattice points of norm <= max_norm equals
  // omega_K times the sum over ideals.
  long double total = 0.0L, comp = 0.0L;
  i64 absD = f.abs_disc();
  i64 vmax = isqrt64(4 * max_norm / absD) + 1;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i64 delta = 4 * max_norm - absD * v * v;
    if (delta < 0) continue;
    i64 sq = isqrt64(delta);
    i64 lo = ceil_div(-sq - f.B * v, 2), hi = floor_div(sq - f.B * v, 2);
    for (i64 u = lo; u <= hi; ++u) {
      i128 n = i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v;
      if (n == 0 || n > max_norm) continue;
      long double term = std::pow((long double)(i64)n, (long double)-s);
      long double y = term - comp;
      long double t = total + y;
      comp = (t - total) - y;
      total = t;
    }
  }
  return double(total / f.unit_count);
}

const ZetaTriple& zeta_triple(const Field& f) {
  static std::mutex mu;
  static std::map<int, ZetaTriple> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(f.disc);
  if (it == cache.end()) {
    ZetaTriple t{};
    t.z2_tol = 1e-6;
    t.z52_tol = 1e-6;
    t.z32_tol = 1e-2;
    t.z2 = dedekind_zeta(f, 2.0, t.z2_tol);
    t.z52 = dedekind_zeta(f, 2.5, t.z52_tol);
    t.z32 = dedekind_zeta(f, 1.5, t.z32_tol);
    it = cache.emplace(f.disc, t).first;
  }
  return it->second;
}

}  // namespace qm
