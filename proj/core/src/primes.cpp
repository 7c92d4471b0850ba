#include "qm/primes.hpp"

#include <algorithm>
#include <mutex>

namespace qm {

namespace {

i64 mulmod(i64 a, i64 b, i64 m) { return i64(i128(a) * b % m); }

i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<i64> sieve_up_to(i64 n) {
  std::vector<bool> comp(std::size_t(n) + 1, false);
  std::vector<i64> out;
  for (i64 i = 2; i <= n; ++i) {
    if (!comp[std::size_t(i)]) {
      out.push_back(i);
      for (i64 j = i * i; j <= n; j += i) comp[std::size_t(j)] = true;
    }
  }
  return out;
}

std::mutex g_prime_mu;
std::shared_ptr<const std::vector<i64>> g_primes;
i64 g_prime_limit = 0;

}  // namespace

std::shared_ptr<const std::vector<i64>> prime_snapshot(i64 limit) {
  std::lock_guard<std::mutex> lk(g_prime_mu);
  if (limit <= g_prime_limit && g_primes) return g_primes;
  i64 target = std::max<i64>(1 << 16, g_prime_limit * 2);
  while (target < limit) target *= 2;
  g_primes = std::make_shared<const std::vector<i64>>(sieve_up_to(target));
  g_prime_limit = target;
  return g_primes;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  i64 r = isqrt64(n);
  auto primes = prime_snapshot(std::max<i64>(r, 2));
  for (i64 p : *primes) {
    if (p > r) break;
    if (n % p == 0) return n == p;
  }
  return true;
}

int kronecker(i64 D, i64 p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    i64 m = ((D % 8) + 8) % 8;
    return (m == 1 || m == 7) ? 1 : -1;
  }
  i64 a = ((D % p) + p) % p;
  if (a == 0) return 0;
  i64 e = powmod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::vector<PrimeElement> primes_above(const Field& f, i64 p) {
  if (!is_prime(p)) throw NotPrime("primes_above: " + std::to_string(p) + " is not prime");
  int chi = kronecker(f.disc, p);

  if (chi == -1) {
    Element g(p, 0, f);
    return {PrimeElement{g, p, Splitting::inert, narrow_i64(i128(p) * p)}};
  }

  // Norm-form representations of p: positive definiteness bounds
  // |v| <= sqrt(4p / |D_K|); each v leaves a quadratic in u.
  std::vector<Element> reps;
  i64 vmax = isqrt64(4 * p / f.abs_disc()) + 1;
  for (i64 v = 0; v <= vmax; ++v) {
    i64 delta = i64(f.disc) * v * v + 4 * p;
    if (delta < 0) break;
    i64 s = isqrt64(delta);
    if (s * s != delta) continue;
    for (i64 sign : {+1, -1}) {
      i64 t = -f.B * v + sign * s;
      if (t % 2 != 0) continue;
      Element cand(t / 2, v, f);
      if (norm128(cand) != p) continue;
      Element canon = canonical_associate(cand).canonical;
      if (std::find(reps.begin(), reps.end(), canon) == reps.end()) reps.push_back(canon);
      if (s == 0) break;
    }
  }

  std::vector<PrimeElement> out;
  if (chi == 0) {
    if (reps.size() != 1)
      throw Error("ramified prime " + std::to_string(p) + ": unexpected representation count");
    out.push_back(PrimeElement{reps[0], p, Splitting::ramified, p});
  } else {
    if (reps.size() != 2)
      throw Error("split prime " + std::to_string(p) + ": unexpected representation count");
    for (const Element& g : reps) out.push_back(PrimeElement{g, p, Splitting::split, p});
    std::sort(out.begin(), out.end(), [](const PrimeElement& a, const PrimeElement& b) {
      if (a.nrm != b.nrm) return a.nrm < b.nrm;
      if (a.generator.u != b.generator.u) return a.generator.u < b.generator.u;
      return a.generator.v < b.generator.v;
    });
  }
  return out;
}

}  // namespace qm
