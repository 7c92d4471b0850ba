#include "qm/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qm {

namespace {

std::mutex g_cache_mu;
std::map<std::pair<int, i64>, std::vector<PrimeElement>> g_prime_cache;

struct RationalFactor {
  i64 p;
  int e;
};

std::vector<RationalFactor> factor_norm(i64 n) {
  std::vector<RationalFactor> out;
  i64 r = isqrt64(n);
  auto primes = prime_snapshot(std::max<i64>(r, 2));
  for (i64 p : *primes) {
    if (p * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace

const std::vector<PrimeElement>& primes_above_cached(const Field& f, i64 p) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  auto key = std::make_pair(f.disc, p);
  auto it = g_prime_cache.find(key);
  if (it == g_prime_cache.end()) it = g_prime_cache.emplace(key, primes_above(f, p)).first;
  return it->second;
}

Factorization factor(const Element& x) {
  if (x.is_zero()) throw ZeroInput("factor(0)");
  const Field& f = *x.fld;
  Factorization out;
  Element rest = x;
  for (const RationalFactor& rf : factor_norm(norm(x))) {
    auto above = primes_above_cached(f, rf.p);
    int remaining = rf.e;
    for (const PrimeElement& pe : above) {
      if (remaining == 0) break;
      int cnt = 0;
      while (true) {
        auto q = try_exact_div(rest, pe.generator);
        if (!q) break;
        rest = *q;
        ++cnt;
      }
      if (cnt > 0) out.factors.emplace_back(pe, cnt);
      remaining -= cnt * (pe.splitting == Splitting::inert ? 2 : 1);
    }
    if (remaining != 0) throw Error("factor: norm exponent mismatch at p=" + std::to_string(rf.p));
  }
  if (norm128(rest) != 1) throw Error("factor: non-unit residue left over");
  out.unit = rest;
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.nrm != b.first.nrm) return a.first.nrm < b.first.nrm;
    if (a.first.generator.u != b.first.generator.u)
      return a.first.generator.u < b.first.generator.u;
    return a.first.generator.v < b.first.generator.v;
  });
  return out;
}

Element factorization_value(const Factorization& fa) {
  Element acc = fa.unit;
  for (const auto& [pe, e] : fa.factors)
    for (int i = 0; i < e; ++i) acc = acc * pe.generator;
  return acc;
}

Element gcd(const Element& a, const Element& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0)");
  if (a.is_zero()) return canonical_associate(b).canonical;
  if (b.is_zero()) return canonical_associate(a).canonical;
  const Field& f = same_field(a, b);
  Factorization fa = factor(a), fb = factor(b);
  Element acc = one(f);
  for (const auto& [pe, ea] : fa.factors) {
    for (const auto& [qe, eb] : fb.factors) {
      if (pe == qe) {
        int e = std::min(ea, eb);
        for (int i = 0; i < e; ++i) acc = acc * pe.generator;
        break;
      }
    }
  }
  return canonical_associate(acc).canonical;
}

Element lcm(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroInput("lcm with zero argument");
  Element g = gcd(a, b);
  Element q = exact_div(b, g);
  return canonical_associate(a * q).canonical;
}

}  // namespace qm
