#include "qm/phi_table.hpp"

#include <algorithm>
#include <numeric>

namespace qm {

SpfTable::SpfTable(i64 limit) {
  spf.assign(std::size_t(limit) + 1, 0);
  std::vector<int32_t> primes;
  for (i64 i = 2; i <= limit; ++i) {
    if (spf[std::size_t(i)] == 0) {
      spf[std::size_t(i)] = int32_t(i);
      primes.push_back(int32_t(i));
    }
    for (int32_t p : primes) {
      if (p > spf[std::size_t(i)] || i * p > limit) break;
      spf[std::size_t(i * p)] = p;
    }
  }
}

PrimeCache::PrimeCache(const Field& f, i64 bound) : fld(&f), max_p(bound) {
  entries.assign(std::size_t(bound) + 1, Entry{});
  auto primes = prime_snapshot(bound);
  for (i64 p : *primes) {
    if (p > bound) break;
    Entry& e = entries[std::size_t(p)];
    int chi = kronecker(f.disc, p);
    if (chi == -1) {
      e.type = 1;
    } else {
      e.type = chi == 1 ? 0 : 2;
      auto above = primes_above_cached(f, p);
      e.gu = above[0].generator.u;
      e.gv = above[0].generator.v;
    }
  }
}

namespace {

// Does the cached prime above p divide (u, v)? Checks (u,v) * conj(pi) = 0
// mod p on both coordinates.
bool split_divides(const Field& f, i64 u, i64 v, i64 p, const PrimeCache::Entry& e) {
  i64 cu = (e.gu + f.B * e.gv) % p;
  i64 cv = (-e.gv) % p;
  i64 tu = (i128(u) * cu - i128(f.C) * v % p * cv) % p;
  i64 tv = (i128(u) * cv + i128(v) * cu + i128(f.B) * v % p * cv) % p;
  return tu % p == 0 && tv % p == 0;
}

int val_of(i64 n, i64 p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

i64 ipow(i64 p, int e) {
  i64 r = 1;
  while (e-- > 0) r = narrow_i64(i128(r) * p);
  return r;
}

}  // namespace

i64 phi_of_element(const Field& f, i64 u, i64 v, const SpfTable& spf,
                   const PrimeCache& cache) {
  i64 n = narrow_i64(i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v);
  if (n == 0) throw ZeroInput("phi_of_element(0)");
  i64 content = std::gcd(u < 0 ? -u : u, v < 0 ? -v : v);
  i128 phi = 1;
  while (n > 1) {
    i64 p;
    if (n <= spf.limit()) {
      p = spf.spf[std::size_t(n)];
    } else {
      // Slow path for norms beyond the table: trial division.
      p = 0;
      i64 r = isqrt64(n);
      auto primes = prime_snapshot(std::max<i64>(r, 2));
      for (i64 q : *primes) {
        if (q > r) break;
        if (n % q == 0) {
          p = q;
          break;
        }
      }
      if (p == 0) p = n;
    }
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const PrimeCache::Entry* entry = nullptr;
    PrimeCache::Entry fallback;
    if (p <= cache.max_p) {
      entry = &cache.at(p);
    } else {
      int chi = kronecker(f.disc, p);
      fallback.type = chi == 1 ? 0 : chi == -1 ? 1 : 2;
      if (fallback.type != 1) {
        auto above = primes_above_cached(f, p);
        fallback.gu = above[0].generator.u;
        fallback.gv = above[0].generator.v;
      }
      entry = &fallback;
    }
    switch (entry->type) {
      case 1: {  // inert; valuation of the element is e/2
        int k = e / 2;
        i64 q = narrow_i64(i128(p) * p);
        phi *= i128(ipow(q, k - 1)) * (q - 1);
        break;
      }
      case 2: {  // ramified
        phi *= i128(ipow(p, e - 1)) * (p - 1);
        break;
      }
      default: {  // split: the content carries the shared valuation
        int j = val_of(content, p);
        int rest = e - 2 * j;
        int va = j, vb = j;
        if (rest > 0) {
          // The primitive part is divisible by exactly one conjugate.
          i64 pj = ipow(p, j);
          if (split_divides(f, u / pj, v / pj, p, *entry))
            va += rest;
          else
            vb += rest;
        }
        if (va > 0) phi *= i128(ipow(p, va - 1)) * (p - 1);
        if (vb > 0) phi *= i128(ipow(p, vb - 1)) * (p - 1);
        break;
      }
    }
  }
  return narrow_i64(phi);
}

PhiBox::PhiBox(const Field& f, i64 bnd, const SpfTable& spf, const PrimeCache& cache)
    : fld(&f), bound(bnd) {
  i64 absD = f.abs_disc();
  i64 vmax = isqrt64(4 * bound / absD) + 1;
  i64 umax = isqrt64(bound) + (f.B ? (vmax + 1) / 2 : 0) + 1;
  u_min = -umax;
  u_max = umax;
  v_min = -vmax;
  v_max = vmax;
  stride = std::size_t(u_max - u_min + 1);
  phi.assign(stride * std::size_t(v_max - v_min + 1), 0);

  auto us = units(f);
  auto put = [&](i64 u, i64 v, i64 value) {
    phi[std::size_t(v - v_min) * stride + std::size_t(u - u_min)] = value;
  };
  for (i64 v = v_min; v <= v_max; ++v) {
    for (i64 u = u_min; u <= u_max; ++u) {
      i128 n = i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v;
      if (n == 0 || n > bound) continue;
      Element x(u, v, f);
      if (!is_canonical_associate(x)) continue;
      i64 value = phi_of_element(f, u, v, spf, cache);
      for (const Element& e : us) {
        Element y = x * e;
        put(y.u, y.v, value);
      }
    }
  }
}

PrimeIdealTable::PrimeIdealTable(const Field& f, i64 max_norm) : fld(&f) {
  auto primes = prime_snapshot(max_norm);
  for (i64 p : *primes) {
    if (p > max_norm) break;
    int chi = kronecker(f.disc, p);
    if (chi == -1) {
      if (i128(p) * p <= max_norm)
        list.push_back({p, 0, narrow_i64(i128(p) * p), p, 1});
      continue;
    }
    for (const PrimeElement& pe : primes_above_cached(f, p))
      list.push_back({pe.generator.u, pe.generator.v, pe.nrm, p,
                      int8_t(chi == 1 ? 0 : 2)});
  }
  std::sort(list.begin(), list.end(), [](const P& a, const P& b) {
    if (a.nrm != b.nrm) return a.nrm < b.nrm;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  for (int32_t i = 0; i < int32_t(list.size()); ++i) {
    auto [it, fresh] = ids_of_p.try_emplace(list[i].p, std::make_pair(i, int32_t(-1)));
    if (!fresh) it->second.second = i;
  }
}

CanonicalList::CanonicalList(const Field& f, i64 bound, const SpfTable& spf,
                             const PrimeCache& cache, const PrimeIdealTable& table) {
  i64 absD = f.abs_disc();
  i64 vmax = isqrt64(4 * bound / absD) + 1;
  struct Raw {
    i64 u, v, nrm;
    std::vector<FactorTerm> fact;
    int8_t mu;
  };
  std::vector<Raw> raws;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i64 delta = 4 * bound - absD * v * v;
    if (delta < 0) continue;
    i64 s = isqrt64(delta);
    for (i64 u = ceil_div(-s - f.B * v, 2); u <= floor_div(s - f.B * v, 2); ++u) {
      i128 n128 = i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v;
      if (n128 == 0 || n128 > bound) continue;
      Element x(u, v, f);
      if (!is_canonical_associate(x)) continue;
      Raw raw;
      raw.u = u;
      raw.v = v;
      raw.nrm = i64(n128);
      raw.mu = 1;
      i64 n = raw.nrm;
      i64 content = std::gcd(u < 0 ? -u : u, v < 0 ? -v : v);
      int parity = 0;
      bool squarefree = true;
      while (n > 1) {
        i64 p = spf.spf[std::size_t(n)];
        int e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        const auto& entry = cache.at(p);
        auto ids = table.ids_of_p.at(p);
        switch (entry.type) {
          case 1: {  // inert
            int k = e / 2;
            raw.fact.push_back({ids.first, k});
            parity += 1;
            if (k > 1) squarefree = false;
            break;
          }
          case 2: {  // ramified
            raw.fact.push_back({ids.first, e});
            parity += 1;
            if (e > 1) squarefree = false;
            break;
          }
          default: {  // split
            int j = val_of(content, p);
            int rest = e - 2 * j;
            int va = j, vb = j;
            if (rest > 0) {
              i64 pj = ipow(p, j);
              if (split_divides(f, u / pj, v / pj, p, entry))
                va += rest;
              else
                vb += rest;
            }
            // Which table id matches the cached generator?
            int32_t id_a = ids.first, id_b = ids.second;
            if (table.list[std::size_t(id_a)].u != entry.gu ||
                table.list[std::size_t(id_a)].v != entry.gv)
              std::swap(id_a, id_b);
            if (va > 0) {
              raw.fact.push_back({id_a, va});
              parity += 1;
              if (va > 1) squarefree = false;
            }
            if (vb > 0) {
              raw.fact.push_back({id_b, vb});
              parity += 1;
              if (vb > 1) squarefree = false;
            }
            break;
          }
        }
      }
      raw.mu = squarefree ? int8_t(parity % 2 == 0 ? 1 : -1) : int8_t(0);
      std::sort(raw.fact.begin(), raw.fact.end(),
                [](const FactorTerm& a, const FactorTerm& b) { return a.id < b.id; });
      raws.push_back(std::move(raw));
    }
  }
  std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
    if (a.nrm != b.nrm) return a.nrm < b.nrm;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  entries.reserve(raws.size());
  for (const Raw& raw : raws) {
    Entry e;
    e.u = raw.u;
    e.v = raw.v;
    e.nrm = raw.nrm;
    e.begin = uint32_t(pool.size());
    e.len = uint32_t(raw.fact.size());
    e.mu = raw.mu;
    pool.insert(pool.end(), raw.fact.begin(), raw.fact.end());
    entries.push_back(e);
  }
}

std::vector<FactorTerm> ideal_in_table(const Ideal& a, const PrimeIdealTable& table) {
  std::vector<FactorTerm> out;
  for (const auto& [pe, e] : a.fact.factors) {
    auto it = table.ids_of_p.find(pe.residue_char);
    if (it == table.ids_of_p.end()) throw Error("ideal_in_table: prime beyond table");
    int32_t id = it->second.first;
    const auto& cand = table.list[std::size_t(id)];
    if (cand.u != pe.generator.u || cand.v != pe.generator.v) {
      id = it->second.second;
      if (id < 0) throw Error("ideal_in_table: prime not found");
      const auto& c2 = table.list[std::size_t(id)];
      if (c2.u != pe.generator.u || c2.v != pe.generator.v)
        throw Error("ideal_in_table: generator mismatch");
    }
    out.push_back({id, e});
  }
  std::sort(out.begin(), out.end(),
            [](const FactorTerm& a_, const FactorTerm& b_) { return a_.id < b_.id; });
  return out;
}

}  // namespace qm
