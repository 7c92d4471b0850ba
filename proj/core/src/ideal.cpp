#include "qm/ideal.hpp"

#include <algorithm>

namespace qm {

namespace {

Ideal from_factors(const Field& f, std::vector<std::pair<PrimeElement, int>> factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.first.nrm != b.first.nrm) return a.first.nrm < b.first.nrm;
    if (a.first.generator.u != b.first.generator.u)
      return a.first.generator.u < b.first.generator.u;
    return a.first.generator.v < b.first.generator.v;
  });
  Element prod = one(f);
  i128 nrm = 1;
  for (const auto& [pe, e] : factors) {
    for (int i = 0; i < e; ++i) {
      prod = prod * pe.generator;
      nrm *= pe.nrm;
    }
  }
  Ideal out;
  out.gen = canonical_associate(prod).canonical;
  out.fact.unit = one(f);
  out.fact.factors = std::move(factors);
  out.nrm = narrow_i64(nrm);
  return out;
}

}  // namespace

Ideal make_ideal(const Element& x) {
  if (x.is_zero()) throw ZeroInput("make_ideal(0)");
  Ideal out;
  out.gen = canonical_associate(x).canonical;
  out.fact = factor(out.gen);
  out.nrm = norm(out.gen);
  return out;
}

Ideal unit_ideal(const Field& f) {
  Ideal out;
  out.gen = one(f);
  out.fact.unit = one(f);
  out.nrm = 1;
  return out;
}

const Field& field_of(const Ideal& a) { return *a.gen.fld; }

bool is_unit_ideal(const Ideal& a) { return a.nrm == 1; }

bool same_ideal(const Ideal& a, const Ideal& b) { return a.gen == b.gen; }

int valuation(const Ideal& a, const PrimeElement& p) {
  for (const auto& [pe, e] : a.fact.factors)
    if (pe == p) return e;
  return 0;
}

bool ideal_divides(const Ideal& a, const Ideal& b) {
  for (const auto& [pe, e] : a.fact.factors)
    if (valuation(b, pe) < e) return false;
  return true;
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  const Field& f = same_field(a.gen, b.gen);
  auto factors = a.fact.factors;
  for (const auto& [pe, e] : b.fact.factors) {
    bool merged = false;
    for (auto& [qe, eq] : factors)
      if (qe == pe) {
        eq += e;
        merged = true;
        break;
      }
    if (!merged) factors.emplace_back(pe, e);
  }
  return from_factors(f, std::move(factors));
}

Ideal ideal_gcd(const Ideal& a, const Ideal& b) {
  const Field& f = same_field(a.gen, b.gen);
  std::vector<std::pair<PrimeElement, int>> factors;
  for (const auto& [pe, e] : a.fact.factors) {
    int eb = valuation(b, pe);
    if (eb > 0) factors.emplace_back(pe, std::min(e, eb));
  }
  return from_factors(f, std::move(factors));
}

Ideal ideal_lcm(const Ideal& a, const Ideal& b) {
  const Field& f = same_field(a.gen, b.gen);
  auto factors = a.fact.factors;
  for (const auto& [pe, e] : b.fact.factors) {
    bool merged = false;
    for (auto& [qe, eq] : factors)
      if (qe == pe) {
        eq = std::max(eq, e);
        merged = true;
        break;
      }
    if (!merged) factors.emplace_back(pe, e);
  }
  return from_factors(f, std::move(factors));
}

Ideal ideal_div(const Ideal& a, const Ideal& b) {
  const Field& f = same_field(a.gen, b.gen);
  std::vector<std::pair<PrimeElement, int>> factors;
  for (const auto& [pe, e] : a.fact.factors) {
    int eb = valuation(b, pe);
    if (eb > e) throw NotDivisible("ideal_div: not a divisor");
    if (e - eb > 0) factors.emplace_back(pe, e - eb);
  }
  for (const auto& [pe, e] : b.fact.factors)
    if (valuation(a, pe) < e) throw NotDivisible("ideal_div: not a divisor");
  return from_factors(f, std::move(factors));
}

i64 euler_phi(const Ideal& a) {
  i128 phi = 1;
  for (const auto& [pe, e] : a.fact.factors) {
    i128 pk = 1;
    for (int i = 0; i < e - 1; ++i) pk *= pe.nrm;
    phi *= pk * (pe.nrm - 1);
  }
  return narrow_i64(phi);
}

int moebius(const Ideal& a) {
  int m = 1;
  for (const auto& [pe, e] : a.fact.factors) {
    (void)pe;
    if (e >= 2) return 0;
    m = -m;
  }
  return m;
}

std::vector<Ideal> divisors(const Ideal& a) {
  const Field& f = field_of(a);
  std::vector<Ideal> out;
  std::vector<std::pair<PrimeElement, int>> current;
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (idx == a.fact.factors.size()) {
      out.push_back(from_factors(f, current));
      return;
    }
    const auto& [pe, e] = a.fact.factors[idx];
    walk(idx + 1);
    for (int k = 1; k <= e; ++k) {
      current.emplace_back(pe, k);
      walk(idx + 1);
      current.pop_back();
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    if (x.nrm != y.nrm) return x.nrm < y.nrm;
    if (x.gen.u != y.gen.u) return x.gen.u < y.gen.u;
    return x.gen.v < y.gen.v;
  });
  return out;
}

Rat congruence_factor(const Ideal& m) {
  Rat c(m.nrm);
  for (const auto& [pe, e] : m.fact.factors) {
    (void)e;
    c = c * Rat(pe.nrm + 1, pe.nrm);
  }
  return c;
}

}  // namespace qm
