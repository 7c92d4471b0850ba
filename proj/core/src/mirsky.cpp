#include "qm/mirsky.hpp"

#include "qm/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qm {

ShiftIdeal make_shift(const Field& f, const Element& k) {
  ShiftIdeal h;
  h.fld = &f;
  h.k = k;
  h.zero = k.is_zero();
  if (!h.zero) h.ideal = make_ideal(k);
  return h;
}

namespace {

int val_h(const ShiftIdeal& h, const PrimeElement& p) {
  if (h.zero) return std::numeric_limits<int>::max() / 2;
  return valuation(*h.ideal, p);
}

bool divides_h(const Ideal& a, const ShiftIdeal& h) {
  if (h.zero) return true;
  return ideal_divides(a, *h.ideal);
}

}  // namespace

Ideal psi_b(const Ideal& c, const Ideal& b, const Ideal& m) {
  Ideal gbm = ideal_gcd(b, m);
  Ideal t = ideal_div(m, gbm);
  Ideal gbc = ideal_gcd(b, c);
  return ideal_gcd(c, ideal_mul(t, gbc));
}

bool chi_b(const Ideal& c, const Ideal& b, const ShiftIdeal& h) {
  return divides_h(ideal_gcd(c, b), h);
}

bool chi_b_star(const Ideal& c, const Ideal& b, const Ideal& m, const ShiftIdeal& h) {
  Ideal psi = psi_b(c, b, m);
  if (h.zero) return true;
  Ideal target = ideal_mul(ideal_div(b, ideal_gcd(b, m)), *h.ideal);
  return ideal_divides(psi, target);
}

Rat kappa_factor(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h) {
  bool p_in_m = valuation(m, p) > 0;
  i64 g = p_in_m ? p.nrm : 1;
  bool gm_divides_h = p_in_m ? (val_h(h, p) > 0) : true;
  if (!gm_divides_h) return Rat(1);
  i128 np2 = i128(p.nrm) * p.nrm;
  return Rat(np2, np2 - g);
}

Rat kappa_prime_factor(const PrimeElement& p, const ShiftIdeal& h) {
  if (val_h(h, p) > 0) return Rat(p.nrm - 1, p.nrm);
  return Rat(1);
}

Rat w_p(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h) {
  i64 g = valuation(m, p) > 0 ? p.nrm : 1;
  i128 np2 = i128(p.nrm) * p.nrm;
  return kappa_factor(p, m, h) * kappa_prime_factor(p, h) * Rat(g, np2);
}

Rat product_prime_factor(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h) {
  bool p_in_m = valuation(m, p) > 0;
  i64 g = p_in_m ? p.nrm : 1;
  bool gm_divides_h = p_in_m ? (val_h(h, p) > 0) : true;
  i128 np2 = i128(p.nrm) * p.nrm;
  Rat gamma = gm_divides_h ? Rat(np2 - g, np2) : Rat(1);
  return gamma * (Rat(1) - w_p(p, m, h));
}

Rat closed_prime_factor(const PrimeElement& p, const ShiftIdeal& h) {
  i128 np = p.nrm;
  Rat base = Rat(np * np - 2, np * np);
  if (val_h(h, p) > 0) base = base * Rat(np * (np * np - 2) + 1, np * (np * np - 2));
  return base;
}

namespace {

constexpr int kInfVal = std::numeric_limits<int>::max() / 2;

struct IdVals {
  std::vector<FactorTerm> terms;  // sorted by id
  int val(int32_t id) const {
    for (const FactorTerm& t : terms)
      if (t.id == id) return t.exp;
    return 0;
  }
};

struct PairContext {
  const PrimeIdealTable* table;
  IdVals m_vals;
  IdVals h_vals;
  bool h_zero;
  i64 m_norm;
};

// N((c(b,m), m(b,c))) when (b,c) | h and (c(b,m), m(b,c)) | h b, else 0.
i64 pair_numerator(const FactorTerm* b_begin, uint32_t b_len, const FactorTerm* c_begin,
                   uint32_t c_len, const PairContext& ctx) {
  // Condition (b, c) | h over shared primes.
  if (!ctx.h_zero) {
    uint32_t i = 0, j = 0;
    while (i < b_len && j < c_len) {
      if (b_begin[i].id < c_begin[j].id)
        ++i;
      else if (b_begin[i].id > c_begin[j].id)
        ++j;
      else {
        int shared = std::min(b_begin[i].exp, c_begin[j].exp);
        if (shared > ctx.h_vals.val(b_begin[i].id)) return 0;
        ++i;
        ++j;
      }
    }
  }
  // Merge over supp(c) ∪ supp(m); primes outside contribute valuation 0.
  i64 G = 1;
  uint32_t ci = 0;
  std::size_t mi = 0;
  uint32_t bi = 0;
  const auto& m_terms = ctx.m_vals.terms;
  while (ci < c_len || mi < m_terms.size()) {
    int32_t id;
    int vc = 0, vm = 0;
    if (ci < c_len && (mi >= m_terms.size() || c_begin[ci].id <= m_terms[mi].id)) {
      id = c_begin[ci].id;
      vc = c_begin[ci].exp;
      if (mi < m_terms.size() && m_terms[mi].id == id) {
        vm = m_terms[mi].exp;
        ++mi;
      }
      ++ci;
    } else {
      id = m_terms[mi].id;
      vm = m_terms[mi].exp;
      ++mi;
    }
    while (bi < b_len && b_begin[bi].id < id) ++bi;
    int vb = (bi < b_len && b_begin[bi].id == id) ? b_begin[bi].exp : 0;
    int v1 = vc + std::min(vb, vm);
    int v2 = vm + std::min(vb, vc);
    int mn = std::min(v1, v2);
    if (!ctx.h_zero) {
      int vh = ctx.h_vals.val(id);
      if (mn > vh + vb) return 0;
    }
    if (mn > 0) {
      i64 np = ctx.table->list[std::size_t(id)].nrm;
      for (int t = 0; t < mn; ++t) G = narrow_i64(i128(G) * np);
    }
  }
  return G;
}

struct Tables {
  SpfTable spf;
  PrimeCache cache;
  PrimeIdealTable prime_table;
  CanonicalList canon;

  Tables(const Field& f, i64 bound, i64 prime_norm_bound)
      : spf(std::max<i64>(bound, 2)),
        cache(f, std::max<i64>(bound, 2)),
        prime_table(f, std::max(std::max<i64>(bound, 2), prime_norm_bound)),
        canon(f, bound, spf, cache, prime_table) {}
};

i64 max_prime_norm(const Ideal& a) {
  i64 m = 2;
  for (const auto& [pe, e] : a.fact.factors) {
    (void)e;
    m = std::max(m, pe.nrm);
  }
  return m;
}

PairContext make_pair_context(const PrimeIdealTable& table, const Ideal& m,
                              const ShiftIdeal& h) {
  PairContext ctx;
  ctx.table = &table;
  ctx.m_vals.terms = ideal_in_table(m, table);
  ctx.h_zero = h.zero;
  if (!h.zero) ctx.h_vals.terms = ideal_in_table(*h.ideal, table);
  ctx.m_norm = m.nrm;
  return ctx;
}

}  // namespace

double c_star(const Ideal& b, const Ideal& m, const ShiftIdeal& h, CStarMode mode,
              i64 cutoff) {
  const Field& f = field_of(m);
  i64 prime_bound = std::max({cutoff, max_prime_norm(b), max_prime_norm(m),
                              h.zero ? 2 : max_prime_norm(*h.ideal)});

  if (mode == CStarMode::euler_product) {
    PrimeIdealTable table(f, prime_bound);
    IdVals b_vals{ideal_in_table(b, table)};
    IdVals m_vals{ideal_in_table(m, table)};
    IdVals h_vals;
    if (!h.zero) h_vals.terms = ideal_in_table(*h.ideal, table);
    long double prod = 1.0L;
    for (int32_t id = 0; id < int32_t(table.list.size()); ++id) {
      const auto& P = table.list[std::size_t(id)];
      if (P.nrm > cutoff) continue;
      int vb = b_vals.val(id), vm = m_vals.val(id);
      int vh = h.zero ? kInfVal : h_vals.val(id);
      int vpsi = std::min(1, vm - std::min(vb, vm) + std::min(vb, 1));
      bool chi = std::min(vb, 1) <= vh;
      bool chi_star = vpsi <= vb - std::min(vb, vm) + vh;
      if (!(chi && chi_star)) continue;
      long double npsi = vpsi ? (long double)P.nrm : 1.0L;
      prod *= 1.0L - npsi / ((long double)P.nrm * P.nrm);
    }
    return double(prod);
  }

  Tables tb(f, cutoff, prime_bound);
  IdVals b_vals{ideal_in_table(b, tb.prime_table)};
  IdVals m_vals{ideal_in_table(m, tb.prime_table)};
  IdVals h_vals;
  if (!h.zero) h_vals.terms = ideal_in_table(*h.ideal, tb.prime_table);
  long double sum = 0.0L, comp = 0.0L;
  for (const auto& entry : tb.canon.entries) {
    if (entry.mu == 0) continue;
    const FactorTerm* terms = tb.canon.pool.data() + entry.begin;
    bool chi = true;
    i64 npsi = 1;
    bool chi_star = true;
    for (uint32_t i = 0; i < entry.len && chi && chi_star; ++i) {
      int32_t id = terms[i].id;
      int vc = terms[i].exp;
      int vb = b_vals.val(id), vm = m_vals.val(id);
      int vh = h.zero ? kInfVal : h_vals.val(id);
      if (std::min(vc, vb) > vh) chi = false;
      int vpsi = std::min(vc, vm - std::min(vb, vm) + std::min(vb, vc));
      if (vpsi > vb - std::min(vb, vm) + vh) chi_star = false;
      for (int t = 0; t < vpsi; ++t)
        npsi = narrow_i64(i128(npsi) * tb.prime_table.list[std::size_t(id)].nrm);
    }
    if (!(chi && chi_star)) continue;
    long double term =
        (long double)entry.mu * npsi / ((long double)entry.nrm * entry.nrm);
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return double(sum);
}

double certified_tail_bound(const Field& f, double x, bool lower) {
  const ZetaTriple& z = zeta_triple(f);
  double bias = lower ? -1.0 : 1.0;
  double z2 = z.z2 * (1 + bias * z.z2_tol);
  double z52 = z.z52 * (1 + bias * z.z52_tol);
  double z32 = z.z32 * (1 + bias * z.z32_tol);
  return z2 * z52 * z32 / std::sqrt(x);
}

ConstantReport mirsky_constant(const Ideal& m, const Element& k,
                               const ConstantOptions& opts) {
  const Field& f = field_of(m);
  ShiftIdeal h = make_shift(f, k);

  ConstantReport rep;
  rep.shift_zero = h.zero;

  // Cutoffs from the tolerance, capped at desk scale.
  i64 series_cutoff = opts.series_cutoff;
  if (series_cutoff == 0) {
    double need = certified_tail_bound(f, 1.0, false) * 2.0 / opts.tolerance;
    series_cutoff = std::min<i64>(opts.series_cap, i64(need * need) + 1);
    series_cutoff = std::max<i64>(series_cutoff, 256);
  }
  i64 product_cutoff = opts.product_cutoff;
  if (product_cutoff == 0) {
    product_cutoff = std::min<i64>(opts.product_cap, i64(6.0 / opts.tolerance) + 1);
    product_cutoff = std::max<i64>(product_cutoff, 256);
  }
  i64 h_prime_bound = h.zero ? 2 : max_prime_norm(*h.ideal);
  product_cutoff = std::max({product_cutoff, max_prime_norm(m), h_prime_bound});
  rep.cutoff_series = series_cutoff;
  rep.cutoff_product = product_cutoff;

  // Series route: double sum over squarefree ideal pairs.
  if (opts.series_enabled) {
    Tables tb(f, series_cutoff,
              std::max({series_cutoff, max_prime_norm(m), h_prime_bound}));
    PairContext ctx = make_pair_context(tb.prime_table, m, h);
    std::vector<uint32_t> sf;
    sf.reserve(tb.canon.entries.size());
    for (uint32_t i = 0; i < tb.canon.entries.size(); ++i)
      if (tb.canon.entries[i].mu != 0) sf.push_back(i);

    const std::size_t chunk = 256;
    std::size_t n_chunks = (sf.size() + chunk - 1) / chunk;
    std::vector<long double> partial(n_chunks, 0.0L);
    parallel_for(n_chunks, [&](std::size_t ci) {
      long double sum = 0.0L, comp = 0.0L;
      std::size_t lo = ci * chunk, hi = std::min(sf.size(), lo + chunk);
      for (std::size_t bi = lo; bi < hi; ++bi) {
        const auto& be = tb.canon.entries[sf[bi]];
        const FactorTerm* bt = tb.canon.pool.data() + be.begin;
        long double nb2 = (long double)be.nrm * be.nrm;
        for (uint32_t cj : sf) {
          const auto& ce = tb.canon.entries[cj];
          i64 G = pair_numerator(bt, be.len, tb.canon.pool.data() + ce.begin, ce.len, ctx);
          if (G == 0) continue;
          long double term = (long double)(be.mu * ce.mu) * G /
                             (nb2 * (long double)ce.nrm * ce.nrm);
          long double y = term - comp;
          long double t = sum + y;
          comp = (t - sum) - y;
          sum = t;
        }
      }
      partial[ci] = sum;
    });
    long double total = 0.0L;
    for (long double p : partial) total += p;
    rep.value_series = double(total / ctx.m_norm);
  }

  // Product route over prime ideals of norm <= product_cutoff.
  {
    PrimeIdealTable table(f, product_cutoff);
    IdVals m_vals{ideal_in_table(m, table)};
    IdVals h_vals;
    if (!h.zero) h_vals.terms = ideal_in_table(*h.ideal, table);
    long double prod = 1.0L;
    long double closed = 1.0L;
    for (int32_t id = 0; id < int32_t(table.list.size()); ++id) {
      const auto& P = table.list[std::size_t(id)];
      i128 np2 = i128(P.nrm) * P.nrm;
      int vm = m_vals.val(id);
      int vh = h.zero ? kInfVal : h_vals.val(id);
      i64 g = vm > 0 ? P.nrm : 1;
      bool gm_div_h = vm > 0 ? vh > 0 : true;
      Rat gamma = gm_div_h ? Rat(np2 - g, np2) : Rat(1);
      Rat kap = gm_div_h ? Rat(np2, np2 - g) : Rat(1);
      Rat kap_p = vh > 0 ? Rat(P.nrm - 1, P.nrm) : Rat(1);
      Rat w = kap * kap_p * Rat(g, np2);
      Rat factor = gamma * (Rat(1) - w);
      prod *= factor.to_long_double();

      Rat cf = Rat(np2 - 2, np2);
      if (vh > 0) {
        i128 d = P.nrm * (np2 - 2);
        cf = cf * Rat(d + 1, d);
      }
      closed *= cf.to_long_double();
    }
    rep.value_product = double(prod / m.nrm);
    rep.value_closed = is_unit_ideal(m) ? double(closed)
                                        : std::numeric_limits<double>::quiet_NaN();
  }

  rep.tail_series = 2.0 * certified_tail_bound(f, double(series_cutoff), false);
  rep.tail_product = std::expm1(6.0 / double(product_cutoff));
  return rep;
}

double sampled_constant_min(const Ideal& m, const std::vector<Element>& shifts,
                            const ConstantOptions& opts) {
  if (shifts.empty()) throw DomainError("sampled_constant_min: empty shift sample");
  double best = std::numeric_limits<double>::infinity();
  for (const Element& k : shifts)
    best = std::min(best, mirsky_constant(m, k, opts).value_product);
  return best;
}

double constant_lower_bound(const Ideal& m, i64 prime_cutoff) {
  const Field& f = field_of(m);
  i64 cutoff = std::max(prime_cutoff, max_prime_norm(m));
  PrimeIdealTable table(f, cutoff);
  IdVals m_vals{ideal_in_table(m, table)};
  long double prod = 1.0L;
  for (int32_t id = 0; id < int32_t(table.list.size()); ++id) {
    const auto& P = table.list[std::size_t(id)];
    i128 np2 = i128(P.nrm) * P.nrm;
    if (m_vals.val(id) > 0) {
      Rat fac = Rat(P.nrm - 1, P.nrm);
      prod *= (fac * fac).to_long_double();
    } else {
      prod *= Rat(np2 - 2, np2).to_long_double();
    }
  }
  // The omitted factors only shrink the product; under-bias by their total.
  prod *= std::exp(-6.0L / cutoff);
  return double(prod / m.nrm);
}

TailReport tail_sum(const Ideal& m, const ShiftIdeal& h, double x, const TailOptions& opts) {
  if (x < 1) throw DomainError("tail_sum: x must be >= 1");
  const Field& f = field_of(m);
  i64 h_prime_bound = h.zero ? 2 : max_prime_norm(*h.ideal);
  Tables tb(f, std::max(opts.cutoff_b, opts.cutoff_c),
            std::max({opts.cutoff_b, opts.cutoff_c, max_prime_norm(m), h_prime_bound}));
  PairContext ctx = make_pair_context(tb.prime_table, m, h);

  long double sum = 0.0L, comp = 0.0L;
  for (const auto& be : tb.canon.entries) {
    if (be.nrm < (i64)std::ceil(x) || be.nrm > opts.cutoff_b) continue;
    const FactorTerm* bt = tb.canon.pool.data() + be.begin;
    long double nb2 = (long double)be.nrm * be.nrm;
    for (const auto& ce : tb.canon.entries) {
      if (ce.nrm > opts.cutoff_c) break;
      i64 G = pair_numerator(bt, be.len, tb.canon.pool.data() + ce.begin, ce.len, ctx);
      if (G == 0) continue;
      long double term = (long double)G / (nb2 * (long double)ce.nrm * ce.nrm);
      long double y = term - comp;
      long double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  TailReport rep;
  rep.value = double(sum / ctx.m_norm);
  rep.bound = certified_tail_bound(f, x, false);
  rep.cutoff_b = opts.cutoff_b;
  rep.cutoff_c = opts.cutoff_c;
  return rep;
}

}  // namespace qm
