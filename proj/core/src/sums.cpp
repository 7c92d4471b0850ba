#include "qm/sums.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

namespace qm {

namespace {

i64 norm_floor(double x) {
  if (x < 0) return -1;
  i64 b = i64(x);
  while (b > 0 && (long double)b > (long double)x) --b;
  while ((long double)(b + 1) <= (long double)x) ++b;
  return b;
}

}  // namespace

i64 count_ideals(const Field& f, double x) {
  i64 bound = norm_floor(x);
  if (bound < 1) return 0;
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
  total -= 1;  // origin
  if (total % f.unit_count != 0) throw Error("count_ideals: unit orbit mismatch");
  return total / f.unit_count;
}

i128 sum_norms_ideals(const Field& f, double y) {
  i64 bound = norm_floor(y);
  if (bound < 1) return 0;
  i64 absD = f.abs_disc();
  i128 total = 0;
  auto s0 = [](i64 n) -> i128 {
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
    total += sum2(lo, hi) + i128(f.B) * v * sum1(lo, hi) +
             i128(f.C) * v * v * i128(hi - lo + 1);
  }
  if (total % f.unit_count != 0) throw Error("sum_norms_ideals: unit orbit mismatch");
  return total / f.unit_count;
}

i128 mertens_sum(const Ideal& m, double x) {
  const Field& f = field_of(m);
  i64 bound = norm_floor(x);
  if (bound < m.nrm) return 0;
  i64 cbound = bound / m.nrm;  // N(c) <= x / N(m)
  SpfTable spf(std::max<i64>(bound, 2));
  PrimeCache cache(f, std::max<i64>(bound, 2));

  i64 absD = f.abs_disc();
  i64 vmax = isqrt64(4 * cbound / absD) + 1;
  std::size_t rows = std::size_t(2 * vmax + 1);
  const std::size_t chunk = 64;
  std::size_t n_chunks = (rows + chunk - 1) / chunk;
  std::vector<i128> partial(n_chunks, 0);
  parallel_for(n_chunks, [&](std::size_t ci) {
    i128 acc = 0;
    i64 v_lo = -vmax + i64(ci * chunk);
    i64 v_hi = std::min(vmax, v_lo + i64(chunk) - 1);
    for (i64 v = v_lo; v <= v_hi; ++v) {
      i64 delta = 4 * cbound - absD * v * v;
      if (delta < 0) continue;
      i64 s = isqrt64(delta);
      for (i64 u = ceil_div(-s - f.B * v, 2); u <= floor_div(s - f.B * v, 2); ++u) {
        i128 n = i128(u) * u + i128(f.B) * u * v + i128(f.C) * v * v;
        if (n == 0 || n > cbound) continue;
        Element c(u, v, f);
        if (!is_canonical_associate(c)) continue;
        Element a = m.gen * c;
        acc += phi_of_element(f, a.u, a.v, spf, cache);
      }
    }
    partial[ci] = acc;
  });
  i128 total = 0;
  for (i128 p : partial) total += p;
  return total;
}

double mertens_leading(const Ideal& m) {
  const Field& f = field_of(m);
  double z2 = zeta_triple(f).z2;
  return std::numbers::pi /
         (f.unit_count * f.sqrt_abs_disc() * z2 * congruence_factor(m).to_double());
}

i128 sectorial_mertens_sum(const Ideal& m, const Sector& s) {
  const Field& f = field_of(m);
  i64 bound = norm_floor((long double)s.radius * s.radius > 0 ? s.radius * s.radius : 0);
  if (bound < 1) return 0;
  SpfTable spf(std::max<i64>(bound, 2));
  PrimeCache cache(f, std::max<i64>(bound, 2));
  SectorEnum e = make_enum(m, s);

  std::size_t rows = std::size_t(e.v_max - e.v_min + 1);
  const std::size_t chunk = 64;
  std::size_t n_chunks = (rows + chunk - 1) / chunk;
  std::vector<i128> partial(n_chunks, 0);
  parallel_for(n_chunks, [&](std::size_t ci) {
    i128 acc = 0;
    i64 v_lo = e.v_min + i64(ci * chunk);
    i64 v_hi = std::min(e.v_max, v_lo + i64(chunk) - 1);
    for (i64 v = v_lo; v <= v_hi; ++v) {
      auto [lo, hi] = e.row(v);
      for (i64 u = lo; u <= hi; ++u) {
        if (!e.accept(u, v)) continue;
        Element a = e.element(u, v);
        acc += phi_of_element(f, a.u, a.v, spf, cache);
      }
    }
    partial[ci] = acc;
  });
  i128 total = 0;
  for (i128 p : partial) total += p;
  return total;
}

double sectorial_mertens_leading(const Ideal& m, const Angle& theta) {
  const Field& f = field_of(m);
  double z2 = zeta_triple(f).z2;
  return angle_value(theta) /
         (2 * f.sqrt_abs_disc() * z2 * congruence_factor(m).to_double());
}

namespace {

struct MirskyContext {
  SpfTable spf;
  PrimeCache cache;
  PhiBox box;

  MirskyContext(const Field& f, i64 table_bound)
      : spf(std::max<i64>(table_bound, 2)),
        cache(f, std::max<i64>(table_bound, 2)),
        box(f, std::max<i64>(table_bound, 2), spf, cache) {}

  i64 phi(const Field& f, i64 u, i64 v) const {
    i64 cached = box.lookup(u, v);
    if (cached) return cached;
    return phi_of_element(f, u, v, spf, cache);
  }
};

i64 mirsky_table_bound(const Element& k, const Sector& s) {
  double kabs = std::sqrt(double(norm(k)));
  double r = s.radius + kabs + 2.0;
  return i64(r * r) + 1;
}

}  // namespace

MirskySumResult mirsky_sum(const Ideal& m, const Element& k, const Sector& s) {
  const Field& f = field_of(m);
  MirskySumResult out;
  if (s.radius <= 0) return out;
  MirskyContext ctx(f, mirsky_table_bound(k, s));
  SectorEnum e = make_enum(m, s);

  std::size_t rows = std::size_t(e.v_max - e.v_min + 1);
  const std::size_t chunk = 64;
  std::size_t n_chunks = (rows + chunk - 1) / chunk;
  std::vector<i128> partial(n_chunks, 0);
  std::vector<char> zero_hit(n_chunks, 0);
  parallel_for(n_chunks, [&](std::size_t ci) {
    i128 acc = 0;
    i64 v_lo = e.v_min + i64(ci * chunk);
    i64 v_hi = std::min(e.v_max, v_lo + i64(chunk) - 1);
    for (i64 v = v_lo; v <= v_hi; ++v) {
      auto [lo, hi] = e.row(v);
      for (i64 u = lo; u <= hi; ++u) {
        if (!e.accept(u, v)) continue;
        Element a = e.element(u, v);
        Element ak = a + k;
        if (ak.is_zero()) {
          zero_hit[ci] = 1;
          continue;
        }
        acc += i128(ctx.phi(f, a.u, a.v)) * ctx.phi(f, ak.u, ak.v);
      }
    }
    partial[ci] = acc;
  });
  for (std::size_t i = 0; i < n_chunks; ++i) {
    out.value += partial[i];
    if (zero_hit[i]) out.shifted_zero_term = true;
  }
  return out;
}

NormalizedMirskyResult normalized_mirsky_sum(const Ideal& m, const Element& k,
                                             const Sector& s) {
  const Field& f = field_of(m);
  NormalizedMirskyResult out;
  out.value = 0;
  if (s.radius <= 0) return out;
  MirskyContext ctx(f, mirsky_table_bound(k, s));
  SectorEnum e = make_enum(m, s);

  std::size_t rows = std::size_t(e.v_max - e.v_min + 1);
  const std::size_t chunk = 64;
  std::size_t n_chunks = (rows + chunk - 1) / chunk;
  std::vector<mpq_class> partial(n_chunks, mpq_class(0));
  std::vector<char> zero_hit(n_chunks, 0);
  parallel_for(n_chunks, [&](std::size_t ci) {
    mpq_class acc(0);
    i64 v_lo = e.v_min + i64(ci * chunk);
    i64 v_hi = std::min(e.v_max, v_lo + i64(chunk) - 1);
    for (i64 v = v_lo; v <= v_hi; ++v) {
      auto [lo, hi] = e.row(v);
      for (i64 u = lo; u <= hi; ++u) {
        if (!e.accept(u, v)) continue;
        Element a = e.element(u, v);
        Element ak = a + k;
        if (ak.is_zero()) {
          zero_hit[ci] = 1;
          continue;
        }
        i64 pa = ctx.phi(f, a.u, a.v), pb = ctx.phi(f, ak.u, ak.v);
        mpq_class term(pa, norm(a));
        term *= mpq_class(pb, norm(ak));
        term.canonicalize();
        acc += term;
      }
    }
    partial[ci] = acc;
  });
  for (std::size_t i = 0; i < n_chunks; ++i) {
    out.value += partial[i];
    if (zero_hit[i]) out.shifted_zero_term = true;
  }
  return out;
}

double mirsky_leading(const Ideal& m, const Element& k, const Angle& theta,
                      double constant_value) {
  (void)k;
  const Field& f = field_of(m);
  return angle_value(theta) * constant_value / (3 * f.sqrt_abs_disc());
}

double normalized_mirsky_leading(const Ideal& m, const Element& k, const Angle& theta,
                                 double constant_value) {
  (void)k;
  const Field& f = field_of(m);
  return angle_value(theta) * constant_value / f.sqrt_abs_disc();
}

ExponentFit fit_error_exponent(const std::vector<double>& xs,
                               const std::vector<double>& errs) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (errs[i] == 0.0) continue;  // exact crossing; drop the degenerate point
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(std::fabs(errs[i])));
  }
  ExponentFit fit;
  fit.points_used = int(lx.size());
  if (lx.size() < 2) return fit;
  double n = double(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom <= 0) return fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - fit.slope * sx) / n;
  if (lx.size() > 2) {
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      double r = ly[i] - (fit.slope * lx[i] + intercept);
      ss += r * r;
    }
    double se = std::sqrt(ss / (n - 2) / (sxx - sx * sx / n));
    fit.half_width = 2.0 * se;
  }
  return fit;
}

std::string sum_kind_name(SumKind k) {
  switch (k) {
    case SumKind::ideal_count: return "ideal-count";
    case SumKind::mertens: return "thm1.1";
    case SumKind::sectorial_mertens: return "thm1.2";
    case SumKind::mirsky: return "thm4.1";
    case SumKind::normalized_mirsky: return "lemma4.5";
  }
  throw Error("unknown sum kind");
}

SumKind sum_kind_from_name(const std::string& name) {
  if (name == "ideal-count") return SumKind::ideal_count;
  if (name == "thm1.1") return SumKind::mertens;
  if (name == "thm1.2") return SumKind::sectorial_mertens;
  if (name == "thm4.1") return SumKind::mirsky;
  if (name == "lemma4.5") return SumKind::normalized_mirsky;
  throw ConfigError("unknown verification target '" + name + "'");
}

SumReport convergence_report(SumKind kind, const SumParams& params,
                             const std::vector<double>& grid) {
  if (grid.size() < 4) throw GridTooSmall("grid needs at least 4 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw GridTooSmall("grid must be strictly increasing");
  const Field& f = *params.fld;

  SumReport rep;
  rep.kind = kind;
  rep.ratio_tolerance = params.ratio_tolerance;

  double constant = 0;
  if (kind == SumKind::mirsky || kind == SumKind::normalized_mirsky) {
    ConstantOptions copts;
    copts.product_cutoff = 200'000;
    copts.series_enabled = false;  // the prediction only needs the product route
    ConstantReport crep = mirsky_constant(params.m, params.k, copts);
    constant = crep.value_product;
    rep.constant_value = constant;
    rep.constant_cutoff = crep.cutoff_product;
  }

  std::vector<double> xs, errs;
  for (double x : grid) {
    SumPoint pt;
    pt.x = x;
    auto t0 = std::chrono::steady_clock::now();
    switch (kind) {
      case SumKind::ideal_count: {
        i64 exact = count_ideals(f, x);
        pt.exact = std::to_string(exact);
        pt.exact_value = double(exact);
        pt.predicted = f.rho_value() * x;
        break;
      }
      case SumKind::mertens: {
        i128 exact = mertens_sum(params.m, x);
        pt.exact = to_string_i128(exact);
        pt.exact_value = double(exact);
        pt.predicted = mertens_leading(params.m) * x * x;
        break;
      }
      case SumKind::sectorial_mertens: {
        Sector s = make_sector(f, params.z, params.theta, x);
        i128 exact = sectorial_mertens_sum(params.m, s);
        pt.exact = to_string_i128(exact);
        pt.exact_value = double(exact);
        pt.predicted = sectorial_mertens_leading(params.m, params.theta) * std::pow(x, 4);
        break;
      }
      case SumKind::mirsky: {
        Sector s = make_sector(f, params.z, params.theta, x);
        MirskySumResult r = mirsky_sum(params.m, params.k, s);
        rep.shifted_zero_term = rep.shifted_zero_term || r.shifted_zero_term;
        pt.exact = to_string_i128(r.value);
        pt.exact_value = double(r.value);
        pt.predicted = mirsky_leading(params.m, params.k, params.theta, constant) *
                       std::pow(x, 6);
        break;
      }
      case SumKind::normalized_mirsky: {
        Sector s = make_sector(f, params.z, params.theta, x);
        NormalizedMirskyResult r = normalized_mirsky_sum(params.m, params.k, s);
        rep.shifted_zero_term = rep.shifted_zero_term || r.shifted_zero_term;
        pt.exact = r.value.get_str();
        pt.exact_value = r.value.get_d();
        pt.predicted =
            normalized_mirsky_leading(params.m, params.k, params.theta, constant) * x * x;
        break;
      }
    }
    auto t1 = std::chrono::steady_clock::now();
    pt.seconds = std::chrono::duration<double>(t1 - t0).count();
    pt.ratio = pt.predicted != 0 ? pt.exact_value / pt.predicted : 0.0;
    pt.abs_err = std::fabs(pt.exact_value - pt.predicted);
    xs.push_back(x);
    errs.push_back(pt.exact_value - pt.predicted);
    rep.points.push_back(pt);
  }
  rep.fit = fit_error_exponent(xs, errs);
  rep.pass = std::fabs(rep.points.back().ratio - 1.0) <= params.ratio_tolerance;
  return rep;
}

}  // namespace qm
