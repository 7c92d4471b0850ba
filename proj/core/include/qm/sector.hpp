#pragma once

#include "qm/ideal.hpp"

#include <complex>
#include <functional>

namespace qm {

// Angle, kept symbolic as (num/den)*pi when possible so that full-circle
// and boundary cases stay exact.
struct Angle {
  bool symbolic{false};
  long num{0};
  long den{1};
  double radians{0.0};
};

Angle angle_pi(long num, long den);  // (num/den) * pi
Angle angle_radians(double radians);
bool is_full_circle(const Angle& theta);
double angle_value(const Angle& theta);

// Truncated angular sector C(z, theta, R): points rho e^{it} z with
// t in ]-theta/2, theta/2] and 0 < rho <= R/|z|. The anchor is either an
// exact lattice direction (membership then decided from integer data where
// possible) or a free complex direction (long-double evaluation; points
// within 1e-12 of a boundary angle are re-resolved at extended precision,
// so generic angles should be preferred for tie-free runs).
struct Sector {
  const Field* fld{nullptr};
  bool exact_anchor{false};
  Element z;                   // valid when exact_anchor
  std::complex<double> z_dir;  // embedding of the anchor (always set)
  Angle theta;
  double radius{0.0};
};

Sector make_sector(const Field& f, const Element& z, Angle theta, double radius);
Sector make_sector(const Field& f, std::complex<double> z, Angle theta, double radius);

bool contains(const Sector& s, const Element& a);

// Every lattice point of the ideal m inside s, exactly once, row-major over
// the pulled-back coordinates (the generator is divided out, so one
// enumerator serves every ideal).
void enumerate(const Ideal& m, const Sector& s, const std::function<void(const Element&)>& fn);
std::vector<Element> enumerate_vec(const Ideal& m, const Sector& s);

// Exact count of O_K lattice points in s and the area-term estimate
// theta R^2 / sqrt|D_K|.
i64 count_points(const Sector& s);
double gauss_estimate(const Sector& s);

// Exact sum of |d|^2 over O_K points of s.
i128 sum_norms_sector(const Sector& s);

// Covolume N(m) sqrt|D_K|/2 and the diameter of the fundamental
// parallelogram spanned by generator * {1, omega}.
std::pair<double, double> covol_diam(const Ideal& m);

// Row-decomposed enumeration state; also drives the parallel sums.
struct SectorEnum {
  const Field* fld;
  Element gen;  // ideal generator
  i64 gen_norm;
  bool exact;
  Element w_mult;              // conj(z) * gen; w(d) = d * w_mult
  std::complex<double> w_dir;  // embed(gen) * conj(z_dir) (free anchors)
  long double r2;              // R^2 in the original frame
  i64 v_min, v_max;

  // Cached angular-window data.
  bool ang_full;
  long double ang_half;
  bool ang_exact;
  int cos_sgn, sin_sgn;
  i64 cos2_num, cos2_den, sin2_num, sin2_den;

  struct URange {
    i64 lo, hi;
  };
  URange row(i64 v) const;
  bool accept(i64 u, i64 v) const;  // exact norm window + angular window
  Element element(i64 u, i64 v) const { return gen * Element(u, v, *fld); }
};
SectorEnum make_enum(const Ideal& m, const Sector& s);

}  // namespace qm
