#pragma once

#include "qm/mirsky.hpp"
#include "qm/sector.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qm {

// Exact count of nonzero ideals of norm <= x (canonical elements / omega_K),
// by closed-form row counting. O(sqrt(x)) time.
i64 count_ideals(const Field& f, double x);

// Exact sum of N(a) over ideals of norm <= y; leading term (rho_K/2) y^2.
i128 sum_norms_ideals(const Field& f, double y);

// Exact sum of phi_K(a) over ideals a with N(a) <= x and m | a.
i128 mertens_sum(const Ideal& m, double x);

// Coefficient of x^2 in the ideal-average of phi_K restricted to multiples
// of m: pi / (omega_K sqrt|D_K| zeta_K(2) c_m).
double mertens_leading(const Ideal& m);

// Exact sum of phi_K(a) over lattice points a in m ∩ C(z, theta, x).
i128 sectorial_mertens_sum(const Ideal& m, const Sector& s);

// Coefficient of x^4: theta / (2 sqrt|D_K| zeta_K(2) c_m).
double sectorial_mertens_leading(const Ideal& m, const Angle& theta);

// Correlation sums over the sector; a term with a + k = 0 contributes 0 and
// sets the flag.
struct MirskySumResult {
  i128 value{0};
  bool shifted_zero_term{false};
};
MirskySumResult mirsky_sum(const Ideal& m, const Element& k, const Sector& s);

struct NormalizedMirskyResult {
  mpq_class value;
  bool shifted_zero_term{false};
};
NormalizedMirskyResult normalized_mirsky_sum(const Ideal& m, const Element& k,
                                             const Sector& s);

// Coefficients theta c_{m,k} / (3 sqrt|D_K|) of x^6 and
// theta c_{m,k} / sqrt|D_K| of x^2.
double mirsky_leading(const Ideal& m, const Element& k, const Angle& theta,
                      double constant_value);
double normalized_mirsky_leading(const Ideal& m, const Element& k, const Angle& theta,
                                 double constant_value);

// Least-squares slope of log|err| against log x, excluding exact-zero
// errors; half_width is ~2 standard errors.
struct ExponentFit {
  double slope{0};
  double half_width{0};
  int points_used{0};
};
ExponentFit fit_error_exponent(const std::vector<double>& xs,
                               const std::vector<double>& errs);

enum class SumKind {
  ideal_count,        // Card{N(a) <= x} vs rho_K x
  mertens,            // "thm1.1"
  sectorial_mertens,  // "thm1.2"
  mirsky,             // "thm4.1"
  normalized_mirsky,  // "lemma4.5"
};

std::string sum_kind_name(SumKind k);        // CLI identifier
SumKind sum_kind_from_name(const std::string& name);

struct SumParams {
  const Field* fld{nullptr};
  Ideal m;
  Element k;          // mirsky kinds
  Element z;          // sector anchor (exact)
  Angle theta;
  double ratio_tolerance{0.05};
};

struct SumPoint {
  double x{0};
  std::string exact;  // integer or rational, exact
  double exact_value{0};
  double predicted{0};
  double ratio{0};
  double abs_err{0};
  double seconds{0};
};

struct SumReport {
  SumKind kind;
  std::vector<SumPoint> points;
  ExponentFit fit;
  double ratio_tolerance{0};
  bool pass{false};
  bool shifted_zero_term{false};
  double constant_value{0};     // c_{m,k} (product route) for mirsky kinds
  i64 constant_cutoff{0};       // prime-norm cutoff behind constant_value
};

// Evaluates the exact sum, the predicted leading term, and the ratio on an
// increasing grid (>= 4 points; GridTooSmall otherwise), then fits the
// error exponent. pass = |ratio - 1| <= ratio_tolerance at the largest x.
SumReport convergence_report(SumKind kind, const SumParams& params,
                             const std::vector<double>& grid);

}  // namespace qm
