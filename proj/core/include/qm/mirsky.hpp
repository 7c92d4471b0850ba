#pragma once

#include "qm/phi_table.hpp"
#include "qm/zeta.hpp"

namespace qm {

// Shift ideal h = k O_K, possibly zero. Every ideal divides the zero ideal,
// so with k = 0 all divisibility tests against h succeed.
struct ShiftIdeal {
  const Field* fld{nullptr};
  Element k;
  bool zero{true};
  std::optional<Ideal> ideal;  // set when k != 0
};

ShiftIdeal make_shift(const Field& f, const Element& k);

// h | target conventions with a possibly-zero target are internal to the
// maps below; these are the ideal-level definitions used by tests.
Ideal psi_b(const Ideal& c, const Ideal& b, const Ideal& m);
bool chi_b(const Ideal& c, const Ideal& b, const ShiftIdeal& h);
bool chi_b_star(const Ideal& c, const Ideal& b, const Ideal& m, const ShiftIdeal& h);

// Per-prime ingredients of the correlation constant, exact.
Rat kappa_factor(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h);
Rat kappa_prime_factor(const PrimeElement& p, const ShiftIdeal& h);
Rat w_p(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h);
// Full per-prime Euler factor of the product form (the leading-coefficient
// factor times 1 - w_p), and the rearranged closed form valid at m = O_K.
Rat product_prime_factor(const PrimeElement& p, const Ideal& m, const ShiftIdeal& h);
Rat closed_prime_factor(const PrimeElement& p, const ShiftIdeal& h);

enum class CStarMode { series_with_cutoff, euler_product };

// C*(b) = sum_c mu(c) chi_b(c) chi*_b(c) N(psi_b(c)) / N(c)^2, evaluated
// either as the truncated series or as the Euler product over primes of
// norm <= cutoff.
double c_star(const Ideal& b, const Ideal& m, const ShiftIdeal& h, CStarMode mode,
              i64 cutoff);

struct ConstantOptions {
  double tolerance{1e-3};
  i64 series_cutoff{0};   // 0: derived from tolerance, capped below
  i64 product_cutoff{0};
  i64 series_cap{20'000};
  i64 product_cap{2'000'000};
  bool series_enabled{true};  // the double series is the expensive route
};

// Both evaluations of the correlation constant c_{m,k} plus certified
// truncation tails. Invariant: |value_series - value_product| <=
// tail_series + tail_product.
struct ConstantReport {
  double value_series{0};
  double value_product{0};
  double value_closed{0};  // rearranged product, NaN unless m = O_K
  i64 cutoff_series{0};
  i64 cutoff_product{0};
  double tail_series{0};
  double tail_product{0};
  bool shift_zero{false};
};

ConstantReport mirsky_constant(const Ideal& m, const Element& k,
                               const ConstantOptions& opts = {});

// Truncated positive-term double sum over N(b) >= x plus the certified
// zeta bound; value is monotone nonincreasing in x.
struct TailReport {
  double value{0};
  double bound{0};
  i64 cutoff_b{0};
  i64 cutoff_c{0};
};

struct TailOptions {
  i64 cutoff_b{3000};
  i64 cutoff_c{3000};
};

TailReport tail_sum(const Ideal& m, const ShiftIdeal& h, double x,
                    const TailOptions& opts = {});

// zeta_K(2) zeta_K(5/2) zeta_K(3/2) / sqrt(x); with `lower` the cached zeta
// values are biased down by their tolerances (for honest <= assertions).
double certified_tail_bound(const Field& f, double x, bool lower = false);

// The infimum of c_{m,k} over all shifts is not finitely computable; these
// give a sampled upper estimate (the min over the supplied shifts) and a
// shift-uniform certified positive lower bound
//   (1/N(m)) prod_{p | m} (1 - 1/N(p))^2 prod_{p not| m} (1 - 2/N(p)^2),
// the per-prime worst case of the product factors, with the truncation
// under-biased by exp(-6/cutoff).
double sampled_constant_min(const Ideal& m, const std::vector<Element>& shifts,
                            const ConstantOptions& opts = {});
double constant_lower_bound(const Ideal& m, i64 prime_cutoff = 100'000);

}  // namespace qm
