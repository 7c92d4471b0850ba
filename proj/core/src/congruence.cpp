#include "qm/congruence.hpp"

#include <gmpxx.h>

#include <array>

namespace qm {

namespace {

using Mat24 = std::array<std::array<mpz_class, 4>, 2>;
using Mat44 = std::array<std::array<mpz_class, 4>, 4>;

void add_col(Mat24& A, Mat44& U, int dst, int src, const mpz_class& q) {
  for (int r = 0; r < 2; ++r) A[r][dst] += q * A[r][src];
  for (int r = 0; r < 4; ++r) U[r][dst] += q * U[r][src];
}

void swap_col(Mat24& A, Mat44& U, int i, int j) {
  for (int r = 0; r < 2; ++r) std::swap(A[r][i], A[r][j]);
  for (int r = 0; r < 4; ++r) std::swap(U[r][i], U[r][j]);
}

void negate_col(Mat24& A, Mat44& U, int j) {
  for (int r = 0; r < 2; ++r) A[r][j] = -A[r][j];
  for (int r = 0; r < 4; ++r) U[r][j] = -U[r][j];
}

// Euclidean column reduction of row `row` over columns [col, 4): afterwards
// A[row][col] = gcd >= 0 and A[row][j] = 0 for j > col. U tracks the
// unimodular column transform.
void reduce_row(Mat24& A, Mat44& U, int row, int col) {
  while (true) {
    int best = -1;
    for (int j = col; j < 4; ++j)
      if (A[row][j] != 0 && (best == -1 || abs(A[row][j]) < abs(A[row][best]))) best = j;
    if (best == -1) return;
    if (best != col) swap_col(A, U, col, best);
    bool done = true;
    for (int j = col + 1; j < 4; ++j) {
      if (A[row][j] == 0) continue;
      mpz_class q = A[row][j] / A[row][col];
      if (q != 0) add_col(A, U, j, col, -q);
      if (A[row][j] != 0) done = false;
    }
    if (done) break;
  }
  if (A[row][col] < 0) negate_col(A, U, col);
}

mpz_class nearest_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

mpz_class mz(i64 v) { return mpz_class((long)v); }

}  // namespace

std::optional<CongruenceSolution> crt_solve(const Element& alpha0, const Element& alpha,
                                            const Element& beta0, const Element& beta) {
  const Field& f = same_field(alpha0, beta0);
  same_field(alpha, beta);
  same_field(alpha0, alpha);
  if (alpha.is_zero() || beta.is_zero()) throw ZeroModulus("crt_solve: zero modulus");

  Element g = gcd(alpha, beta);
  Element diff = alpha0 - beta0;
  if (!diff.is_zero() && !try_exact_div(diff, g)) return std::nullopt;

  // Solve alpha*s + beta*t = beta0 - alpha0 exactly over Z coordinates;
  // columns are the images of {1, omega} under multiplication by the moduli.
  Element w(0, 1, f);
  Element aw = alpha * w, bw = beta * w;
  Mat24 A;
  A[0] = {mz(alpha.u), mz(aw.u), mz(beta.u), mz(bw.u)};
  A[1] = {mz(alpha.v), mz(aw.v), mz(beta.v), mz(bw.v)};
  Mat44 U{};
  for (int i = 0; i < 4; ++i) U[i][i] = 1;

  reduce_row(A, U, 0, 0);
  reduce_row(A, U, 1, 1);
  if (A[0][0] == 0 || A[1][1] == 0) throw Error("crt_solve: degenerate modulus lattice");

  Element delta = beta0 - alpha0;
  mpz_class d0 = mz(delta.u), d1 = mz(delta.v);
  if (d0 % A[0][0] != 0) throw Error("crt_solve: solvability check disagrees with lattice");
  mpz_class y0 = d0 / A[0][0];
  mpz_class rem = d1 - y0 * A[1][0];
  if (rem % A[1][1] != 0) throw Error("crt_solve: solvability check disagrees with lattice");
  mpz_class y1 = rem / A[1][1];

  // s = (x0, x1) in {1, omega} coordinates.
  std::array<mpz_class, 2> s;
  for (int r = 0; r < 2; ++r) s[r] = U[r][0] * y0 + U[r][1] * y1;

  Element L = lcm(alpha, beta);
  Element Lw = L * w;

  mpz_class bu = mz(alpha0.u) + mz(alpha.u) * s[0] + mz(aw.u) * s[1];
  mpz_class bv = mz(alpha0.v) + mz(alpha.v) * s[0] + mz(aw.v) * s[1];

  // Reduce base modulo the lcm lattice: subtract round(base / L) * L.
  mpz_class n_l = mz(norm(L));
  mpz_class cu = mz(L.u) + mz(f.B) * mz(L.v);
  mpz_class cv = -mz(L.v);
  mpz_class tu = bu * cu - mz(f.C) * bv * cv;
  mpz_class tv = bu * cv + bv * cu + mz(f.B) * bv * cv;
  mpz_class qu = nearest_div(tu, n_l);
  mpz_class qv = nearest_div(tv, n_l);
  mpz_class red_u = bu - (mz(L.u) * qu + mz(Lw.u) * qv);
  mpz_class red_v = bv - (mz(L.v) * qu + mz(Lw.v) * qv);
  if (!red_u.fits_slong_p() || !red_v.fits_slong_p())
    throw Error("crt_solve: reduced base exceeds 64-bit range");

  CongruenceSolution sol{Element(red_u.get_si(), red_v.get_si(), f), L};
  if (!divides(alpha, sol.base - alpha0) || !divides(beta, sol.base - beta0))
    throw Error("crt_solve: internal consistency check failed");
  return sol;
}

}  // namespace qm
