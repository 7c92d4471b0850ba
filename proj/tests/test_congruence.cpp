#include "oracles.hpp"

#include <doctest.h>

using namespace qm;

namespace {

// Exhaustive residue-scan oracle: all solutions mod alpha*beta.
std::vector<Element> scan_solutions(const Element& a0, const Element& alpha,
                                    const Element& b0, const Element& beta) {
  std::vector<Element> out;
  for (const Element& r : oracle::residues_mod(alpha * beta))
    if (divides(alpha, r - a0) && divides(beta, r - b0)) out.push_back(r);
  return out;
}

void check_against_scan(const Element& a0, const Element& alpha, const Element& b0,
                        const Element& beta) {
  auto sol = crt_solve(a0, alpha, b0, beta);
  auto scanned = scan_solutions(a0, alpha, b0, beta);
  if (!sol) {
    CHECK(scanned.empty());
    return;
  }
  REQUIRE(!scanned.empty());
  CHECK(divides(alpha, sol->base - a0));
  CHECK(divides(beta, sol->base - b0));
  // modulus generates [alpha, beta]
  CHECK(sol->modulus == lcm(alpha, beta));
  // every scanned solution lies in base + modulus O_K
  for (const Element& s : scanned) CHECK(divides(sol->modulus, s - sol->base));
  // solution count in O_K/(alpha beta) equals N(alpha beta)/N([alpha,beta])
  i64 expected = norm(alpha) * norm(beta) / norm(sol->modulus);
  CHECK(i64(scanned.size()) == expected);
}

}  // namespace

TEST_CASE("examples") {
  const Field& g4 = lookup_field(-4);

  // Trivial system: base 0, modulus lcm.
  Element x(3, 1, g4), y(1, 2, g4);
  auto triv = crt_solve(Element(0, 0, g4), x, Element(0, 0, g4), y);
  REQUIRE(triv.has_value());
  CHECK(divides(x, triv->base));
  CHECK(divides(y, triv->base));
  CHECK(triv->modulus == lcm(x, y));

  // (1+i) | 2 and (1+i) does not divide 1: no solution.
  CHECK(!crt_solve(Element(1, 0, g4), Element(1, 1, g4), Element(0, 0, g4),
                   Element(2, 0, g4))
             .has_value());

  // n = 1 mod 3, n = 0 mod (1+i): verified against the residue scan.
  check_against_scan(Element(1, 0, g4), Element(3, 0, g4), Element(0, 0, g4),
                     Element(1, 1, g4));

  CHECK_THROWS_AS(crt_solve(Element(1, 0, g4), Element(0, 0, g4), Element(0, 0, g4),
                            Element(2, 0, g4)),
                  ZeroModulus);
}

TEST_CASE("exhaustive agreement with the residue scan, small moduli") {
  // All canonical modulus pairs with N(alpha*beta) <= 60, all residue pairs.
  for (int disc : {-4, -3, -7}) {
    const Field& f = lookup_field(disc);
    auto points = oracle::disk_scan(f, 60);
    std::vector<Element> canon;
    for (const Element& a : points)
      if (is_canonical_associate(a) && norm(a) > 1) canon.push_back(a);
    for (const Element& alpha : canon)
      for (const Element& beta : canon) {
        if (norm(alpha) * norm(beta) > 60) continue;
        for (const Element& a0 : oracle::residues_mod(alpha))
          for (const Element& b0 : oracle::residues_mod(beta))
            check_against_scan(a0, alpha, b0, beta);
      }
  }
}

TEST_CASE("sampled agreement with the residue scan, norms(alpha beta) <= 500") {
  oracle::Rng rng(37);
  for (const Field& f : all_fields()) {
    int done = 0;
    while (done < 120) {
      Element alpha = rng.nonzero_element(f, 40);
      Element beta = rng.nonzero_element(f, 40);
      if (norm(alpha) * norm(beta) > 500) continue;
      Element a0 = rng.element_with_zero(f, 200);
      Element b0 = rng.element_with_zero(f, 200);
      check_against_scan(a0, alpha, b0, beta);
      ++done;
    }
  }
}
