#include "qm/field.hpp"
#include "qm/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace qm;

TEST_CASE("registry holds exactly the nine discriminants") {
  auto fields = all_fields();
  REQUIRE(fields.size() == 9);
  std::vector<int> discs;
  for (const Field& f : fields) discs.push_back(f.disc);
  CHECK(discs == std::vector<int>{-3, -4, -7, -8, -11, -19, -43, -67, -163});
  for (int d : discs) CHECK(lookup_field(d).disc == d);
}

TEST_CASE("lookup rejects everything else") {
  for (int d : {-5, -6, -12, -15, -20, -23, 0, 1, 4, -164})
    CHECK_THROWS_AS(lookup_field(d), NotPrincipalImaginaryQuadratic);
}

TEST_CASE("unit counts") {
  CHECK(lookup_field(-4).unit_count == 4);
  CHECK(lookup_field(-3).unit_count == 6);
  for (int d : {-7, -8, -11, -19, -43, -67, -163})
    CHECK(lookup_field(d).unit_count == 2);
}

TEST_CASE("norm forms are positive definite with B^2 - 4C = D_K") {
  for (const Field& f : all_fields()) {
    CHECK(f.B * f.B - 4 * f.C == f.disc);
    CHECK(f.disc < 0);
  }
  const Field& g4 = lookup_field(-4);
  CHECK(g4.B == 0);
  CHECK(g4.C == 1);
  const Field& g3 = lookup_field(-3);
  CHECK(g3.B == 1);
  CHECK(g3.C == 1);
}

TEST_CASE("rho_K * omega_K * sqrt|D_K| = 2 pi, exactly in symbolic parts") {
  for (const Field& f : all_fields()) {
    // rho = coeff * pi^1 * sqrt|D|^-1 with coeff = 2 / omega_K
    CHECK(f.rho.pi_pow == 1);
    CHECK(f.rho.sqrt_pow == -1);
    CHECK(f.rho.coeff * rat(f.unit_count) == rat(2));
  }
}

TEST_CASE("covolume^2 * 4 = |D_K| exactly") {
  for (const Field& f : all_fields()) {
    CHECK(f.covolume.pi_pow == 0);
    CHECK(f.covolume.sqrt_pow == 1);
    CHECK(f.covolume.coeff * f.covolume.coeff * rat(4) == rat(1));
    CHECK(f.covolume_value() ==
          doctest::Approx(std::sqrt(double(f.abs_disc())) / 2).epsilon(1e-14));
  }
  CHECK(lookup_field(-4).covolume_value() == doctest::Approx(1.0));
  CHECK(lookup_field(-3).covolume_value() == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("fixed invariants") {
  CHECK(Field::real_places == 0);
  CHECK(Field::complex_places == 1);
  CHECK(Field::degree == 2);
  CHECK(Field::regulator == 1);
  CHECK(Field::class_number == 1);
}
