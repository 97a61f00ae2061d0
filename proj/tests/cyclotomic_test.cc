#include <cmath>
#include <numbers>
#include <random>

#include "csst/cyclotomic.h"
#include "csst/errors.h"
#include "doctest.h"

using namespace csst;

TEST_CASE("root of unity relations") {
  for (int level = 2; level <= 8; level++) {
    int64_t half = int64_t{1} << (level - 1);
    CycScalar z = CycScalar::root_of_unity(level, 1);
    CHECK(z.pow(static_cast<unsigned>(half)) + CycScalar::from_int(1) ==
          CycScalar::from_int(0));
    CHECK(z * z.conj() == CycScalar::from_int(1));
    CHECK(CycScalar::root_of_unity(level, -1) == z.conj());
  }
  // Embedding: zeta_4 = zeta_8^2.
  CHECK(CycScalar::root_of_unity(2, 1) == CycScalar::zeta8(2));
  CHECK(CycScalar::root_of_unity(1, 1) == CycScalar::from_int(-1));
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(9);
  auto random_scalar = [&](int level) {
    CycScalar s(level);
    for (int i = 0; i < (1 << (level - 1)); i++) {
      s += CycScalar::root_of_unity(level, i) *
           CycScalar::from_int(static_cast<int64_t>(rng() % 11) - 5);
    }
    return s.scaled_pow2(-static_cast<int>(rng() % 4));
  };
  for (int t = 0; t < 100; t++) {
    int level = 2 + static_cast<int>(rng() % 4);
    CycScalar a = random_scalar(level);
    CycScalar b = random_scalar(2 + static_cast<int>(rng() % 4));
    CycScalar c = random_scalar(level);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a - a == CycScalar());
    CHECK((a * b).conj() == a.conj() * b.conj());
    std::complex<double> diff = (a * b).to_complex() - a.to_complex() * b.to_complex();
    CHECK(std::abs(diff) < 1e-9);
  }
}

TEST_CASE("canonical dyadic form") {
  CycScalar two = CycScalar::from_int(2);
  CycScalar half = CycScalar::from_int(1).scaled_pow2(-1);
  CHECK(half.dyadic_exp() == 1);
  CHECK(two * half == CycScalar::from_int(1));
  CHECK((two * half).dyadic_exp() == 0);
  CHECK(CycScalar::from_int(6).scaled_pow2(-1) == CycScalar::from_int(3));
}

TEST_CASE("trigonometric constants") {
  CycScalar sqrt2 = CycScalar::zeta8(1) + CycScalar::zeta8(-1);
  CHECK(sec_const(3) == sqrt2);
  CHECK(tan_const(3) == CycScalar::from_int(1));
  CHECK(sec_const(3) * sec_const(3) == CycScalar::from_int(2));
  CHECK_THROWS_AS(tan_const(2), DegenerateLevel);
  CHECK_THROWS_AS(sec_const(2), DegenerateLevel);

  for (int l = 3; l <= 8; l++) {
    CycScalar one = CycScalar::from_int(1);
    CycScalar t = tan_const(l);
    CycScalar s = sec_const(l);
    CHECK(one + t * t == s * s);
    CHECK(s * cos_const(l) == one);
    CHECK(t * cos_const(l) == sin_const(l));
    double angle = 2 * std::numbers::pi / std::ldexp(1.0, l);
    CHECK(std::abs(t.to_complex() - std::tan(angle)) < 1e-9);
    CHECK(std::abs(s.to_complex() - 1 / std::cos(angle)) < 1e-9);
  }
  CHECK(cos_const(1) == CycScalar::from_int(-1));
  CHECK(sin_const(2) == CycScalar::from_int(1));
}

TEST_CASE("overflow is reported") {
  CycScalar big = CycScalar::from_int(int64_t{1} << 40);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
