#include <doctest.h>

#include "skein/ring.hpp"
#include "skein/samplers.hpp"

using namespace skein;

TEST_CASE("a_pow values and homomorphism") {
  CHECK(a_pow(Z4(0)) == CycCoeff{1, 0});
  CHECK(a_pow(Z4(1)) == cyc_a);
  CHECK(a_pow(Z4(2)) == CycCoeff{-1, 0});  // A^2 = -1, forced by A^-1 = -A
  CHECK(a_pow(Z4(3)) == CycCoeff{0, -1});
  for (i64 e = -8; e <= 8; ++e) {
    CHECK(a_pow(e) * a_pow(-e) == cyc_one);
    CHECK(a_pow(e + 2) == -a_pow(e));
    for (i64 f = -8; f <= 8; ++f) CHECK(a_pow(e) * a_pow(f) == a_pow(e + f));
  }
}

TEST_CASE("A is a primitive 4th root of unity") {
  CycCoeff a2 = cyc_a * cyc_a;
  CHECK(a2 == CycCoeff{-1, 0});
  CHECK(a2 * a2 == cyc_one);
  CHECK(-(a2 * cyc_a) == cyc_a);  // -A^3 = A, the framing-twist unit
}

TEST_CASE("CycCoeff ring laws") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    CycCoeff x{rng.range(-9, 9), rng.range(-9, 9)};
    CycCoeff y{rng.range(-9, 9), rng.range(-9, 9)};
    CycCoeff z{rng.range(-9, 9), rng.range(-9, 9)};
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == CycCoeff{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
  }
}

TEST_CASE("QuarterFrac canonical arithmetic") {
  CHECK(QuarterFrac(1, 5) + QuarterFrac(0, 1) == QuarterFrac(1, 5));
  CHECK(QuarterFrac(16, 5) + QuarterFrac(16, 5) == QuarterFrac(12, 5));  // 32/5 = 12/5 mod 20/5
  CHECK(QuarterFrac(1, 2) + QuarterFrac(7, 2) == QuarterFrac(0, 1));    // 8/2 = 4 = 0 mod 4
  CHECK(to_string(QuarterFrac(1, 2) + QuarterFrac(7, 2)) == "0/1");
  CHECK(QuarterFrac(-1, 5) == QuarterFrac(19, 5));

  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    QuarterFrac x(rng.range(-40, 40), rng.range(1, 12));
    QuarterFrac y(rng.range(-40, 40), rng.range(1, 12));
    QuarterFrac z(rng.range(-40, 40), rng.range(1, 12));
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + (-x) == QuarterFrac(0, 1));
  }
}

TEST_CASE("Z4 embeds in QuarterFrac compatibly") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(QuarterFrac(Z4(a)) + QuarterFrac(Z4(b)) == QuarterFrac(Z4(a) + Z4(b)));
}

TEST_CASE("integrality guard") {
  CHECK(QuarterFrac(15, 5).as_z4() == Z4(3));
  CHECK_THROWS_AS(QuarterFrac(1, 5).as_z4(), std::domain_error);
}

TEST_CASE("rendering and parsing round-trip") {
  CHECK(to_string(CycCoeff{0, -1}) == "0-1A");
  CHECK(to_string(CycCoeff{2, 0}) == "2+0A");
  CHECK(parse_cyc("0-1A") == CycCoeff{0, -1});
  CHECK(parse_cyc("-3+12A") == CycCoeff{-3, 12});
  CHECK(to_string(QuarterFrac(16, 5)) == "16/5");
  CHECK(parse_quarter("16/5") == QuarterFrac(16, 5));
  CHECK(parse_frac("1/5") == Frac(1, 5));
  CHECK(parse_frac("-2") == Frac(-2));
  CHECK(to_string(Frac(4, 2)) == "2");
  CHECK_THROWS_AS(parse_cyc("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cyc("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quarter("1/"), std::invalid_argument);

  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    CycCoeff c{rng.range(-99, 99), rng.range(-99, 99)};
    CHECK(parse_cyc(to_string(c)) == c);
    QuarterFrac q(rng.range(-50, 50), rng.range(1, 15));
    CHECK(parse_quarter(to_string(q)) == q);
    Frac f(rng.range(-30, 30), rng.range(1, 15));
    CHECK(parse_frac(to_string(f)) == f);
  }
}

TEST_CASE("Frac arithmetic") {
  CHECK(Frac(1, 2) + Frac(1, 3) == Frac(5, 6));
  CHECK(Frac(3, 5) * Frac(5, 3) == Frac(1));
  CHECK(Frac(-7, 5).mod_one() == Frac(3, 5));
  CHECK(Frac(8, 2).is_integer());
  CHECK_THROWS_AS(Frac(1, 0), std::invalid_argument);
}
