#include <doctest.h>

#include <random>

#include "qcomm/cyclotomic.hpp"

using namespace qcomm;

TEST_CASE("field axioms hold on sampled values") {
  const CycloField& f = CycloField::of_order(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  auto sample = [&] {
    std::vector<Rational> cs;
    for (int i = 0; i < f.degree(); ++i) cs.emplace_back(num(rng), den(rng));
    return Scalar(f, cs);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = sample();
    Scalar b = sample();
    Scalar c = sample();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
  }
}

TEST_CASE("root of unity relations") {
  const CycloField& f = CycloField::of_order(3);
  Scalar q = Scalar::q(f);
  CHECK(Scalar(1) + q + q * q == Scalar(0));
  CHECK(Scalar::q(f, 3) == Scalar(1));
  CHECK(Scalar::q(f, 5) == Scalar::q(f, 2));
  CHECK(Scalar::q(f, -1) == Scalar::q(f, 2));
  for (long k = -7; k <= 7; ++k)
    CHECK(Scalar::q(f, k) * Scalar::q(f, -k) == Scalar(1));
}

TEST_CASE("conjugation is the inverse-power automorphism") {
  const CycloField& f = CycloField::of_order(3);
  Scalar q = Scalar::q(f);
  CHECK(q.conj() == Scalar::q(f, 2));
  Scalar v = Scalar(2) * q - Scalar(Rational(1, 3));
  CHECK(v.conj().conj() == v);
  Scalar w = q + Scalar(5);
  CHECK((v * w).conj() == v.conj() * w.conj());
  CHECK((v + w).conj() == v.conj() + w.conj());
  CHECK(Scalar(Rational(7, 2)).conj() == Scalar(Rational(7, 2)));
}

TEST_CASE("inverses and division by zero") {
  const CycloField& f = CycloField::of_order(3);
  Scalar q = Scalar::q(f);
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
  Scalar d = Scalar(1) - q;
  CHECK(d * d.inv() == Scalar(1));
  CHECK(q / q == Scalar(1));
  CHECK((q - q).is_zero());
}

TEST_CASE("unbound constants combine with bound values") {
  const CycloField& f = CycloField::of_order(3);
  Scalar q = Scalar::q(f);
  CHECK(Scalar(3) == Scalar(3).bind(f));
  CHECK(Scalar(2) * q == q + q);
  CHECK(Scalar(Rational(1, 2)) + Scalar(Rational(1, 2)) == Scalar(1));
}

TEST_CASE("common-denominator form") {
  const CycloField& f = CycloField::of_order(3);
  Scalar s = Scalar(Rational(2, 3)) * Scalar::q(f) + Scalar(Rational(-1, 6));
  Scalar::LcdForm lcd = s.lcd_form();
  CHECK(lcd.den == 6);
  REQUIRE(lcd.nums.size() == 2);
  CHECK(lcd.nums[0] == -1);
  CHECK(lcd.nums[1] == 4);
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(Rational(3) * big, OverflowError);
}

TEST_CASE("order five instantiates the same interface") {
  const CycloField& f5 = CycloField::of_order(5);
  CHECK(f5.degree() == 4);
  Scalar sum = Scalar(1);
  for (int k = 1; k < 5; ++k) sum += Scalar::q(f5, k);
  CHECK(sum == Scalar(0));
  CHECK(Scalar::q(f5, 5) == Scalar(1));
  CHECK(Scalar::q(f5, 2) * Scalar::q(f5, 3) == Scalar(1));
}

TEST_CASE("even and tiny orders are rejected") {
  CHECK_THROWS_AS(CycloField::of_order(4), std::invalid_argument);
  CHECK_THROWS_AS(CycloField::of_order(1), std::invalid_argument);
}
