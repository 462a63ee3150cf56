#include <catch2/catch_amalgamated.hpp>

#include "modcone/combinatorics.hpp"
#include "modcone/rational.hpp"
#include "modcone/rng.hpp"

using namespace modcone;

TEST_CASE("rationals stay reduced with positive denominator") {
  Rational r(Integer(4), Integer(-6));
  CHECK(r.num() == -2);
  CHECK(r.den() == 3);

  Rational z(Integer(0), Integer(17));
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);

  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(7, 2) - Rational(7, 2)).is_zero());
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact on seeded triples") {
  Rng rng(20240817);
  for (int i = 0; i < 500; ++i) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("gaussian rationals") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(Rational(-1)));
  GaussianRational x(Rational(1, 2), Rational(-3));
  CHECK(x + x.conj() == GaussianRational(Rational(1)));
  CHECK((x - x).is_zero());
  GaussianRational y(Rational(2), Rational(5));
  CHECK(x * y == y * x);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);  // k > n convention
  CHECK(binomial(50, 25) == Integer("126410606437752"));
  CHECK(factorial(8) == 40320);
}

TEST_CASE("rng streams are deterministic and forkable") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());

  Rng c(7);
  Rng f1 = c.fork(0), f2 = c.fork(1);
  CHECK(f1.next() != f2.next());
  // sampling convention: numerator in [-20, 20], denominator in [1, 10]
  Rng d(99);
  for (int i = 0; i < 200; ++i) {
    Rational r = d.rational();
    CHECK(r.den() <= 10);
    Rational bound(20);
    CHECK((r <= bound && -bound <= r));
  }
}
