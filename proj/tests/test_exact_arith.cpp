#include <doctest.h>

#include <random>

#include "fibsum/quadratic.hpp"
#include "fibsum/rational.hpp"

using fibsum::BigInt;
using fibsum::BigRational;
using fibsum::QuadRat;

namespace {

std::mt19937_64 rng(20240801);

long long rnd(long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

QuadRat random_quad() {
  long long d = rnd(1, 1000000);
  return QuadRat(fibsum::to_bigint(rnd(-1000000, 1000000)),
                 fibsum::to_bigint(rnd(-1000000, 1000000)), fibsum::to_bigint(d));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
  CHECK(BigRational(143, 960) * BigRational(960, 143) == BigRational(1));
  CHECK(BigRational(1, 3).cmp(BigRational::parse("1288981/35850395750400")) > 0);
  CHECK(BigRational(6, 2).str() == "3");
  CHECK(BigRational(12, -9).str() == "-4/3");
  CHECK((BigRational(5, 6) - BigRational(5, 6)).str() == "0");
  CHECK(BigRational(-5, 3).abs() == BigRational(5, 3));
  CHECK(-BigRational(-5, 3) == BigRational(5, 3));
  CHECK(BigRational(3, 7).inverse() == BigRational(7, 3));
}

TEST_CASE("rational canonical form") {
  BigRational z(0, 5);
  CHECK(z.numerator() == 0);
  CHECK(z.denominator() == 1);
  for (int i = 0; i < 500; ++i) {
    BigRational a(rnd(-1000, 1000), rnd(1, 1000));
    BigRational b(rnd(-1000, 1000), rnd(1, 1000));
    for (const BigRational& v : {a + b, a - b, a * b}) {
      CHECK(sgn(v.denominator()) > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("rational division by zero is a named error") {
  CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0), fibsum::DomainError);
  CHECK_THROWS_AS(BigRational(0).inverse(), fibsum::DomainError);
  CHECK_THROWS_WITH_AS(BigRational(BigInt(3), BigInt(0)),
                       "BigRational: zero denominator in 3/0", fibsum::DomainError);
}

TEST_CASE("rational parse round trip") {
  for (int i = 0; i < 200; ++i) {
    BigRational v(rnd(-100000, 100000), rnd(1, 100000));
    CHECK(BigRational::parse(v.str()) == v);
  }
  CHECK_THROWS_AS(BigRational::parse("7/0"), fibsum::ParseError);
  CHECK_THROWS_AS(BigRational::parse("a/b"), fibsum::ParseError);
}

TEST_CASE("quadratic basics") {
  QuadRat phi = QuadRat::phi();
  CHECK(phi * phi == QuadRat(3, 1, 2));          // phi^2 = phi + 1
  CHECK(phi + phi.conj() == QuadRat(1));         // conjugate sum
  CHECK(QuadRat::sqrt5().cmp(QuadRat(BigRational(9, 4))) < 0);  // 5 < 81/16
  CHECK(QuadRat::sqrt5().cmp(QuadRat(BigRational(11, 5))) > 0);  // 5 > 121/25
  CHECK(QuadRat(4, 2, 2) == QuadRat(2, 1, 1));   // canonical gcd reduction
  CHECK(QuadRat(1, 1, -2) == -QuadRat::phi());   // d normalized positive
}

TEST_CASE("quadratic embedding of rationals") {
  QuadRat e(BigRational(5, 6));
  CHECK(e.a() == 5);
  CHECK(e.b() == 0);
  CHECK(e.d() == 6);
  CHECK(e.to_rational() == BigRational(5, 6));
  CHECK(QuadRat(BigRational(0)).d() == 1);
  QuadRat neg(BigRational(-1, 18));
  CHECK(neg.a() == -1);
  CHECK(neg.d() == 18);
  CHECK_THROWS_AS(QuadRat::sqrt5().to_rational(), fibsum::DomainError);
}

TEST_CASE("quadratic field axioms on random triples") {
  for (int i = 0; i < 1000; ++i) {
    QuadRat x = random_quad(), y = random_quad(), z = random_quad();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QuadRat(1));
      CHECK(x / x == QuadRat(1));
    }
  }
  CHECK_THROWS_AS(QuadRat(1) / QuadRat(0), fibsum::DomainError);
}

TEST_CASE("quadratic ordering agrees with sign of difference") {
  for (int i = 0; i < 1000; ++i) {
    QuadRat x = random_quad(), y = random_quad();
    CHECK(x.cmp(y) == (x - y).sign());
  }
  // mixed-sign cases where the a^2 vs 5 b^2 comparison decides
  CHECK(QuadRat(-9, 4, 1).sign() < 0);   // 81 > 80
  CHECK(QuadRat(-8, 4, 1).sign() > 0);   // 64 < 80
  CHECK(QuadRat(9, -4, 1).sign() > 0);
  CHECK(QuadRat(8, -4, 1).sign() < 0);
}

TEST_CASE("decimal rendering") {
  CHECK(QuadRat::phi().to_decimal(10) == "1.6180339887");
  CHECK(QuadRat(BigRational(1, 2)).to_decimal(3) == "0.500");
  CHECK(QuadRat::sqrt5().to_decimal(5) == "2.23607");
  CHECK(QuadRat(BigRational(-1, 2)).to_decimal(3) == "-0.500");
  // round half to even on exact rational midpoints
  CHECK(QuadRat(BigRational(1, 8)).to_decimal(2) == "0.12");
  CHECK(QuadRat(BigRational(3, 8)).to_decimal(2) == "0.38");
  CHECK_THROWS_AS(QuadRat(1).to_decimal(0), fibsum::DomainError);

  std::string zeros = "0.";
  zeros.append(50, '0');
  for (int i = 0; i < 50; ++i) {
    QuadRat x = random_quad();
    CHECK((x - x).to_decimal(50) == zeros);
  }
}

TEST_CASE("quadratic strings and parsing") {
  CHECK(QuadRat::phi().str() == "(1+1*sqrt5)/2");
  CHECK(QuadRat(2, -1, 3).str() == "(2-1*sqrt5)/3");
  CHECK(QuadRat(BigRational(143, 960)).str() == "143/960");
  for (int i = 0; i < 200; ++i) {
    QuadRat v = random_quad();
    CHECK(QuadRat::parse(v.str()) == v);
  }
  CHECK_THROWS_AS(QuadRat::parse("(1+sqrt5)/2"), fibsum::ParseError);
}
