#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binar/binomial.hpp"
#include "binar/scalar.hpp"
#include "binar/sequence.hpp"

using binar::binomial;
using binar::catalan;
using binar::InitialSequence;
using binar::Scalar;
using binar::SeqVec;

TEST_CASE("scalar canonical serialization and parsing") {
  CHECK(Scalar(7).str() == "7");
  CHECK(Scalar(-3).str() == "-3");
  CHECK((Scalar(1) / Scalar(2)).str() == "1/2");
  CHECK((Scalar(-4) / Scalar(6)).str() == "-2/3");
  CHECK(Scalar::parse("10/4").str() == "5/2");
  CHECK(Scalar::parse("-0") == Scalar(0));
  CHECK(Scalar::parse("+3/9") == Scalar(1) / Scalar(3));
  CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic is exact") {
  Scalar third = Scalar(1) / Scalar(3);
  CHECK(third + third + third == Scalar(1));
  CHECK(Scalar(2) / Scalar(3) - third == third);
  CHECK((third * Scalar(3)).is_integer());
  CHECK(binar::abs(Scalar(-5) / Scalar(7)) == Scalar(5) / Scalar(7));
  CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("extended binomial coefficients") {
  CHECK(binomial(5, 2) == Scalar(10));
  CHECK(binomial(5, 0) == Scalar(1));
  CHECK(binomial(5, 7) == Scalar(0));
  CHECK(binomial(5, -1) == Scalar(0));
  CHECK(binomial(-1, 3) == Scalar(-1));
  CHECK(binomial(-2, 3) == Scalar(-4));
  CHECK(binomial(-3, 2) == Scalar(6));
  // Pascal recurrence across the sign boundary.
  for (long n = -6; n <= 6; ++n)
    for (long k = 0; k <= 8; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("catalan numbers: Segner recurrence cross-checked") {
  CHECK(catalan(0) == Scalar(1));
  CHECK(catalan(3) == Scalar(5));
  CHECK(catalan(10) == Scalar(16796));
  CHECK(catalan(12) == Scalar(208012));
}

TEST_CASE("initial sequence trimming, terms and parsing") {
  InitialSequence p{3, -2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p.term(0) == Scalar(3));
  CHECK(p.term(1) == Scalar(-2));
  CHECK(p.term(5) == Scalar(0));
  CHECK(p == InitialSequence::parse("3,-2"));
  CHECK(InitialSequence{}.is_zero());
  CHECK_FALSE(InitialSequence::parse("0,0,1/2").is_zero());
}

TEST_CASE("polynomial division by x+1") {
  // 2x^3 + 5x^2 + x - 6 = (x+1)(2x^2 + 3x - 2) - 4
  const auto [q, r] = binar::poly::divide_x_plus_1(SeqVec{-6, 1, 5, 2});
  CHECK(q == SeqVec{-2, 3, 2});
  CHECK(r == Scalar(-4));
}
