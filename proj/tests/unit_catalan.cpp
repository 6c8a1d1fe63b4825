#include <doctest.h>

#include <algorithm>

#include "binar/catalan.hpp"
#include "binar/registry.hpp"

using namespace binar;

TEST_CASE("proper zero loci of degree-one arrays") {
  // B(1-x): zeros along (l, 2l-1).
  const ZeroLocus z = proper_zeros(1, 1, 12, -12, 20);
  CHECK(z.match);
  CHECK(std::count(z.scanned.begin(), z.scanned.end(), std::make_pair(3L, 5L)) == 1);
  // B(1+2x): zeros along (t, -t-1).
  const ZeroLocus w = proper_zeros(1, -2, 12, -20, 12);
  CHECK(w.match);
  CHECK(std::count(w.scanned.begin(), w.scanned.end(), std::make_pair(2L, -3L)) == 1);
  // 0 < |s| < r: no proper zeros at all.
  const ZeroLocus none = proper_zeros(3, -2, 12, -12, 12);
  CHECK(none.match);
  CHECK(none.scanned.empty());
}

TEST_CASE("generalized catalan numbers") {
  for (long t = 1; t <= 6; ++t) CHECK(generalized_catalan(1, 1, t) == catalan(t));
  CHECK(generalized_catalan(2, 2, 3) == Scalar(2) * catalan(6));
  CHECK(generalized_catalan(2, 1, 2) == Scalar(3));  // (1/2) C(6, 3) - style check value
}

TEST_CASE("palindromy predicates") {
  CHECK(is_palindromic(InitialSequence{1, 7, 1}));
  CHECK(is_skew_palindromic(InitialSequence{1, 0, -1}));
  CHECK(is_skew_palindromic(InitialSequence{2, -5, 5, -2}));
  CHECK_FALSE(is_palindromic(InitialSequence{1, 2}));
  CHECK(is_palindromic(InitialSequence{}));  // zero polynomial: both, by convention
  CHECK(is_skew_palindromic(InitialSequence{}));
}

TEST_CASE("shapiro triangle values") {
  CHECK(shapiro_entry(4, 2) == Scalar(14));
  CHECK(shapiro_entry(5, 3) == Scalar(27));
  CHECK(shapiro_entry(5, 1) == Scalar(42));
  CHECK(shapiro_entry(6, 1) == Scalar(132));
  CHECK(shapiro_entry(3, 3) == Scalar(1));
}

TEST_CASE("near-zero sequences beside diagonal zero progressions") {
  CHECK(c_sequence(1, 4) == catalan(4));
  CHECK(c_sequence(2, 4) == catalan(5));
  CHECK(c_sequence(3, 2) == Scalar(3));
  for (long t = 1; t <= 6; ++t) CHECK(near_zero_cg(5, 1, t) == Scalar(5) * catalan(t));
  CHECK(near_zero_cg(5, 3, 1) == near_zero_cg_alt_sum(5, 3, 1));
  CHECK(ballot_diagonal(0, 5) == catalan(5));
  CHECK(ballot_diagonal(1, 1) == Scalar(2));
}

TEST_CASE("aeration and hexagon initial conditions") {
  CHECK(aeration(2, 1) == InitialSequence{1, 0, -1});
  CHECK(aeration(2, 3) == InitialSequence{1, 0, -3, 0, 3, 0, -1});
  CHECK(cg_initial_condition(3, 1) == InitialSequence{3, -3});
  CHECK_THROWS(cg_initial_condition(3, 3));
  const InitialSequence d = cg_initial_condition(5, 3);
  CHECK(is_skew_palindromic(d));
  const BinomialArray A = make_array(d);
  for (long t = 1; t <= 5; ++t) CHECK(skew_near_zero(d, t) == A.entry(1 + t, 2 * t));
}

TEST_CASE("named sequence registry") {
  CHECK(named_sequence("catalan", {}, 5) == SeqVec{1, 1, 2, 5, 14});
  CHECK(named_sequence("crs", {{"r", 1}, {"s", 1}}, 4) == SeqVec{1, 2, 5, 14});
  CHECK(named_sequence("shapiro-row", {{"n", 4}}, 4) == SeqVec{14, 14, 6, 1});
  CHECK(named_sequence("cseq", {{"j", 2}}, 3) == SeqVec{2, 5, 14});
  CHECK(named_sequence("aeration", {{"r", 2}, {"s", 1}}, 4) == SeqVec{1, 0, -1, 0});
  CHECK_THROWS_AS(named_sequence("nope", {}, 3), std::invalid_argument);
  CHECK_THROWS_AS(named_sequence("crs", {{"r", 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(named_sequence("catalan", {{"x", 1}}, 3), std::invalid_argument);
}
