#include <doctest.h>

#include "binar/binomial.hpp"
#include "binar/transform.hpp"

using namespace binar;

TEST_CASE("forward and inverse transforms: fixed values") {
  CHECK(inverse_transform(SeqVec{1, 10, 45, 120, 224}, 1) == SeqVec{1, 9, 36, 84, 140});
  CHECK(inverse_transform(SeqVec{1, -1, 0, 0, 0}, 2) == SeqVec{1, -3, 5, -7, 9});
  CHECK(forward_transform(SeqVec{1, -1, 0, 0, 0}, 1) == SeqVec{1, 0, -1, 0, 0});
  CHECK(forward_transform(SeqVec{1, 0, 0}, 3) == SeqVec{1, 3, 3});
}

TEST_CASE("transform round trip on fixed prefixes") {
  const SeqVec a{3, -2, 7, 0, 5, -9};
  for (long n = 0; n <= 8; ++n) {
    CHECK(inverse_transform(forward_transform(a, n), n) == a);
    CHECK(forward_transform(inverse_transform(a, n), n) == a);
  }
}

TEST_CASE("transform entries for negative shifts use the binomial series") {
  const SeqVec e{1, 0, 0, 0, 0, 0, 0};
  for (long k = 0; k <= 6; ++k) CHECK(transform_entry(e, -3, k) == binomial(-3, k));
  CHECK(t_sequence(-3, 7) == inverse_transform(e, 3));
}

TEST_CASE("t sequences multiply to the unit sequence") {
  const SeqVec t3 = t_sequence(3, 7), tm3 = t_sequence(-3, 7);
  for (long m = 0; m <= 6; ++m)
    CHECK(cauchy_product(t3, tm3, m) == (m == 0 ? Scalar(1) : Scalar(0)));
}

TEST_CASE("the five rotated dot products of the worked example all equal -13") {
  const SeqVec a{3, 4, -1, -2}, b{2, 2, -1, -1};
  CHECK(cauchy_product(a, b, 3) == Scalar(-13));
  const auto cols = vandermonde_expand(a, b, 3, -2, 2);
  CHECK(cols.size() == 5);
  for (const auto& col : cols) CHECK(col.dot == Scalar(-13));
  const auto df = dwyer_frankel_check(a, b, 2, 3);
  CHECK(df.equal);
  CHECK(df.lhs == Scalar(-13));
}

TEST_CASE("multi factor and zero propagation") {
  const SeqVec a{1, 2, 3, 4}, b{2, -1, 0, 5}, c{0, 1, -2, 1};
  CHECK(multi_factor_check({a, b, c}, {1, -2, 1}, 3));
  // (a*d)_1 = 0 for d = (2, -4, ...): zero propagates over all shifts.
  const SeqVec d{2, -4, 1, 1};
  auto res = zero_propagation_check(a, d, 1, -5, 5);
  REQUIRE(res.has_value());
  CHECK(*res);
  CHECK_FALSE(zero_propagation_check(a, b, 1, -2, 2).has_value());
}
