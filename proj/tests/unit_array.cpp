#include <doctest.h>

#include "binar/array.hpp"
#include "binar/binomial.hpp"

using namespace binar;

TEST_CASE("entries: Pascal block and B(1-x) anchors") {
  const BinomialArray pascal = make_array(InitialSequence{1});
  for (long k = 0; k <= 8; ++k)
    for (long n = -8; n <= 8; ++n) CHECK(pascal.entry(k, n) == binomial(n, k));

  const BinomialArray A = make_array(InitialSequence{1, -1});
  CHECK(A.entry(3, 6) == Scalar(5));
  CHECK(A.entry(1, -1) == Scalar(-2));
  CHECK(A.entry(2, 4) == Scalar(2));
  CHECK(A.entry(0, -5) == Scalar(1));
  CHECK(A.entry(-1, 3) == Scalar(0));  // no rows above the top line
  for (long t = 1; t <= 6; ++t) {
    CHECK(A.entry(t, 2 * t - 1) == Scalar(0));
    CHECK(A.entry(t, 2 * t) == catalan(t));
  }
}

TEST_CASE("windows satisfy the Pascal recurrence and serialize round-trip") {
  const long before = Window::pascal_checks_performed();
  const BinomialArray A = make_array(InitialSequence{3, -2});
  const Window w = A.window(0, 6, -4, 4);
  CHECK(Window::pascal_checks_performed() > before);
  for (long k = 0; k <= 6; ++k)
    for (long n = -4; n <= 4; ++n) CHECK(w.at(k, n) == A.entry(k, n));
  const Window back = Window::from_csv(w.to_csv());
  CHECK(back == w);
  CHECK(back.to_csv() == w.to_csv());
}

TEST_CASE("window csv header and example column") {
  const BinomialArray A = make_array(InitialSequence{3, -2, 0, 0});
  const Window w = A.window(0, 3, 0, 2);
  const std::string csv = w.to_csv();
  CHECK(csv.rfind("k\\n,0,1,2\n", 0) == 0);
  // Column 2 holds the transformed sequence (3, 4, -1, -2).
  CHECK(w.at(0, 2) == Scalar(3));
  CHECK(w.at(1, 2) == Scalar(4));
  CHECK(w.at(2, 2) == Scalar(-1));
  CHECK(w.at(3, 2) == Scalar(-2));
}

TEST_CASE("taylor coefficients at -1") {
  CHECK(taylor_at_minus_one(InitialSequence{-6, 1, 5, 2}) == SeqVec{-4, -3, -1, 2});
  CHECK(taylor_at_minus_one(InitialSequence{2, 5, 1, -6}) == SeqVec{4, -15, 19, -6});
}

TEST_CASE("linear combination and basis decomposition") {
  const BinomialArray A = make_array(InitialSequence{2, 0, -3});
  const BinomialArray B =
      linear_combination({{Scalar(2), pascal_basis(0)}, {Scalar(-3), pascal_basis(2)}});
  for (long k = 0; k <= 6; ++k)
    for (long n = -5; n <= 5; ++n) CHECK(A.entry(k, n) == B.entry(k, n));
}

TEST_CASE("origin shift composes") {
  const BinomialArray A = make_array(InitialSequence{1, 2, -1});
  const BinomialArray S = shift_origin(shift_origin(A, 3), -1);
  for (long k = 0; k <= 5; ++k)
    for (long n = -4; n <= 4; ++n) CHECK(S.entry(k, n) == A.entry(k, n + 2));
}

TEST_CASE("reverse involution and trapezoid interchange") {
  const InitialSequence p{2, 1, 5, -6};
  const BinomialArray A = make_array(p);
  const BinomialArray R = reverse_involution(A);
  const long m = *p.degree();
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n + m; ++k) CHECK(R.entry(k, n) == A.entry(n + m - k, n));
  // a_0 != 0, so applying it twice restores the array.
  const BinomialArray RR = reverse_involution(R);
  for (long k = 0; k <= 6; ++k)
    for (long n = 0; n <= 6; ++n) CHECK(RR.entry(k, n) == A.entry(k, n));

  // Degree-1 map B(-sx+r) -> B((r+s)x+r) with r = 1, s = 2.
  const BinomialArray T = trapezoid_interchange(make_array(InitialSequence{1, -2}));
  CHECK(T.base_initial() == InitialSequence{1, 3});
}

TEST_CASE("border profile") {
  const auto b = border_profile(make_array(InitialSequence{2, 1, 5, -6}));
  CHECK(b.top == Scalar(2));
  CHECK(b.diag == Scalar(-6));
  CHECK(b.col_minus_one_abs == Scalar(12));
}
