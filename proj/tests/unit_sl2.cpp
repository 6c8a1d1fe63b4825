#include <doctest.h>

#include "binar/sl2.hpp"

using namespace binar;

TEST_CASE("f action and S involution") {
  CHECK(f_action(RepVector::basis(2, 0)) == RepVector::basis(2, 1));
  CHECK(f_action(RepVector::basis(2, 2)) == RepVector::zero(2));
  RepVector v = RepVector::zero(2);
  v.coeffs = SeqVec{1, 0, 1};  // phi + f^2 phi
  CHECK(f_action(v) == RepVector::basis(2, 1));
  CHECK(s_involution(s_involution(v)) == v);
  CHECK(s_involution(RepVector::basis(1, 1)).coeffs == SeqVec{0, -1});
  CHECK(s_involution(RepVector::basis(3, 2)) == RepVector::basis(3, 2));
}

TEST_CASE("bilinear forms on the basis") {
  CHECK(invariant_form(RepVector::basis(2, 2), RepVector::basis(2, 0)) == Scalar(1));
  CHECK(invariant_form(RepVector::basis(2, 1), RepVector::basis(2, 1)) == Scalar(-1));
  CHECK(invariant_form(RepVector::basis(2, 0), RepVector::basis(2, 1)) == Scalar(0));
  CHECK(primed_form(RepVector::basis(2, 1), RepVector::basis(2, 1)) == Scalar(1));
  CHECK(primed_form(RepVector::basis(1, 0), RepVector::basis(1, 0)) == Scalar(0));
  RepVector u = RepVector::zero(1), w = RepVector::zero(2);
  CHECK_THROWS(invariant_form(u, w));
}

TEST_CASE("B_f and its inverse") {
  RepVector phi = RepVector::basis(2, 0);
  RepVector expect = RepVector::zero(2);
  expect.coeffs = SeqVec{1, 1, 0};
  CHECK(b_f(phi) == expect);
  expect.coeffs = SeqVec{1, -1, 1};
  CHECK(b_f_inverse(phi) == expect);
  RepVector v = RepVector::zero(3);
  v.coeffs = SeqVec{4, -7, 0, 2};
  CHECK(b_f_inverse(b_f(v)) == v);
  CHECK(b_f(b_f_inverse(v)) == v);
}

TEST_CASE("pairing check realizes the Cauchy product") {
  auto res = pairing_check(SeqVec{1, 1, 1}, SeqVec{1, 1, 1}, 2);
  CHECK(res.equal);
  CHECK(res.rhs == Scalar(3));
  auto unit = pairing_check(SeqVec{1}, SeqVec{0, 0, 0, 1}, 3);  // p = 1, q = X^n
  CHECK(unit.equal);
  CHECK(unit.rhs == Scalar(1));
  CHECK_THROWS(pairing_check(SeqVec{1, 2, 3}, SeqVec{1}, 1));  // deg p > n
}
