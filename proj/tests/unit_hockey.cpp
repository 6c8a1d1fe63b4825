#include <doctest.h>

#include "binar/hockey.hpp"

using namespace binar;

TEST_CASE("long rules on the quartic example array") {
  const BinomialArray P = make_array(InitialSequence{1, 6, 15, 20, 29});
  auto run = [&](RuleId rule, std::vector<long> params) { return rule_sum(P, rule, params); };

  auto top = run(RuleId::TopLine, {4, 4});  // 224 - 120 + 45 - 10 + 1
  CHECK(top.sum == Scalar(140));
  CHECK(top.equal);
  auto tshort = run(RuleId::TopLineShort, {2, 4, 4});  // (224 - 120 + 45) - 9
  CHECK(tshort.sum == Scalar(140));
  CHECK(tshort.equal);
  auto lower = run(RuleId::LowerRight, {4, 0});  // 1 + 7 + 28 + 84 + 224
  CHECK(lower.sum == Scalar(344));
  CHECK(lower.equal);
  auto lshort = run(RuleId::LowerRightShort, {2, 4, 0});  // (224 + 84 + 28) + 8
  CHECK(lshort.sum == Scalar(344));
  CHECK(lshort.equal);
  auto third = run(RuleId::ThirdShort, {2, 1, 3});  // 35 + (21 + 28 + 36)
  CHECK(third.sum == Scalar(120));
  CHECK(third.equal);
}

TEST_CASE("border rules on the quadratic example array") {
  const BinomialArray Q = make_array(InitialSequence{3, -6, 6});
  auto rhs_row = rule_sum(Q, RuleId::RhsRow, {3, 3});  // 6 + 6 + 3
  CHECK(rhs_row.sum == Scalar(15));
  CHECK(rhs_row.equal);
  auto rhs_col = rule_sum(Q, RuleId::RhsColumn, {2, 2});
  CHECK(rhs_col.sum == Scalar(-3));
  CHECK(rhs_col.equal);
  auto lhs_row = rule_sum(Q, RuleId::LhsRow, {3, 4});  // -15 - 42 - 84 - 144
  CHECK(lhs_row.sum == Scalar(-285));
  CHECK(lhs_row.equal);
  auto lhs_diag = rule_sum(Q, RuleId::LhsDiagonal, {4, 3});  // 15 - 42 + 42
  CHECK(lhs_diag.sum == Scalar(15));
  CHECK(lhs_diag.equal);
}

TEST_CASE("border rules require the hypotheses") {
  const BinomialArray Q = make_array(InitialSequence{3, -6, 6});
  CHECK_THROWS_AS(rule_sum(Q, RuleId::RhsRow, {1, 3}), RuleNotApplicable);    // k <= deg
  CHECK_THROWS_AS(rule_sum(Q, RuleId::LhsRow, {3, 0}), RuleNotApplicable);    // n must be > 0
  CHECK_THROWS_AS(rule_sum(Q, RuleId::RhsRow, {3}), std::invalid_argument);   // arity
}

TEST_CASE("rule names are stable CLI strings") {
  CHECK(std::string(rule_name(RuleId::TopLine)) == "TopLine");
  CHECK(std::string(rule_name(RuleId::LhsDiagonal)) == "LhsDiagonal");
}
