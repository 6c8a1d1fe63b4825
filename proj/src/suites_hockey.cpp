#include <sstream>

#include "binar/binomial.hpp"
#include "binar/hockey.hpp"
#include "suite_common.hpp"

namespace binar::detail {

namespace {

std::string params_str(RuleId rule, const std::vector<long>& params, long which_array) {
  std::ostringstream os;
  os << rule_name(rule) << ",array=" << which_array;
  for (std::size_t i = 0; i < params.size(); ++i) os << ",p" << i << "=" << params[i];
  return os.str();
}

// Initial condition that is not a polynomial for practical purposes: a long
// Catalan prefix, probed only far from the truncation point.
InitialSequence catalan_prefix() {
  SeqVec c;
  for (long t = 0; t < 40; ++t) c.push_back(catalan(t));
  return InitialSequence(std::move(c));
}

void random_rule_family(SuiteReport& out, std::uint64_t seed, long cases, RuleId rule) {
  const bool needs_poly = rule == RuleId::RhsRow || rule == RuleId::RhsColumn ||
                          rule == RuleId::LhsRow || rule == RuleId::LhsDiagonal;
  Family fam(rule_name(rule),
             needs_poly ? "random polynomial arrays, k > deg, n in [1,6]"
                        : "random polynomial and truncated-series arrays, k <= 8, |n| <= 6");
  auto rng = family_rng(seed, rule_name(rule));
  const long reps = std::max<long>(30, cases / 9);
  const BinomialArray series = make_array(catalan_prefix());
  for (long c = 0; c < reps; ++c) {
    const bool use_series = !needs_poly && rand_range(rng, 0, 3) == 0;
    const long m = rand_range(rng, 0, 5);
    const BinomialArray A = use_series ? series : make_array(rand_poly(rng, m));
    std::vector<long> params;
    switch (rule) {
      case RuleId::TopLine:
      case RuleId::LowerRight:
        params = {rand_range(rng, 0, 8), rand_range(rng, -6, 6)};
        break;
      case RuleId::TopLineShort:
      case RuleId::LowerRightShort: {
        const long k1 = rand_range(rng, 1, 6);
        params = {k1, rand_range(rng, k1, 8), rand_range(rng, -6, 6)};
        break;
      }
      case RuleId::RhsRow:
      case RuleId::RhsColumn:
      case RuleId::LhsRow:
      case RuleId::LhsDiagonal:
        params = {m + rand_range(rng, 1, 6), rand_range(rng, 1, 6)};
        break;
      case RuleId::ThirdShort: {
        const long n1 = rand_range(rng, -5, 4);
        params = {rand_range(rng, 0, 6), n1, rand_range(rng, n1, 5)};
        break;
      }
    }
    try {
      const RuleResult res = rule_sum(A, rule, params);
      fam.check(params_str(rule, params, use_series ? 1 : 0), res.sum, res.target);
    } catch (const RuleNotApplicable&) {
      fam.skip();
    }
  }
  out.families.push_back(fam.take());
}

void anchors(SuiteReport& out) {
  Family fam("HockeyAnchors", "fixed subarray sums for the displayed example arrays");
  const BinomialArray P = make_array(InitialSequence{1, 6, 15, 20, 29});
  const BinomialArray Q = make_array(InitialSequence{3, -6, 6});  // 6x^2-6x+3

  auto anchor = [&fam](const BinomialArray& A, RuleId rule, std::vector<long> params,
                       long expected) {
    const RuleResult res = rule_sum(A, rule, params);
    fam.check(std::string(rule_name(rule)) + " sum", res.sum, Scalar(expected));
    fam.check(std::string(rule_name(rule)) + " target", res.target, Scalar(expected));
  };

  anchor(P, RuleId::TopLine, {4, 4}, 140);         // 224-120+45-10+1
  anchor(P, RuleId::TopLineShort, {2, 4, 4}, 140); // (224-120+45)-9
  anchor(P, RuleId::LowerRight, {4, 0}, 344);      // 1+7+28+84+224
  anchor(P, RuleId::LowerRightShort, {2, 4, 0}, 344);
  anchor(P, RuleId::ThirdShort, {2, 1, 3}, 120);   // 35+(21+28+36)
  anchor(Q, RuleId::RhsRow, {3, 3}, 15);           // 6+6+3
  anchor(Q, RuleId::RhsColumn, {2, 2}, -3);        // -3-6+6
  anchor(Q, RuleId::LhsRow, {3, 4}, -285);         // -15-42-84-144
  anchor(Q, RuleId::LhsDiagonal, {4, 3}, 15);      // 15-42+42
  out.families.push_back(fam.take());
}

}  // namespace

void run_hockey(SuiteReport& out, std::uint64_t seed, long cases) {
  for (RuleId rule :
       {RuleId::TopLine, RuleId::TopLineShort, RuleId::LowerRight, RuleId::LowerRightShort,
        RuleId::RhsRow, RuleId::RhsColumn, RuleId::LhsRow, RuleId::LhsDiagonal,
        RuleId::ThirdShort})
    random_rule_family(out, seed, cases, rule);
  anchors(out);
}

}  // namespace binar::detail
