#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "binar/array.hpp"

namespace binar {

// The nine hockey stick rules: six long and three short.
enum class RuleId {
  TopLine,         // params {k, n}:  sum (-1)^{k-i} a_{i,n}, i=0..k  ->  a_{k,n-1}
  TopLineShort,    // params {k1, k2, n}: partial alternating sum continued from a_{k1-1,n-1}
  LowerRight,      // params {k, n}:  sum a_{i,n+i}, i=0..k  ->  a_{k,n+k+1}
  LowerRightShort, // params {k1, k2, n}: a_{k1-1,n+k1} + sum_{i=k1..k2} a_{i,n+i} -> a_{k2,n+k2+1}
  RhsRow,          // params {k, n}:  sum a_{k,j}, j=1..n  ->  a_{k+1,n+1}
  RhsColumn,       // params {k, n}:  sum (-1)^{i-k} a_{i,n}, i=k..m+n  ->  a_{k-1,n-1}
  LhsRow,          // params {k, n}:  sum a_{k,-j}, j=1..n  ->  -a_{k+1,-n}
  LhsDiagonal,     // params {k, n}:  sum a_{k-j+1,-j}, j=1..n  ->  -a_{k-n,-n}
  ThirdShort,      // params {k, n1, n2}: a_{k+1,n1} + sum a_{k,j}, j=n1..n2 -> a_{k+1,n2+1}
};

const char* rule_name(RuleId rule);

// Thrown when a rule's hypotheses are unmet (distinct from an identity
// failing); the message names the failed hypothesis.
class RuleNotApplicable : public std::domain_error {
 public:
  explicit RuleNotApplicable(const std::string& what) : std::domain_error(what) {}
};

struct RuleResult {
  Scalar sum;     // value of the rule's summation template
  Scalar target;  // the claimed right-hand-side entry
  bool equal;
};

RuleResult rule_sum(const BinomialArray& A, RuleId rule, const std::vector<long>& params);

}  // namespace binar
