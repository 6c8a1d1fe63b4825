#include "binar/hockey.hpp"

namespace binar {

const char* rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::TopLine: return "TopLine";
    case RuleId::TopLineShort: return "TopLineShort";
    case RuleId::LowerRight: return "LowerRight";
    case RuleId::LowerRightShort: return "LowerRightShort";
    case RuleId::RhsRow: return "RhsRow";
    case RuleId::RhsColumn: return "RhsColumn";
    case RuleId::LhsRow: return "LhsRow";
    case RuleId::LhsDiagonal: return "LhsDiagonal";
    case RuleId::ThirdShort: return "ThirdShort";
  }
  return "?";
}

namespace {

void need(bool cond, const char* hypothesis) {
  if (!cond) throw RuleNotApplicable(std::string("hypothesis unmet: ") + hypothesis);
}

void need_arity(const std::vector<long>& params, std::size_t n, const char* rule) {
  if (params.size() != n)
    throw std::invalid_argument(std::string(rule) + ": wrong parameter count");
}

long poly_degree_or_throw(const BinomialArray& A) {
  auto d = A.poly_degree();
  need(d.has_value(), "polynomial initial condition");
  return *d;
}

RuleResult finish(Scalar sum, Scalar target) {
  const bool equal = sum == target;
  return {std::move(sum), std::move(target), equal};
}

}  // namespace

RuleResult rule_sum(const BinomialArray& A, RuleId rule, const std::vector<long>& params) {
  switch (rule) {
    case RuleId::TopLine: {
      need_arity(params, 2, "TopLine");
      const long k = params[0], n = params[1];
      need(k >= 0, "k >= 0");
      Scalar sum(0);
      for (long i = 0; i <= k; ++i) {
        Scalar t = A.entry(i, n);
        if ((k - i) % 2 != 0) t = -t;
        sum += t;
      }
      return finish(std::move(sum), A.entry(k, n - 1));
    }
    case RuleId::TopLineShort: {
      need_arity(params, 3, "TopLineShort");
      const long k1 = params[0], k2 = params[1], n = params[2];
      need(0 < k1 && k1 <= k2, "0 < k1 <= k2");
      Scalar sum(0);
      for (long i = k1; i <= k2; ++i) {
        Scalar t = A.entry(i, n);
        if ((k2 - i) % 2 != 0) t = -t;
        sum += t;
      }
      Scalar known = A.entry(k1 - 1, n - 1);
      if ((k2 - k1 + 1) % 2 != 0) known = -known;
      sum += known;
      return finish(std::move(sum), A.entry(k2, n - 1));
    }
    case RuleId::LowerRight: {
      need_arity(params, 2, "LowerRight");
      const long k = params[0], n = params[1];
      need(k >= 0, "k >= 0");
      Scalar sum(0);
      for (long i = 0; i <= k; ++i) sum += A.entry(i, n + i);
      return finish(std::move(sum), A.entry(k, n + k + 1));
    }
    case RuleId::LowerRightShort: {
      need_arity(params, 3, "LowerRightShort");
      const long k1 = params[0], k2 = params[1], n = params[2];
      need(0 < k1 && k1 <= k2, "0 < k1 <= k2");
      Scalar sum = A.entry(k1 - 1, n + k1);
      for (long i = k1; i <= k2; ++i) sum += A.entry(i, n + i);
      return finish(std::move(sum), A.entry(k2, n + k2 + 1));
    }
    case RuleId::RhsRow: {
      need_arity(params, 2, "RhsRow");
      const long k = params[0], n = params[1];
      need(n > 0, "n > 0");
      need(k > poly_degree_or_throw(A), "k > m");
      Scalar sum(0);
      for (long j = 1; j <= n; ++j) sum += A.entry(k, j);
      return finish(std::move(sum), A.entry(k + 1, n + 1));
    }
    case RuleId::RhsColumn: {
      need_arity(params, 2, "RhsColumn");
      const long k = params[0], n = params[1];
      const long m = poly_degree_or_throw(A);
      need(n > 0, "n > 0");
      need(k >= 1, "k >= 1");  // valid below the displayed region too: the
                               // column's alternating tail always telescopes
      Scalar sum(0);
      for (long i = k; i <= m + n; ++i) {
        Scalar t = A.entry(i, n);
        if ((i - k) % 2 != 0) t = -t;
        sum += t;
      }
      return finish(std::move(sum), A.entry(k - 1, n - 1));
    }
    case RuleId::LhsRow: {
      need_arity(params, 2, "LhsRow");
      const long k = params[0], n = params[1];
      need(n > 0, "n > 0");
      need(k > poly_degree_or_throw(A), "k > m");
      Scalar sum(0);
      for (long j = 1; j <= n; ++j) sum += A.entry(k, -j);
      return finish(std::move(sum), -A.entry(k + 1, -n));
    }
    case RuleId::LhsDiagonal: {
      need_arity(params, 2, "LhsDiagonal");
      const long k = params[0], n = params[1];
      need(n > 0, "n > 0");
      need(k > poly_degree_or_throw(A), "k > m");
      Scalar sum(0);
      for (long j = 1; j <= n; ++j) sum += A.entry(k - j + 1, -j);
      return finish(std::move(sum), -A.entry(k - n, -n));
    }
    case RuleId::ThirdShort: {
      need_arity(params, 3, "ThirdShort");
      const long k = params[0], n1 = params[1], n2 = params[2];
      need(k >= 0, "k >= 0");
      need(n1 <= n2, "n1 <= n2");
      Scalar sum = A.entry(k + 1, n1);
      for (long j = n1; j <= n2; ++j) sum += A.entry(k, j);
      return finish(std::move(sum), A.entry(k + 1, n2 + 1));
    }
  }
  throw std::invalid_argument("rule_sum: unknown rule");
}

}  // namespace binar
