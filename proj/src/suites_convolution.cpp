#include <cstdlib>
#include <sstream>

#include "binar/array.hpp"
#include "binar/binomial.hpp"
#include "binar/transform.hpp"
#include "suite_common.hpp"

namespace binar::detail {

namespace {

// Prefix of the binomial series (1+x)^m, built independently of the
// closed-form binomial routine: additive Pascal steps for m >= 0, explicit
// long division of 1 by (1+x)^{-m} otherwise.
SeqVec series_prefix(long m, long len) {
  SeqVec pos{Scalar(1)};
  for (long step = 0; step < std::labs(m); ++step) {
    SeqVec next(pos.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < pos.size()) next[k] += pos[k];
      if (k >= 1) next[k] += pos[k - 1];
    }
    pos = std::move(next);
  }
  SeqVec out(static_cast<std::size_t>(len), Scalar(0));
  if (m >= 0) {
    for (std::size_t k = 0; k < out.size() && k < pos.size(); ++k) out[k] = pos[k];
    return out;
  }
  out[0] = Scalar(1);
  for (std::size_t k = 1; k < out.size(); ++k) {
    Scalar acc(0);
    for (std::size_t j = 1; j <= k && j < pos.size(); ++j) acc += pos[j] * out[k - j];
    out[k] = -acc;
  }
  return out;
}

void chu_vandermonde(SuiteReport& out) {
  Family fam("ChuVandermonde", "full grid m, n in [-10,10], k in [0,12]");
  for (long m = -10; m <= 10; ++m) {
    const SeqVec pm = series_prefix(m, 13);
    for (long n = -10; n <= 10; ++n) {
      const SeqVec pn = series_prefix(n, 13);
      for (long k = 0; k <= 12; ++k) {
        Scalar sum(0);
        for (long i = 0; i <= k; ++i) sum += binomial(m, i) * binomial(n, k - i);
        Scalar oracle(0);
        for (long i = 0; i <= k; ++i)
          oracle += pm[static_cast<std::size_t>(i)] * pn[static_cast<std::size_t>(k - i)];
        std::ostringstream os;
        os << "m=" << m << ",n=" << n << ",k=" << k;
        const bool ok = sum == binomial(m + n, k) && sum == oracle &&
                        (!(0 < m + n && m + n < k) || sum.is_zero());
        fam.check_flag(os.str(), ok);
      }
    }
  }
  out.families.push_back(fam.take());
}

void dwyer_frankel(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("DwyerFrankel", "seeded (a,b,n,m), |n| <= 8, m <= 24, coefficients in [-9,9]");
  auto rng = family_rng(seed, "DwyerFrankel");
  const long reps = std::max<long>(200, cases);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 24);
    const long n = rand_range(rng, -8, 8);
    const SeqVec a = rand_prefix(rng, m + 1), b = rand_prefix(rng, m + 1);
    const DwyerFrankelResult res = dwyer_frankel_check(a, b, n, m);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n << ",m=" << m;
    fam.check(os.str(), res.lhs, res.rhs);
  }
  out.families.push_back(fam.take());
}

void vandermonde_expansion(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("VandermondeExpansion", "rotated-window dot products; fixed example plus random");
  {  // the displayed m = 3 example: every dot product equals -13
    const SeqVec a{3, 4, -1, -2}, b{2, 2, -1, -1};
    for (const auto& col : vandermonde_expand(a, b, 3, -2, 2)) {
      std::ostringstream os;
      os << "example,n=" << col.n;
      fam.check(os.str(), col.dot, Scalar(-13));
    }
  }
  auto rng = family_rng(seed, "VandermondeExpansion");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 8);
    const SeqVec a = rand_prefix(rng, m + 1), b = rand_prefix(rng, m + 1);
    const Scalar want = cauchy_product(a, b, m);
    bool ok = true;
    for (const auto& col : vandermonde_expand(a, b, m, -4, 4))
      if (col.dot != want) ok = false;
    std::ostringstream os;
    os << "case=" << c << ",m=" << m;
    fam.check_flag(os.str(), ok);
  }
  out.families.push_back(fam.take());
}

void multi_factor(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("MultiFactor", "2..4 random factors, shifts in [-5,5], m <= 10");
  auto rng = family_rng(seed, "MultiFactor");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 10);
    const long count = rand_range(rng, 2, 4);
    std::vector<SeqVec> seqs;
    std::vector<long> shifts;
    for (long j = 0; j < count; ++j) {
      seqs.push_back(rand_prefix(rng, m + 1));
      shifts.push_back(rand_range(rng, -5, 5));
    }
    std::ostringstream os;
    os << "case=" << c << ",m=" << m << ",factors=" << count;
    fam.check_flag(os.str(), multi_factor_check(seqs, shifts, m));
  }
  out.families.push_back(fam.take());
}

void zero_propagation(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("ZeroPropagation", "(a*b)_m forced to 0; shifts n in [-5,5]");
  auto rng = family_rng(seed, "ZeroPropagation");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 1, 10);
    SeqVec a = rand_prefix(rng, m + 1), b = rand_prefix(rng, m + 1);
    a[0] = Scalar(rand_range(rng, 1, 9));  // invertible, so b_m can cancel the product
    Scalar acc(0);
    for (long i = 1; i <= m; ++i)
      acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(m - i)];
    b[static_cast<std::size_t>(m)] = -acc / a[0];
    const auto res = zero_propagation_check(a, b, m, -5, 5);
    std::ostringstream os;
    os << "case=" << c << ",m=" << m;
    if (!res.has_value())
      fam.skip();
    else
      fam.check_flag(os.str(), *res);
  }
  out.families.push_back(fam.take());
}

void diagonal_family(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("DiagonalConvolution", "top-line diagonal dot products, shift t in [-3,3]");
  auto rng = family_rng(seed, "DiagonalConvolution");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const BinomialArray A = make_array(rand_poly(rng, rand_range(rng, 0, 5)));
    const BinomialArray B = make_array(rand_poly(rng, rand_range(rng, 0, 5)));
    const long m = rand_range(rng, 0, 6);
    const long r = rand_range(rng, -4, 4), s = rand_range(rng, -4, 4);
    const long t = rand_range(rng, -3, 3);
    const auto res = diagonal_convolution(A, B, m, r, s, t);
    std::ostringstream os;
    os << "case=" << c << ",m=" << m << ",r=" << r << ",s=" << s << ",t=" << t;
    fam.check(os.str(), res.base, res.shifted);
  }
  out.families.push_back(fam.take());
}

void transform_product_shift(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("TransformProductShift",
             "B^n a * B^n b = a * B^{2n} b and B^n a * B^{n+1} b = a * B^{2n+1} b");
  auto rng = family_rng(seed, "TransformProductShift");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 10);
    const long n = rand_range(rng, -6, 6);
    const SeqVec a = rand_prefix(rng, m + 1), b = rand_prefix(rng, m + 1);
    auto shifted = [&](const SeqVec& s, long by) {
      SeqVec r;
      for (long k = 0; k <= m; ++k) r.push_back(transform_entry(s, by, k));
      return r;
    };
    const bool same = cauchy_product(shifted(a, n), shifted(b, n), m) ==
                      cauchy_product(a, shifted(b, 2 * n), m);
    const bool adj = cauchy_product(shifted(a, n), shifted(b, n + 1), m) ==
                     cauchy_product(a, shifted(b, 2 * n + 1), m);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n << ",m=" << m;
    fam.check_flag(os.str(), same && adj);
  }
  out.families.push_back(fam.take());
}

void classical_squares(SuiteReport& out) {
  Family fam("ClassicalSquares", "n in [0,12]");
  for (long n = 0; n <= 12; ++n) {
    Scalar sq(0), adj(0);
    for (long i = 0; i <= n; ++i) {
      sq += binomial(n, i) * binomial(n, i);
      adj += binomial(n, i) * binomial(n + 1, i);
    }
    std::ostringstream os;
    os << "n=" << n;
    fam.check(os.str() + ",squares", sq, binomial(2 * n, n));
    fam.check(os.str() + ",adjacent", adj, binomial(2 * n + 1, n));
  }
  out.families.push_back(fam.take());
}

void column_convolutions(SuiteReport& out, std::uint64_t seed, long cases) {
  auto rng = family_rng(seed, "ColumnConv");
  const long reps = std::max<long>(25, cases / 10);
  Family self("ColumnSelfConv", "random p, deg <= 4, n in [0,8]");
  Family adj("AdjacentColumnConv", "random p, deg <= 4, n in [0,8]");
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 4);
    const InitialSequence p = rand_poly(rng, m);
    const BinomialArray A = make_array(p);
    const long n = rand_range(rng, 0, 8);
    Scalar lhs_self(0), lhs_adj(0);
    for (long i = 0; i <= n + m; ++i) lhs_self += A.entry(i, n) * A.entry(n + m - i, n);
    for (long i = 0; i <= n + m + 1; ++i) lhs_adj += A.entry(i, n) * A.entry(n + m + 1 - i, n + 1);
    Scalar rhs_self(0), rhs_adj(0);
    for (long i = 0; i <= m; ++i) {
      rhs_self += binomial(2 * n, n + m - 2 * i) * p.term(i) * p.term(i);
      rhs_adj += binomial(2 * n + 1, n + m + 1 - 2 * i) * p.term(i) * p.term(i);
      for (long j = i + 1; j <= m; ++j) {
        rhs_self += Scalar(2) * binomial(2 * n, n + m - i - j) * p.term(i) * p.term(j);
        rhs_adj += Scalar(2) * binomial(2 * n + 1, n + m + 1 - i - j) * p.term(i) * p.term(j);
      }
    }
    std::ostringstream os;
    os << "case=" << c << ",deg=" << m << ",n=" << n;
    self.check(os.str(), lhs_self, rhs_self);
    adj.check(os.str(), lhs_adj, rhs_adj);
  }
  out.families.push_back(self.take());
  out.families.push_back(adj.take());
}

}  // namespace

void run_convolution(SuiteReport& out, std::uint64_t seed, long cases) {
  chu_vandermonde(out);
  dwyer_frankel(out, seed, cases);
  vandermonde_expansion(out, seed, cases);
  multi_factor(out, seed, cases);
  zero_propagation(out, seed, cases);
  diagonal_family(out, seed, cases);
  transform_product_shift(out, seed, cases);
  classical_squares(out);
  column_convolutions(out, seed, cases);
}

}  // namespace binar::detail
