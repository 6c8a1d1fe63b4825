#include "binar/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace binar {

namespace {

// Proper region of a degree-m polynomial array: inside the top line, the
// lower-right diagonal, the forced zero triangle, and the constant stretch of
// column -1 past row m.
bool is_proper_cell(long m, long k, long n) {
  if (k < 1) return false;
  if (n >= 0) return k <= n + m - 1;
  if (n == -1) return k <= m;
  return true;
}

}  // namespace

ZeroLocus proper_zeros(long r, long s, long k_max, long n_lo, long n_hi) {
  if (r == 0 || s == 0) throw std::invalid_argument("proper_zeros: r, s must be nonzero");
  if (k_max < 1 || n_lo > n_hi) throw std::invalid_argument("proper_zeros: bad scan range");
  // The array under test is B(-sx+r); normalize the overall sign so r > 0.
  long rr = r, ss = s;
  if (rr < 0) { rr = -rr; ss = -ss; }
  const long d = std::gcd(rr, std::abs(ss));
  const long rp = rr / d, sp = std::abs(ss) / d;

  ZeroLocus out;
  for (long l = 1;; ++l) {
    long k, n;
    if (ss > 0) {                       // B(-sx+r), r,s > 0: right-hand side zeros
      k = l * rp;
      n = l * (rp + sp) - 1;
    } else if (sp >= rp) {              // B(|s|x+r), r <= |s|: left-hand side zeros
      k = l * rp;
      n = -l * (sp - rp) - 1;
    } else {
      break;                            // 0 < |s| < r: no proper zeros
    }
    if (k > k_max) break;
    if (n >= n_lo && n <= n_hi && is_proper_cell(1, k, n)) out.predicted.emplace_back(k, n);
  }

  const BinomialArray A = make_array(InitialSequence(SeqVec{Scalar(r), Scalar(-s)}));
  for (long n = n_lo; n <= n_hi; ++n)
    for (long k = 1; k <= k_max; ++k)
      if (is_proper_cell(1, k, n) && A.entry(k, n).is_zero()) out.scanned.emplace_back(k, n);

  auto key = [](const std::pair<long, long>& p) { return std::make_pair(p.second, p.first); };
  std::sort(out.predicted.begin(), out.predicted.end(),
            [&](auto& a, auto& b) { return key(a) < key(b); });
  std::sort(out.scanned.begin(), out.scanned.end(),
            [&](auto& a, auto& b) { return key(a) < key(b); });
  out.match = out.predicted == out.scanned;
  return out;
}

Scalar generalized_catalan(long r, long s, long t) {
  if (r < 1 || s < 1 || t < 1)
    throw std::invalid_argument("generalized_catalan: r, s, t must be >= 1");
  const Scalar a = binomial(r * t + s * t, r * t + 1) / Scalar(t);
  const Scalar b = Scalar(r + s) / Scalar(r * t + 1) * binomial(r * t + s * t - 1, r * t);
  if (a != b) throw std::logic_error("generalized_catalan: closed forms disagree");
  if (!a.is_integer()) throw std::logic_error("generalized_catalan: non-integer value");
  return a;
}

bool is_palindromic(const InitialSequence& p) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t k = 0; 2 * k < n; ++k)
    if (c[k] != c[n - 1 - k]) return false;
  return true;
}

bool is_skew_palindromic(const InitialSequence& p) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    if (2 * k >= n) break;
    if (c[k] != -c[n - 1 - k]) return false;
  }
  return true;
}

ZeroLocus skew_diagonal_zeros(const InitialSequence& p, long t_max) {
  if (!is_skew_palindromic(p) || p.is_zero())
    throw std::domain_error("skew_diagonal_zeros: not a skew-palindromic polynomial");
  const long m = *p.degree();
  const long l = m / 2;
  ZeroLocus out;
  for (long k = 0; k <= t_max; ++k) {
    if (m % 2 == 0)
      out.predicted.emplace_back(l + k, 2 * k);
    else
      out.predicted.emplace_back(l + k + 1, 2 * k + 1);
  }
  const BinomialArray A = make_array(p);
  for (const auto& [k, n] : out.predicted)
    if (A.entry(k, n).is_zero()) out.scanned.emplace_back(k, n);
  out.match = out.predicted == out.scanned;
  return out;
}

InitialSequence cg_initial_condition(long m, long k) {
  if (!(0 < k && k < m)) throw std::out_of_range("cg_initial_condition: need 0 < k < m");
  SeqVec c;
  c.reserve(static_cast<std::size_t>(k) + 1);
  for (long i = 0; i <= k; ++i) {
    Scalar v = binomial(m - i, k - i) * binomial(m - k + i, i);
    if (i % 2 != 0) v = -v;
    c.push_back(std::move(v));
  }
  return InitialSequence(std::move(c));
}

InitialSequence aeration(long r, long s) {
  if (r < 1 || s < 1) throw std::invalid_argument("aeration: r, s must be >= 1");
  SeqVec c(static_cast<std::size_t>(r * s) + 1, Scalar(0));
  for (long j = 0; j <= s; ++j) {
    Scalar v = binomial(s, j);
    if (j % 2 != 0) v = -v;
    c[static_cast<std::size_t>(r * j)] = std::move(v);
  }
  return InitialSequence(std::move(c));
}

Scalar shapiro_entry(long n, long k) {
  if (!(1 <= k && k <= n)) throw std::out_of_range("shapiro_entry: need 1 <= k <= n");
  return Scalar(k) / Scalar(n) * binomial(2 * n, n - k);
}

Scalar near_zero_cg(long m, long k, long t) {
  if (!(1 <= k && k < m) || k % 2 == 0)
    throw std::out_of_range("near_zero_cg: need odd k with 1 <= k < m");
  if (t < 1) throw std::out_of_range("near_zero_cg: need t >= 1");
  const long kp = (k - 1) / 2;
  const Scalar denom = binomial(t + kp + 1, kp);  // positive for t >= 1
  return Scalar(m - kp) * binomial(m - kp - 1, kp) * binomial(t + 2 * kp - m, kp) / denom *
         catalan(t);
}

Scalar near_zero_cg_alt_sum(long m, long k, long t) {
  if (!(1 <= k && k < m) || k % 2 == 0)
    throw std::out_of_range("near_zero_cg_alt_sum: need odd k with 1 <= k < m");
  if (t < 1) throw std::out_of_range("near_zero_cg_alt_sum: need t >= 1");
  const long kp = (k - 1) / 2;
  Scalar sum(0);
  for (long l = 0; l <= k; ++l) {
    Scalar v = binomial(2 * t, kp + t - l) * binomial(m - l, k - l) * binomial(m - k + l, l);
    if (l % 2 != 0) v = -v;
    sum += v;
  }
  return sum;
}

Scalar ballot_diagonal(long r, long l) {
  if (r < 0 || l < 0) throw std::out_of_range("ballot_diagonal: need r, l >= 0");
  return Scalar(r + 1) / Scalar(r + l + 1) * binomial(r + 2 * l, l);
}

Scalar c_sequence(long j, long t) {
  if (j < 1) throw std::out_of_range("c_sequence: need j >= 1");
  if (j % 2 != 0) {
    if (t < 1) throw std::out_of_range("c_sequence: odd j needs t >= 1");
    const long i = (j - 1) / 2;
    return Scalar(j) / Scalar(t + i + 1) * binomial(2 * t, t - i);
  }
  if (t < 0) throw std::out_of_range("c_sequence: even j needs t >= 0");
  const long i = j / 2;
  return Scalar(j) / Scalar(t + i + 1) * binomial(2 * t + 1, t - i + 1);
}

Scalar skew_near_zero(const InitialSequence& d, long t) {
  if (d.is_zero() || !is_skew_palindromic(d) || *d.degree() % 2 == 0)
    throw std::domain_error("skew_near_zero: needs a skew-palindromic initial of odd degree");
  if (t < 1) throw std::out_of_range("skew_near_zero: need t >= 1");
  const long m = *d.degree();
  const long mp = (m - 1) / 2;
  Scalar sum(0);
  for (long i = 0; i <= mp; ++i) sum += d.term(i) * c_sequence(m - 2 * i, t);
  return sum;
}

}  // namespace binar
