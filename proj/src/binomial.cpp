#include "binar/binomial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace binar {

namespace {

mpz_class binom_nn(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Scalar binomial(long n, long k) {
  if (k < 0) return Scalar(0);
  if (n >= 0) {
    if (k > n) return Scalar(0);
    return Scalar(binom_nn(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
  }
  // n < 0, k >= 0: (-1)^k C(-n+k-1, k)
  mpz_class r = binom_nn(static_cast<unsigned long>(-n + k - 1), static_cast<unsigned long>(k));
  if (k % 2 != 0) r = -r;
  return Scalar(r);
}

Scalar catalan(long t) {
  if (t < 0) throw std::invalid_argument("catalan: t must be >= 0");
  static std::vector<Scalar> memo{Scalar(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(memo.size()) <= t) {
    const long next = static_cast<long>(memo.size());  // computing C_next
    Scalar s(0);
    for (long i = 0; i < next; ++i) s += memo[i] * memo[next - 1 - i];
    const Scalar closed = binomial(2 * next, next + 1) / Scalar(next);
    if (s != closed) throw std::logic_error("catalan: recurrence and closed form disagree");
    memo.push_back(s);
  }
  return memo[t];
}

}  // namespace binar
