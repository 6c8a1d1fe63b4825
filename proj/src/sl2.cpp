#include "binar/sl2.hpp"

#include <stdexcept>

namespace binar {

namespace {

void require_dim(long n) {
  if (n < 0) throw std::invalid_argument("RepVector: n must be >= 0");
}

void require_match(const RepVector& u, const RepVector& v) {
  if (u.n != v.n) throw std::invalid_argument("bilinear form: mismatched weights");
}

}  // namespace

RepVector RepVector::zero(long n) {
  require_dim(n);
  return {n, SeqVec(static_cast<std::size_t>(n) + 1, Scalar(0))};
}

RepVector RepVector::basis(long n, long k) {
  if (k < 0 || k > n) throw std::out_of_range("RepVector::basis: need 0 <= k <= n");
  RepVector v = zero(n);
  v.coeffs[static_cast<std::size_t>(k)] = Scalar(1);
  return v;
}

bool operator==(const RepVector& u, const RepVector& v) {
  return u.n == v.n && u.coeffs == v.coeffs;
}

RepVector f_action(const RepVector& v) {
  RepVector out = RepVector::zero(v.n);
  for (long k = 0; k < v.n; ++k)
    out.coeffs[static_cast<std::size_t>(k + 1)] = v.coeffs[static_cast<std::size_t>(k)];
  return out;
}

RepVector s_involution(const RepVector& v) {
  RepVector out = v;
  for (long k = 1; k <= v.n; k += 2)
    out.coeffs[static_cast<std::size_t>(k)] = -out.coeffs[static_cast<std::size_t>(k)];
  return out;
}

Scalar invariant_form(const RepVector& u, const RepVector& v) {
  require_match(u, v);
  Scalar sum(0);
  for (long k = 0; k <= v.n; ++k) {
    Scalar t = u.coeffs[static_cast<std::size_t>(v.n - k)] * v.coeffs[static_cast<std::size_t>(k)];
    if (k % 2 != 0) t = -t;
    sum += t;
  }
  return sum;
}

Scalar primed_form(const RepVector& u, const RepVector& v) {
  require_match(u, v);
  Scalar sum(0);
  for (long k = 0; k <= v.n; ++k)
    sum += u.coeffs[static_cast<std::size_t>(v.n - k)] * v.coeffs[static_cast<std::size_t>(k)];
  return sum;
}

RepVector b_f(const RepVector& v) {
  RepVector shifted = f_action(v);
  RepVector out = v;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += shifted.coeffs[k];
  return out;
}

RepVector b_f_inverse(const RepVector& v) {
  RepVector out = RepVector::zero(v.n);
  RepVector power = v;  // (-f)^j v
  for (long j = 0; j <= v.n; ++j) {
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += power.coeffs[k];
    power = f_action(power);
    for (auto& c : power.coeffs) c = -c;
  }
  return out;
}

RepVector poly_apply(const SeqVec& p, long n) {
  require_dim(n);
  if (static_cast<long>(p.size()) > n + 1)
    throw std::out_of_range("poly_apply: degree exceeds the highest weight");
  RepVector out = RepVector::zero(n);
  for (std::size_t k = 0; k < p.size(); ++k) out.coeffs[k] = p[k];
  return out;
}

PairingCheckResult pairing_check(const SeqVec& p, const SeqVec& q, long n) {
  const RepVector u = poly_apply(p, n);
  const RepVector v = poly_apply(q, n);
  Scalar lhs = primed_form(b_f(u), b_f_inverse(v));
  Scalar mid = primed_form(u, v);
  Scalar rhs(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(n) - i;
    if (j < q.size()) rhs += p[i] * q[j];
  }
  const bool equal = lhs == mid && mid == rhs;
  return {std::move(lhs), std::move(mid), std::move(rhs), equal};
}

}  // namespace binar
