#include "binar/transform.hpp"

#include <stdexcept>

#include "binar/binomial.hpp"

namespace binar {

namespace {

void require_prefix(const SeqVec& a, long m, const char* op) {
  if (m < 0 || static_cast<long>(a.size()) <= m)
    throw std::out_of_range(std::string(op) + ": prefix too short for index m");
}

}  // namespace

Scalar transform_entry(const SeqVec& a, long n, long k) {
  Scalar sum(0);
  const long hi = std::min(k, static_cast<long>(a.size()) - 1);
  for (long j = 0; j <= hi; ++j) {
    const long i = k - j;  // binomial index
    sum += binomial(n, i) * a[static_cast<std::size_t>(j)];
  }
  return sum;
}

SeqVec forward_transform(const SeqVec& a, long n) {
  if (n < 0) throw std::invalid_argument("forward_transform: n must be >= 0");
  SeqVec out(a.size(), Scalar(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = transform_entry(a, n, static_cast<long>(k));
  return out;
}

SeqVec inverse_transform(const SeqVec& a, long n) {
  if (n < 0) throw std::invalid_argument("inverse_transform: n must be >= 0");
  SeqVec out(a.size(), Scalar(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = transform_entry(a, -n, static_cast<long>(k));
  return out;
}

Scalar cauchy_product(const SeqVec& a, const SeqVec& b, long m) {
  require_prefix(a, m, "cauchy_product");
  require_prefix(b, m, "cauchy_product");
  Scalar sum(0);
  for (long i = 0; i <= m; ++i)
    sum += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(m - i)];
  return sum;
}

SeqVec t_sequence(long n, long length) {
  if (length < 1) throw std::invalid_argument("t_sequence: length must be >= 1");
  SeqVec out;
  out.reserve(static_cast<std::size_t>(length));
  for (long k = 0; k < length; ++k) out.push_back(binomial(n, k));
  return out;
}

DwyerFrankelResult dwyer_frankel_check(const SeqVec& a, const SeqVec& b, long n, long m) {
  require_prefix(a, m, "dwyer_frankel_check");
  require_prefix(b, m, "dwyer_frankel_check");
  Scalar lhs(0);
  for (long i = 0; i <= m; ++i)
    lhs += transform_entry(a, n, i) * transform_entry(b, -n, m - i);
  Scalar rhs = cauchy_product(a, b, m);
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

std::vector<VandermondeColumn> vandermonde_expand(const SeqVec& a, const SeqVec& b, long m,
                                                  long n_lo, long n_hi) {
  require_prefix(a, m, "vandermonde_expand");
  require_prefix(b, m, "vandermonde_expand");
  if (n_lo > n_hi) throw std::invalid_argument("vandermonde_expand: empty n range");
  std::vector<VandermondeColumn> out;
  for (long n = n_lo; n <= n_hi; ++n) {
    VandermondeColumn col;
    col.n = n;
    col.dot = Scalar(0);
    for (long i = 0; i <= m; ++i) {
      col.lhs.push_back(transform_entry(a, n, i));
      col.rhs.push_back(transform_entry(b, -n, m - i));
      col.dot += col.lhs.back() * col.rhs.back();
    }
    out.push_back(std::move(col));
  }
  return out;
}

bool multi_factor_check(const std::vector<SeqVec>& seqs, const std::vector<long>& shifts, long m) {
  if (seqs.size() != shifts.size() || seqs.size() < 2)
    throw std::invalid_argument("multi_factor_check: need matching lists of length >= 2");
  for (const auto& s : seqs) require_prefix(s, m, "multi_factor_check");
  // lhs: convolution of the individually shifted sequences at index m.
  SeqVec acc(static_cast<std::size_t>(m) + 1, Scalar(0));
  acc[0] = Scalar(1);
  long total = 0;
  for (std::size_t j = 0; j < seqs.size(); ++j) {
    SeqVec shifted;
    for (long k = 0; k <= m; ++k) shifted.push_back(transform_entry(seqs[j], shifts[j], k));
    acc = poly::multiply_prefix(acc, shifted, m);
    total += shifts[j];
  }
  // rhs: total shift applied to the plain product.
  SeqVec prod(static_cast<std::size_t>(m) + 1, Scalar(0));
  prod[0] = Scalar(1);
  for (const auto& s : seqs) prod = poly::multiply_prefix(prod, s, m);
  return acc[static_cast<std::size_t>(m)] == transform_entry(prod, total, m);
}

std::optional<bool> zero_propagation_check(const SeqVec& a, const SeqVec& b, long m, long n_lo,
                                           long n_hi) {
  require_prefix(a, m, "zero_propagation_check");
  require_prefix(b, m, "zero_propagation_check");
  if (!cauchy_product(a, b, m).is_zero()) return std::nullopt;
  for (long n = n_lo; n <= n_hi; ++n)
    if (!dwyer_frankel_check(a, b, n, m).lhs.is_zero()) return false;
  return true;
}

DiagonalConvolutionResult diagonal_convolution(const BinomialArray& A, const BinomialArray& B,
                                               long m, long r, long s, long t) {
  if (m < 0) throw std::invalid_argument("diagonal_convolution: m must be >= 0");
  Scalar base(0), shifted(0);
  for (long i = 0; i <= m; ++i) {
    base += A.entry(i, r + i) * B.entry(m - i, s - i);
    shifted += A.entry(i, r + i + t) * B.entry(m - i, s - i - t);
  }
  const bool equal = base == shifted;
  return {std::move(base), std::move(shifted), equal};
}

}  // namespace binar
