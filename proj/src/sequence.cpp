#include "binar/sequence.hpp"

#include <stdexcept>
#include <string>

namespace binar {

InitialSequence::InitialSequence(SeqVec coeffs) : coeffs_(poly::trim(std::move(coeffs))) {}

InitialSequence::InitialSequence(std::initializer_list<long> coeffs) {
  SeqVec v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  coeffs_ = poly::trim(std::move(v));
}

Scalar InitialSequence::term(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<long> InitialSequence::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<long>(coeffs_.size()) - 1;
}

SeqVec InitialSequence::prefix(long length) const {
  if (length < 0) throw std::invalid_argument("InitialSequence::prefix: negative length");
  SeqVec out;
  out.reserve(static_cast<std::size_t>(length));
  for (long i = 0; i < length; ++i) out.push_back(term(i));
  return out;
}

InitialSequence InitialSequence::parse(std::string_view csv) {
  SeqVec out;
  std::size_t pos = 0;
  if (csv.empty()) return InitialSequence(out);
  while (true) {
    const auto comma = csv.find(',', pos);
    const auto piece = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    out.push_back(Scalar::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return InitialSequence(std::move(out));
}

namespace poly {

SeqVec trim(SeqVec p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

SeqVec add(const SeqVec& p, const SeqVec& q) {
  SeqVec out(std::max(p.size(), q.size()), Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[i] += q[i];
  return out;
}

SeqVec scale(const Scalar& r, const SeqVec& p) {
  SeqVec out = p;
  for (auto& c : out) c *= r;
  return out;
}

SeqVec multiply(const SeqVec& p, const SeqVec& q) {
  if (p.empty() || q.empty()) return {};
  SeqVec out(p.size() + q.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

SeqVec multiply_prefix(const SeqVec& p, const SeqVec& q, long m) {
  SeqVec out(static_cast<std::size_t>(m) + 1, Scalar(0));
  for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j < q.size() && i + j <= static_cast<std::size_t>(m); ++j)
      out[i + j] += p[i] * q[j];
  return out;
}

std::pair<SeqVec, Scalar> divide_x_plus_1(const SeqVec& p) {
  // Synthetic division at x = -1.
  if (p.empty()) return {{}, Scalar(0)};
  SeqVec quot(p.size() > 1 ? p.size() - 1 : 0, Scalar(0));
  Scalar carry(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    const Scalar c = p[i] - carry;  // coefficient passed down
    if (i == 0) return {trim(std::move(quot)), c};
    quot[i - 1] = c;
    carry = c;
  }
  return {trim(std::move(quot)), Scalar(0)};
}

SeqVec one_plus_x_power(long n) {
  if (n < 0) throw std::invalid_argument("one_plus_x_power: negative exponent");
  SeqVec out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  mpz_class c;
  for (long k = 0; k <= n; ++k) {
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    out.emplace_back(Scalar(mpz_class(c)));
  }
  return out;
}

}  // namespace poly

}  // namespace binar
