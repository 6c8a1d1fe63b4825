#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "binar/scalar.hpp"

namespace binar {

// Finite prefix of a sequence; used for convolution and transform operands.
using SeqVec = std::vector<Scalar>;

// Column-0 data of a binomial array: finite support, zero tail.
class InitialSequence {
 public:
  InitialSequence() = default;
  explicit InitialSequence(SeqVec coeffs);
  InitialSequence(std::initializer_list<long> coeffs);

  // Coefficient a_i; zero outside the support.
  Scalar term(long i) const;

  // Index of the last nonzero coefficient; empty for the zero sequence.
  std::optional<long> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  // Trimmed coefficient list (no trailing zeros).
  const SeqVec& coeffs() const { return coeffs_; }

  SeqVec prefix(long length) const;

  // Parses a comma-separated list of scalars, e.g. "1,-1" or "1/2,0,3".
  static InitialSequence parse(std::string_view csv);

  friend bool operator==(const InitialSequence& a, const InitialSequence& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  SeqVec coeffs_;  // invariant: empty or back() != 0
};

namespace poly {

// Polynomial helpers on coefficient vectors (lowest order first).

SeqVec trim(SeqVec p);
SeqVec add(const SeqVec& p, const SeqVec& q);
SeqVec scale(const Scalar& r, const SeqVec& p);
SeqVec multiply(const SeqVec& p, const SeqVec& q);
// Product truncated to indices 0..m.
SeqVec multiply_prefix(const SeqVec& p, const SeqVec& q, long m);
// Division by (x+1): returns {quotient, remainder}.
std::pair<SeqVec, Scalar> divide_x_plus_1(const SeqVec& p);
// Coefficients of (1+x)^n, n >= 0.
SeqVec one_plus_x_power(long n);

}  // namespace poly

}  // namespace binar
