#pragma once

#include <optional>
#include <vector>

#include "binar/array.hpp"
#include "binar/sequence.hpp"

namespace binar {

// Single entry of B^n a at index k, valid for any integer n via the extended
// binomial coefficients: (B^n a)_k = sum_i C(n, i) a_{k-i}.
Scalar transform_entry(const SeqVec& a, long n, long k);

// (B^n a)_k for k over the input prefix, n >= 0.
SeqVec forward_transform(const SeqVec& a, long n);

// (B^{-n} a)_k over the prefix, n >= 0; inverts forward_transform exactly.
SeqVec inverse_transform(const SeqVec& a, long n);

// (a*b)_m; both prefixes must cover index m.
Scalar cauchy_product(const SeqVec& a, const SeqVec& b, long m);

// Prefix of t^n = B^n e: binomial coefficients C(n, k), any integer n.
SeqVec t_sequence(long n, long length);

struct DwyerFrankelResult {
  Scalar lhs;  // (B^n a * B^{-n} b)_m
  Scalar rhs;  // (a * b)_m
  bool equal;
};

DwyerFrankelResult dwyer_frankel_check(const SeqVec& a, const SeqVec& b, long n, long m);

struct VandermondeColumn {
  long n;
  SeqVec lhs;  // (B^n a)_i, i = 0..m
  SeqVec rhs;  // (B^{-n} b)_{m-i}, i = 0..m (the 180-degree rotated column)
  Scalar dot;
};

// The three-step expansion procedure: restrict to rows 0..m, rotate B(b), and
// dot matched columns. All dots equal (a*b)_m.
std::vector<VandermondeColumn> vandermonde_expand(const SeqVec& a, const SeqVec& b, long m,
                                                  long n_lo, long n_hi);

// (B^{n_1}a^1 * ... * B^{n_k}a^k)_m == B^{n_1+...+n_k}(a^1*...*a^k)_m.
bool multi_factor_check(const std::vector<SeqVec>& seqs, const std::vector<long>& shifts, long m);

// Requires (a*b)_m == 0; nullopt when the precondition fails (not applicable).
std::optional<bool> zero_propagation_check(const SeqVec& a, const SeqVec& b, long m, long n_lo,
                                           long n_hi);

struct DiagonalConvolutionResult {
  Scalar base;     // sum_i a_{i,r+i} b_{m-i,s-i}
  Scalar shifted;  // sum_i a_{i,r+i+t} b_{m-i,s-i-t}
  bool equal;
};

DiagonalConvolutionResult diagonal_convolution(const BinomialArray& A, const BinomialArray& B,
                                               long m, long r, long s, long t);

}  // namespace binar
