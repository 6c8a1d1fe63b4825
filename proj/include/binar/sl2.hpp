#pragma once

#include "binar/sequence.hpp"

namespace binar {

// Element of the (n+1)-dimensional space V(n), coordinates in the basis
// {phi, f.phi, ..., f^n.phi}.
struct RepVector {
  long n = 0;
  SeqVec coeffs;  // length n+1

  static RepVector zero(long n);
  // phi, f.phi, ...: single basis vector f^k.phi.
  static RepVector basis(long n, long k);
};

bool operator==(const RepVector& u, const RepVector& v);

// Nilpotent lowering action: shifts coordinates one basis index down, with
// f^{n+1}.phi = 0.
RepVector f_action(const RepVector& v);

// S: f^k.phi -> (-f)^k.phi; an involution.
RepVector s_involution(const RepVector& v);

// Invariant form: <f^l.phi, f^k.phi> = (-1)^k if l = n-k, else 0,
// normalized by <f^n.phi, phi> = 1. Symmetric for even n, alternating for odd.
Scalar invariant_form(const RepVector& u, const RepVector& v);

// Convolution pairing <u, Sv>: <f^l.phi, f^k.phi>' = 1 if l = n-k, else 0.
Scalar primed_form(const RepVector& u, const RepVector& v);

// B_f = 1 + f and its exact inverse 1 - f + f^2 - ... (+- f^n).
RepVector b_f(const RepVector& v);
RepVector b_f_inverse(const RepVector& v);

// p(f).phi for a coefficient vector p (lowest order first); deg p <= n.
RepVector poly_apply(const SeqVec& p, long n);

struct PairingCheckResult {
  Scalar lhs;  // <B_f p(f)phi, B_f^{-1} q(f)phi>'
  Scalar mid;  // <p(f)phi, q(f)phi>'
  Scalar rhs;  // coefficient of X^n in p(X)q(X)
  bool equal;
};

// Verifies that the primed form realizes the Cauchy product at index n and is
// preserved by the transform pair (B_f, B_f^{-1}).
PairingCheckResult pairing_check(const SeqVec& p, const SeqVec& q, long n);

}  // namespace binar
