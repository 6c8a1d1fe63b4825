#pragma once

#include <utility>
#include <vector>

#include "binar/array.hpp"
#include "binar/binomial.hpp"

namespace binar {

// Outcome of a zero-locus prediction checked against a direct array scan.
struct ZeroLocus {
  std::vector<std::pair<long, long>> predicted;  // (k, n) from the closed parametrization
  std::vector<std::pair<long, long>> scanned;    // (k, n) found by scanning proper entries
  bool match = false;
};

// Zeros of B(-sx+r) (pass s < 0 to reach B(|s|x+r)). Scans the proper region
// with k in [1, k_max], n in [n_lo, n_hi] and compares against the
// parametrized zero set. A mismatch is reported via `match`, not thrown.
ZeroLocus proper_zeros(long r, long s, long k_max, long n_lo, long n_hi);

// C_t^{(r,s)} = (1/t) C(rt+st, rt+1); computed via both closed forms, which
// must agree, and always integer-valued.
Scalar generalized_catalan(long r, long s, long t);

// a_k = a_{m-k} (resp. a_k = -a_{m-k}); the zero polynomial is both.
bool is_palindromic(const InitialSequence& p);
bool is_skew_palindromic(const InitialSequence& p);

// Diagonal zeros of a skew-palindromic initial condition: m = 2l gives zeros
// at (l+k, 2k); m = 2l+1 gives (l+k+1, 2k+1); verified by scan for k <= t_max.
ZeroLocus skew_diagonal_zeros(const InitialSequence& p, long t_max);

// Top row of the Clebsch-Gordan hexagon M(m, m, k) as an initial condition:
// a_i = (-1)^i C(m-i, k-i) C(m-k+i, i) for 0 <= i <= k. Requires 0 < k < m.
InitialSequence cg_initial_condition(long m, long k);

// Coefficients of (1-x^r)^s: the coefficients of (1-x)^s aerated with
// strings of r-1 zeros. Skew-palindromic iff s is odd.
InitialSequence aeration(long r, long s);

// Shapiro's Catalan triangle, B_{n,k} = (k/n) C(2n, n-k), 1 <= k <= n.
Scalar shapiro_entry(long n, long k);

// Near-zero value C_t(m, k) beside the diagonal zeros of B(cg_initial(m,k)),
// k odd, 1 <= k < m, t >= 1. Closed form with extended binomials; C_t(m,1) = m C_t.
Scalar near_zero_cg(long m, long k, long t);

// Independent alternating-sum route to the same value.
Scalar near_zero_cg_alt_sum(long m, long k, long t);

// Entry of B(1-x) at (l, r+2l): (r+1)/(r+l+1) C(r+2l, l).
Scalar ballot_diagonal(long r, long l);

// Value beside the diagonal zero of B(1-x^j): c_1(t) = C_t, c_2(t) = C_{t+1}.
// Odd j needs t >= 1, even j needs t >= 0.
Scalar c_sequence(long j, long t);

// Near-zero sequence D_t = sum d_i c_{m-2i}(t) of a skew-palindromic d of odd
// degree; equals the entry of B(d) at (m'+t, 2t).
Scalar skew_near_zero(const InitialSequence& d, long t);

}  // namespace binar
