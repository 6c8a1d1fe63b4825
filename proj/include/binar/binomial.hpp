#pragma once

#include "binar/scalar.hpp"

namespace binar {

// Extended binomial coefficient, total on Z x Z:
//   0 <= k <= n : n! / (k! (n-k)!)
//   n < 0, k >= 0 : (-1)^k * C(-n+k-1, k)
//   otherwise : 0
// Matches the coefficient of x^k in the binomial series of (1+x)^n.
Scalar binomial(long n, long k);

// Catalan number C_t via Segner's recurrence C_0 = 1,
// C_{t+1} = sum_{i<=t} C_i C_{t-i}. Each newly memoized value is checked
// against the closed form (1/t) C(2t, t+1); disagreement is a logic error.
Scalar catalan(long t);

}  // namespace binar
