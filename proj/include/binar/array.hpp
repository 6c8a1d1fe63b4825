#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "binar/sequence.hpp"

namespace binar {

class BinomialArray;

// Rectangular, fully materialized block of array entries.
// Every interior Pascal L is re-checked at construction time; a violation is
// a logic error and aborts the run.
class Window {
 public:
  Window(long k_min, long k_max, long n_min, long n_max, std::vector<SeqVec> values);

  long k_min() const { return k_min_; }
  long k_max() const { return k_max_; }
  long n_min() const { return n_min_; }
  long n_max() const { return n_max_; }

  const Scalar& at(long k, long n) const;

  // Normative CSV form: header row "k\n,<n_min>,...,<n_max>", then one row
  // per k with canonical scalar serializations, LF line endings.
  std::string to_csv() const;
  static Window from_csv(const std::string& text);

  std::string to_ascii() const;

  // Number of interior Pascal checks performed process-wide; used by the
  // acceptance suite to confirm the invariant ran.
  static long pascal_checks_performed();

  friend bool operator==(const Window& a, const Window& b);

 private:
  void verify_pascal() const;

  long k_min_, k_max_, n_min_, n_max_;
  std::vector<SeqVec> values_;  // row-major, rows indexed by k
};

// Lower half-plane array built from an initial column by Pascal's recurrence.
// The normative value source is the transform closed form (forward sums for
// n >= 0, alternating binomial-series sums for n < 0); the column-by-column
// Pascal fill used by window() is an accelerator checked against it in tests.
class BinomialArray {
 public:
  BinomialArray() = default;
  explicit BinomialArray(InitialSequence initial, long origin = 0);

  // Copyable despite the internal lock: the memo travels, the mutex is fresh.
  BinomialArray(const BinomialArray& other);
  BinomialArray& operator=(const BinomialArray& other);

  // Column 0 of the array as stored; when origin() is 0 this is the initial
  // condition, otherwise column 0 lives at column `origin()` of the base.
  const InitialSequence& base_initial() const { return initial_; }
  long origin() const { return origin_; }

  // Entry a_{k,n}; k < 0 gives 0 (no rows above the top line).
  Scalar entry(long k, long n) const;

  Window window(long k_min, long k_max, long n_min, long n_max) const;

  // Degree of the effective initial condition when it is a polynomial with
  // origin 0; ops that need a polynomial initial throw otherwise.
  std::optional<long> poly_degree() const;

 private:
  Scalar closed_form(long k, long n) const;

  InitialSequence initial_;
  long origin_ = 0;

  mutable std::map<std::pair<long, long>, Scalar> memo_;
  mutable std::mutex mu_;
};

struct BorderProfile {
  Scalar top;                // a_0, constant along the top line
  Scalar diag;               // a_m, constant down the lower-right diagonal
  Scalar col_minus_one_abs;  // |sum (-1)^i a_i|, column -1 past row m
};

// Triangular difference table of p*(x) = x^m p(1/x).
// columns[j] is the j-th quotient of repeated division of p* by (x+1)
// (columns[0] is p* itself), stored lowest order first; left_edge holds the
// Taylor coefficients of p* at x = -1, lowest order first.
struct DiffTable {
  long degree = 0;
  std::vector<SeqVec> columns;
  SeqVec left_edge;
};

BinomialArray make_array(InitialSequence initial);

// P(j) = B(e^j): Pascal's triangle with the top line of ones moved to row j.
BinomialArray pascal_basis(long j);

BinomialArray linear_combination(const std::vector<std::pair<Scalar, BinomialArray>>& terms);

// entry(result, k, n) = entry(A, k, n + t). Polynomial shifts are
// re-materialized so that composition normalizes back to origin 0.
BinomialArray shift_origin(const BinomialArray& A, long t);

DiffTable diff_table(const BinomialArray& A);

// Coefficients c_j with p(x) = sum c_j (x+1)^j, lowest order first.
SeqVec taylor_at_minus_one(const InitialSequence& p);

// B(p) -> B(p*), reversing the finite columns of nonnegative index.
BinomialArray reverse_involution(const BinomialArray& A);

// Interchanges the left and right trapezoids: reflects the difference table
// along rows with sign (-1)^row. Degree-1 inputs map B(-sx+r) to B((r+s)x+r).
BinomialArray trapezoid_interchange(const BinomialArray& A);

BorderProfile border_profile(const BinomialArray& A);

}  // namespace binar
