#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "binar/report.hpp"
#include "binar/scalar.hpp"
#include "binar/sequence.hpp"

namespace binar::detail {

constexpr std::size_t kMaxCounterexamples = 5;

// Accumulates one FamilyReport; every data point is either a pass, a recorded
// failure, or a skip (hypotheses unmet).
class Family {
 public:
  Family(std::string name, std::string grid, bool normative = true) {
    rep_.name = std::move(name);
    rep_.grid = std::move(grid);
    rep_.normative = normative;
  }

  void check(const std::string& params, const Scalar& lhs, const Scalar& rhs) {
    record(params, lhs.str(), rhs.str(), lhs == rhs);
  }
  void check_flag(const std::string& params, bool ok) {
    record(params, ok ? "true" : "false", "true", ok);
  }
  void skip(long count = 1) { rep_.cases += count; rep_.skips += count; }
  void note(std::string text) { rep_.note = std::move(text); }
  void append_note(const std::string& text) {
    if (!rep_.note.empty()) rep_.note += "; ";
    rep_.note += text;
  }

  long failures() const { return rep_.failures; }
  FamilyReport take() { return std::move(rep_); }

 private:
  void record(const std::string& params, std::string lhs, std::string rhs, bool ok) {
    ++rep_.cases;
    if (ok) {
      ++rep_.passes;
    } else {
      ++rep_.failures;
      if (rep_.counterexamples.size() < kMaxCounterexamples)
        rep_.counterexamples.push_back({params, std::move(lhs), std::move(rhs)});
    }
  }

  FamilyReport rep_;
};

std::uint64_t fnv1a(std::string_view s);

// Independent stream per family so families can be reordered or parallelized
// without changing each other's data.
std::mt19937_64 family_rng(std::uint64_t seed, std::string_view family);

long rand_range(std::mt19937_64& rng, long lo, long hi);
Scalar rand_coeff(std::mt19937_64& rng);               // uniform in [-9, 9]
SeqVec rand_prefix(std::mt19937_64& rng, long length);  // coefficients in [-9, 9]
// Nonzero polynomial of degree exactly `degree` (nonzero leading coefficient).
InitialSequence rand_poly(std::mt19937_64& rng, long degree);
InitialSequence rand_skew_palindromic(std::mt19937_64& rng, long degree);

// Suite builders; each appends its families to `out`.
void run_core(SuiteReport& out, std::uint64_t seed, long cases);
void run_hockey(SuiteReport& out, std::uint64_t seed, long cases);
void run_convolution(SuiteReport& out, std::uint64_t seed, long cases);
void run_catalan(SuiteReport& out, std::uint64_t seed, long cases);
void run_sl2(SuiteReport& out, std::uint64_t seed, long cases);

}  // namespace binar::detail
