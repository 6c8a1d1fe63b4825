#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace binar {

// One failing data point, replayable from its parameter string.
struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

// Aggregated outcome of one identity family over its parameter grid.
struct FamilyReport {
  std::string name;
  std::string grid;       // human-readable description of the parameter grid
  bool normative = true;  // false: recorded for the report, never fails the run
  long cases = 0;
  long passes = 0;
  long failures = 0;
  long skips = 0;
  std::vector<Counterexample> counterexamples;  // capped, deterministic order
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long requested_cases = 0;
  std::vector<FamilyReport> families;  // sorted by name

  // True when no normative family failed (strict: no family at all).
  bool passed(bool strict) const;

  // Deterministic JSON serialization; all exact values appear as strings.
  std::string to_json() const;
};

// Known suite names: core, hockey, convolution, catalan, sl2, all.
bool is_known_suite(const std::string& suite);

// Runs the named suite. `cases` budgets the randomized families; fixed grids
// always run in full. Deterministic for fixed (suite, seed, cases).
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, long cases);

}  // namespace binar
