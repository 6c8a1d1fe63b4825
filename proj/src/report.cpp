#include "binar/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "suite_common.hpp"

namespace binar {

bool SuiteReport::passed(bool strict) const {
  for (const auto& f : families)
    if (f.failures > 0 && (strict || f.normative)) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["requested_cases"] = requested_cases;
  doc["exact"] = true;
  doc["families"] = nlohmann::ordered_json::array();
  for (const auto& f : families) {
    nlohmann::ordered_json fj;
    fj["name"] = f.name;
    fj["grid"] = f.grid;
    fj["normative"] = f.normative;
    fj["cases"] = f.cases;
    fj["passes"] = f.passes;
    fj["failures"] = f.failures;
    fj["skips"] = f.skips;
    fj["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : f.counterexamples)
      fj["counterexamples"].push_back({{"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    if (!f.note.empty()) fj["note"] = f.note;
    doc["families"].push_back(std::move(fj));
  }
  return doc.dump(2) + "\n";
}

bool is_known_suite(const std::string& suite) {
  return suite == "core" || suite == "hockey" || suite == "convolution" || suite == "catalan" ||
         suite == "sl2" || suite == "all";
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, long cases) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  if (cases < 1) throw std::invalid_argument("cases must be >= 1");
  SuiteReport out;
  out.suite = suite;
  out.seed = seed;
  out.requested_cases = cases;
  const bool all = suite == "all";
  if (all || suite == "core") detail::run_core(out, seed, cases);
  if (all || suite == "hockey") detail::run_hockey(out, seed, cases);
  if (all || suite == "convolution") detail::run_convolution(out, seed, cases);
  if (all || suite == "catalan") detail::run_catalan(out, seed, cases);
  if (all || suite == "sl2") detail::run_sl2(out, seed, cases);
  std::sort(out.families.begin(), out.families.end(),
            [](const FamilyReport& a, const FamilyReport& b) { return a.name < b.name; });
  return out;
}

namespace detail {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 family_rng(std::uint64_t seed, std::string_view family) {
  return std::mt19937_64(seed ^ fnv1a(family));
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Scalar rand_coeff(std::mt19937_64& rng) { return Scalar(rand_range(rng, -9, 9)); }

SeqVec rand_prefix(std::mt19937_64& rng, long length) {
  SeqVec out;
  out.reserve(static_cast<std::size_t>(length));
  for (long i = 0; i < length; ++i) out.push_back(rand_coeff(rng));
  return out;
}

InitialSequence rand_poly(std::mt19937_64& rng, long degree) {
  SeqVec c = rand_prefix(rng, degree);
  long lead = rand_range(rng, 1, 9);
  if (rand_range(rng, 0, 1) == 1) lead = -lead;
  c.push_back(Scalar(lead));
  return InitialSequence(std::move(c));
}

InitialSequence rand_skew_palindromic(std::mt19937_64& rng, long degree) {
  SeqVec c(static_cast<std::size_t>(degree) + 1, Scalar(0));
  long head = rand_range(rng, 1, 9);
  if (rand_range(rng, 0, 1) == 1) head = -head;
  c[0] = Scalar(head);  // nonzero so the degree is exact
  for (long k = 1; 2 * k < degree; ++k) c[static_cast<std::size_t>(k)] = rand_coeff(rng);
  for (long k = 0; 2 * k < degree; ++k)
    c[static_cast<std::size_t>(degree - k)] = -c[static_cast<std::size_t>(k)];
  return InitialSequence(std::move(c));
}

}  // namespace detail

}  // namespace binar
