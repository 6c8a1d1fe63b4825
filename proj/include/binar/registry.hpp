#pragma once

#include <map>
#include <string>
#include <vector>

#include "binar/sequence.hpp"

namespace binar {

// Finite prefix of a registered named sequence family. Families and their
// parameters:
//   catalan            C_0, C_1, ...                      (no parameters)
//   crs                r, s    C^{(r,s)}_t for t = 1..count
//   cseq               j       c_j(t) for t = 1..count
//   shapiro-row        n       row n of the Catalan triangle, k = 1..n
//   cg-init            m, k    hexagon top-row initial condition (k odd not
//                              required here; the checker families decide)
//   aeration           r, s    coefficients of (1-x^r)^s
// Finite coefficient families pad with zeros when count exceeds their length;
// shapiro-row truncates at the row end.
// Throws std::invalid_argument on unknown family, missing/extra parameters,
// or out-of-range values.
SeqVec named_sequence(const std::string& family,
                      const std::map<std::string, long>& params, long count);

// Registered family names, sorted; for CLI help and error messages.
std::vector<std::string> registry_families();

}  // namespace binar
