#include "binar/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "binar/binomial.hpp"
#include "binar/catalan.hpp"

namespace binar {

namespace {

long get_param(const std::map<std::string, long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

void expect_keys(const std::map<std::string, long>& params,
                 std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    (void)v;
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* want) { return k == want; }) == keys.end())
      throw std::invalid_argument("unknown parameter '" + k + "'");
  }
}

SeqVec from_initial(const InitialSequence& p, long count) {
  return p.prefix(count);
}

}  // namespace

SeqVec named_sequence(const std::string& family,
                      const std::map<std::string, long>& params, long count) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  SeqVec out;
  if (family == "catalan") {
    expect_keys(params, {});
    for (long t = 0; t < count; ++t) out.push_back(catalan(t));
    return out;
  }
  if (family == "crs") {
    expect_keys(params, {"r", "s"});
    const long r = get_param(params, "r"), s = get_param(params, "s");
    if (r < 1 || s < 1) throw std::invalid_argument("crs needs r >= 1 and s >= 1");
    for (long t = 1; t <= count; ++t) out.push_back(generalized_catalan(r, s, t));
    return out;
  }
  if (family == "cseq") {
    expect_keys(params, {"j"});
    const long j = get_param(params, "j");
    if (j < 1) throw std::invalid_argument("cseq needs j >= 1");
    for (long t = 1; t <= count; ++t) out.push_back(c_sequence(j, t));
    return out;
  }
  if (family == "shapiro-row") {
    expect_keys(params, {"n"});
    const long n = get_param(params, "n");
    if (n < 1) throw std::invalid_argument("shapiro-row needs n >= 1");
    for (long k = 1; k <= n && k <= count; ++k) out.push_back(shapiro_entry(n, k));
    return out;
  }
  if (family == "cg-init") {
    expect_keys(params, {"m", "k"});
    const long m = get_param(params, "m"), k = get_param(params, "k");
    return from_initial(cg_initial_condition(m, k), count);
  }
  if (family == "aeration") {
    expect_keys(params, {"r", "s"});
    const long r = get_param(params, "r"), s = get_param(params, "s");
    if (r < 1 || s < 1) throw std::invalid_argument("aeration needs r >= 1 and s >= 1");
    return from_initial(aeration(r, s), count);
  }
  throw std::invalid_argument("unknown sequence family '" + family + "'");
}

std::vector<std::string> registry_families() {
  return {"aeration", "catalan", "cg-init", "crs", "cseq", "shapiro-row"};
}

}  // namespace binar
