#ifndef BCINTERP_VERIFIERS_HPP
#define BCINTERP_VERIFIERS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bcinterp {

/*
 * Named verification suites over the acceptance grids. Each case is a
 * pure closure building its own computation context, so cases run safely
 * on any number of workers; results are reported in case order regardless
 * of scheduling.
 *
 * Grid policy: identities are verified fully symbolically for |mu| <= 3,
 * n <= 2 (and wherever the grid is trivially small); the larger grid runs
 * at generic exact-rational specializations drawn from the seed, five
 * points per case, each passing the genericity check at bound 64.
 */

struct VerifyCase {
  std::string id;
  std::function<bool()> run;
};

struct VerifyResult {
  std::string id;
  bool pass = false;
  std::string error;  // nonempty when the case threw
};

struct SuiteOptions {
  long max_weight = -1;  // -1 = suite default
  int n = -1;            // restrict to one variable count
  int m = -1;            // cauchy second box side
  int k = -1;            // integral specialization index
  std::uint64_t seed = 1;
  int spec_points = 5;
};

// Suites: routes, vanishing, shifts, topterm, limits, pieri, cauchy,
// dualcauchy, integral, binomial-n1, duality-n1, all.
std::vector<std::string> suite_names();
std::vector<VerifyCase> make_suite(const std::string& suite, const SuiteOptions& options);

std::vector<VerifyResult> run_cases(const std::vector<VerifyCase>& cases, int workers);

}  // namespace bcinterp

#endif
