#ifndef LATBOUNCE_VERIFY_HPP
#define LATBOUNCE_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latbounce/closed_forms.hpp"

namespace latbounce::verify {

/// First coefficient where two computations disagree.
struct Mismatch {
  std::string identity;
  unsigned alpha = 0, beta = 0;
  std::size_t k = 0;
  std::optional<std::size_t> left, right;
  std::string expected, actual;

  std::string describe() const;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;  // coefficient comparisons performed
  std::optional<Mismatch> failure;

  bool passed() const { return !failure.has_value(); }
};

struct Options {
  std::optional<Slope> slope;  // default: every slope in the suite's range
  std::size_t order = 12;
  std::size_t max_steps = 22;  // oracle budget in path length
  unsigned n_max = 10;         // SYT range: 0 <= b < n <= n_max
  unsigned bounce_n_max = 11;     // exactly-b-bounce oracle range
  unsigned b_max = 6;
  unsigned alpha_max = 5;      // beta = 1 suites
  unsigned marker_max = 4;     // l, r range for the four-case sums
  std::size_t random_cases = 1000;
  unsigned seed = 20170417;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const Options& opts);

/// Coprime slopes with alpha + beta <= max_sum, ordered by (alpha+beta, alpha).
std::vector<Slope> slopes_up_to(unsigned max_sum);

}  // namespace latbounce::verify

#endif  // LATBOUNCE_VERIFY_HPP
