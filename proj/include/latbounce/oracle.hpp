#ifndef LATBOUNCE_ORACLE_HPP
#define LATBOUNCE_ORACLE_HPP

// Exhaustive enumeration of lattice paths to (alpha k, beta k) with exact
// bounce and cross classification. Everything the generating functions claim
// is checked against these counts.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latbounce/beta_one.hpp"
#include "latbounce/closed_forms.hpp"
#include "latbounce/execution.hpp"

namespace latbounce {

struct MalformedPath : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A lattice path as a word over {E, N} ending on the line.
class StepWord {
 public:
  /// Throws MalformedPath unless the word has alpha k E's and beta k N's for
  /// some k >= 1.
  StepWord(std::vector<Step> steps, const Slope& slope);
  StepWord(std::string_view word, const Slope& slope);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return semilength_; }
  std::string str() const;

 private:
  std::vector<Step> steps_;
  std::size_t semilength_;
};

struct BounceProfile {
  std::uint8_t left = 0;
  std::uint8_t right = 0;
  /// Interior EE vertices on the line; present only for beta = 1.
  std::optional<std::uint8_t> horizontal_crosses;
  Step first = Step::E;
  Step last = Step::E;

  bool bounce_free() const noexcept { return left == 0 && right == 0; }
  unsigned bounces() const noexcept { return left + right; }
  Restriction restriction() const noexcept { return restriction_of(first, last); }

  friend auto operator<=>(const BounceProfile&, const BounceProfile&) = default;
};

BounceProfile classify(const StepWord& path, const Slope& slope);

/// Multiset of profiles: how many paths share each profile.
using ProfileHistogram = std::map<BounceProfile, std::uint64_t>;

struct EnumerationBudget {
  std::size_t max_steps = 24;
  std::uint64_t max_paths = 3'000'000;
};

/// Classifies all C((alpha+beta)k, alpha k) paths. The parallel kernel splits
/// the work by fixed step prefixes and merges per-thread histograms.
ProfileHistogram enumerate_profiles(const Slope& slope, std::size_t k, Execution exec = Execution::parallel,
                                    const EnumerationBudget& budget = {});

std::uint64_t total_paths(const ProfileHistogram& h);

/// Counts b_{l,r}(k) keyed by (l, r).
using CountGrid = std::map<std::pair<unsigned, unsigned>, std::uint64_t>;

CountGrid count_table(const ProfileHistogram& profiles, Restriction r);
CountGrid count_table(const Slope& slope, std::size_t k, Restriction r, Execution exec = Execution::parallel,
                      const EnumerationBudget& budget = {});

/// Standard Young tableaux of the shape by backtracking; at most 12 cells
/// unless `max_cells` says otherwise.
std::uint64_t enumerate_syt(const TwoRowShape& shape, unsigned max_cells = 12);

}  // namespace latbounce

#endif  // LATBOUNCE_ORACLE_HPP
