#include "latbounce/oracle.hpp"

#include <algorithm>
#include <array>

namespace latbounce {

namespace {

std::size_t semilength_of(std::span<const Step> steps, const Slope& slope) {
  const auto east = static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::E));
  const std::size_t north = steps.size() - east;
  if (steps.empty() || east % slope.alpha() != 0 || north % slope.beta() != 0 ||
      east / slope.alpha() != north / slope.beta())
    throw MalformedPath("path with " + std::to_string(east) + " E and " + std::to_string(north) +
                        " N steps does not end on y = " + std::to_string(slope.beta()) + "x/" +
                        std::to_string(slope.alpha()));
  return east / slope.alpha();
}

// Assumes a valid step word. Vertex i sits between steps i-1 and i.
BounceProfile classify_steps(std::span<const Step> steps, const Slope& slope) {
  const long a = slope.alpha();
  const long b = slope.beta();
  const bool track_crosses = slope.beta() == 1;
  BounceProfile p;
  p.first = steps.front();
  p.last = steps.back();
  unsigned crosses = 0;
  long x = 0, y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const long before = a * y - b * x;
    (steps[i] == Step::E ? x : y) += 1;
    const long after = a * y - b * x;
    if (track_crosses && steps[i] == Step::E && ((before > 0 && after < 0) || (before < 0 && after > 0)))
      throw std::logic_error("classify: E-step crosses y = x/alpha away from a lattice point");
    if (i + 1 == steps.size() || after != 0) continue;
    const Step in = steps[i];
    const Step out = steps[i + 1];
    if (in == Step::E && out == Step::N)
      ++p.left;
    else if (in == Step::N && out == Step::E)
      ++p.right;
    else if (in == Step::E && out == Step::E)
      ++crosses;
  }
  if (track_crosses) p.horizontal_crosses = static_cast<std::uint8_t>(crosses);
  return p;
}

struct Walker {
  const Slope& slope;
  std::size_t east_total;
  std::size_t north_total;
  std::vector<Step> word;
  ProfileHistogram hist;

  void run(std::size_t east, std::size_t north) {
    if (east == east_total && north == north_total) {
      ++hist[classify_steps(word, slope)];
      return;
    }
    if (east < east_total) {
      word.push_back(Step::E);
      run(east + 1, north);
      word.pop_back();
    }
    if (north < north_total) {
      word.push_back(Step::N);
      run(east, north + 1);
      word.pop_back();
    }
  }
};

void merge_into(ProfileHistogram& into, const ProfileHistogram& from) {
  for (const auto& [profile, n] : from) into[profile] += n;
}

// All valid prefixes of the given length.
std::vector<std::vector<Step>> prefixes(std::size_t length, std::size_t east_total, std::size_t north_total) {
  std::vector<std::vector<Step>> out{{}};
  for (std::size_t depth = 0; depth < length; ++depth) {
    std::vector<std::vector<Step>> next;
    for (const auto& p : out) {
      const auto east = static_cast<std::size_t>(std::count(p.begin(), p.end(), Step::E));
      const std::size_t north = p.size() - east;
      for (Step s : {Step::E, Step::N}) {
        if (s == Step::E ? east == east_total : north == north_total) continue;
        next.push_back(p);
        next.back().push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

StepWord::StepWord(std::vector<Step> steps, const Slope& slope)
    : steps_(std::move(steps)), semilength_(semilength_of(steps_, slope)) {}

StepWord::StepWord(std::string_view word, const Slope& slope) : StepWord([&] {
    std::vector<Step> steps;
    for (char c : word) {
      if (c == 'E' || c == 'e')
        steps.push_back(Step::E);
      else if (c == 'N' || c == 'n')
        steps.push_back(Step::N);
      else
        throw MalformedPath(std::string("unexpected step '") + c + "'");
    }
    return steps;
  }(), slope) {}

std::string StepWord::str() const {
  std::string s;
  for (Step st : steps_) s += static_cast<char>(st);
  return s;
}

BounceProfile classify(const StepWord& path, const Slope& slope) {
  semilength_of(path.steps(), slope);
  return classify_steps(path.steps(), slope);
}

ProfileHistogram enumerate_profiles(const Slope& slope, std::size_t k, Execution exec,
                                    const EnumerationBudget& budget) {
  if (k == 0) throw std::invalid_argument("enumerate_profiles: semilength must be at least 1");
  const std::size_t east_total = slope.alpha() * k;
  const std::size_t north_total = slope.beta() * k;
  const std::size_t length = east_total + north_total;
  if (length > budget.max_steps)
    throw BudgetExceeded("enumerate_profiles: " + std::to_string(length) + " steps exceeds the budget of " +
                         std::to_string(budget.max_steps));
  const Integer count = binomial(static_cast<long>(length), static_cast<long>(east_total));
  if (count > budget.max_paths)
    throw BudgetExceeded("enumerate_profiles: " + count.get_str() + " paths exceeds the budget of " +
                         std::to_string(budget.max_paths));

  if (exec == Execution::serial) {
    Walker w{slope, east_total, north_total, {}, {}};
    w.word.reserve(length);
    w.run(0, 0);
    return std::move(w.hist);
  }

  const auto tasks = prefixes(std::min<std::size_t>(length, 8), east_total, north_total);
  ProfileHistogram merged;
#pragma omp parallel
  {
    Walker w{slope, east_total, north_total, {}, {}};
    w.word.reserve(length);
#pragma omp for schedule(dynamic) nowait
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
      const auto& prefix = tasks[static_cast<std::size_t>(t)];
      w.word.assign(prefix.begin(), prefix.end());
      const auto east = static_cast<std::size_t>(std::count(prefix.begin(), prefix.end(), Step::E));
      w.run(east, prefix.size() - east);
    }
#pragma omp critical(latbounce_merge_profiles)
    merge_into(merged, w.hist);
  }
  return merged;
}

std::uint64_t total_paths(const ProfileHistogram& h) {
  std::uint64_t n = 0;
  for (const auto& [profile, count] : h) n += count;
  return n;
}

CountGrid count_table(const ProfileHistogram& profiles, Restriction r) {
  CountGrid grid;
  for (const auto& [p, n] : profiles)
    if (r == Restriction::all || p.restriction() == r) grid[{p.left, p.right}] += n;
  return grid;
}

CountGrid count_table(const Slope& slope, std::size_t k, Restriction r, Execution exec,
                      const EnumerationBudget& budget) {
  return count_table(enumerate_profiles(slope, k, exec, budget), r);
}

namespace {

std::uint64_t fill_syt(unsigned top, unsigned bottom, const TwoRowShape& shape) {
  if (top == shape.first_row && bottom == shape.second_row) return 1;
  std::uint64_t n = 0;
  if (top < shape.first_row) n += fill_syt(top + 1, bottom, shape);
  if (bottom < shape.second_row && bottom < top) n += fill_syt(top, bottom + 1, shape);
  return n;
}

}  // namespace

std::uint64_t enumerate_syt(const TwoRowShape& shape, unsigned max_cells) {
  if (shape.second_row > shape.first_row) throw InvalidShape("two-row shape needs first_row >= second_row");
  if (shape.cells() > max_cells)
    throw BudgetExceeded("enumerate_syt: " + std::to_string(shape.cells()) + " cells exceeds the budget of " +
                         std::to_string(max_cells));
  return fill_syt(0, 0, shape);
}

}  // namespace latbounce
