#include <doctest.h>

#include <numeric>

#include "latbounce/oracle.hpp"

using namespace latbounce;

namespace {

std::vector<Slope> coprime_slopes(unsigned max_sum) {
  std::vector<Slope> out;
  for (unsigned s = 2; s <= max_sum; ++s)
    for (unsigned a = 1; a < s; ++a)
      if (std::gcd(a, s - a) == 1) out.emplace_back(a, s - a);
  return out;
}

std::vector<Step> transpose(std::span<const Step> steps) {
  std::vector<Step> out;
  for (Step s : steps) out.push_back(s == Step::E ? Step::N : Step::E);
  return out;
}

}  // namespace

TEST_CASE("classify hand-traced paths") {
  const Slope unit(1, 1);
  const BounceProfile nene = classify(StepWord("NENE", unit), unit);
  CHECK(nene.left == 1);
  CHECK(nene.right == 0);
  CHECK(nene.first == Step::N);
  CHECK(nene.last == Step::E);

  const BounceProfile enen = classify(StepWord("ENEN", unit), unit);
  CHECK(enen.left == 0);
  CHECK(enen.right == 1);

  const Slope two(2, 1);
  const BounceProfile ene = classify(StepWord("ENE", two), two);
  CHECK(ene.bounce_free());
  CHECK(ene.horizontal_crosses == 0);
}

TEST_CASE("touches with EE or NN are not bounces") {
  const Slope unit(1, 1);
  // Passes through (2,2) with an EE vertex, and with an NN vertex.
  const BounceProfile p = classify(StepWord("NNEEEENN", unit), unit);
  CHECK(p.bounce_free());
  CHECK(p.horizontal_crosses == 1);
  const BounceProfile q = classify(StepWord("EENNNNEE", unit), unit);
  CHECK(q.bounce_free());
  CHECK(q.horizontal_crosses == 0);
}

TEST_CASE("horizontal crosses are tracked for beta = 1 only") {
  const Slope s(2, 3);
  CHECK_FALSE(classify(StepWord("EENNN", s), s).horizontal_crosses.has_value());
}

TEST_CASE("malformed paths") {
  const Slope unit(1, 1);
  CHECK_THROWS_AS(StepWord("EEN", unit), MalformedPath);
  CHECK_THROWS_AS(StepWord("", unit), MalformedPath);
  CHECK_THROWS_AS(StepWord("EXNN", unit), MalformedPath);
  CHECK(StepWord("enne", unit).str() == "ENNE");
  CHECK(StepWord("EENENN", unit).semilength() == 3);
}

TEST_CASE("enumerate_profiles small cases") {
  const Slope unit(1, 1);
  const ProfileHistogram h2 = enumerate_profiles(unit, 2);
  CHECK(total_paths(h2) == 6);
  std::uint64_t free2 = 0;
  for (const auto& [p, n] : h2)
    if (p.bounce_free()) free2 += n;
  CHECK(free2 == 4);

  const ProfileHistogram h23 = enumerate_profiles(Slope(2, 3), 1);
  CHECK(total_paths(h23) == 10);
  for (const auto& [p, n] : h23) CHECK(p.bounce_free());

  const ProfileHistogram h1 = enumerate_profiles(unit, 1);
  CHECK(total_paths(h1) == 2);
  for (const auto& [p, n] : h1) CHECK(p.bounce_free());
}

TEST_CASE("count_table") {
  const Slope unit(1, 1);
  const CountGrid all = count_table(unit, 2, Restriction::all);
  CHECK(all == CountGrid{{{0, 0}, 4}, {{1, 0}, 1}, {{0, 1}, 1}});
  const CountGrid en = count_table(unit, 2, Restriction::en);
  CHECK(en == CountGrid{{{0, 0}, 1}, {{0, 1}, 1}});
}

TEST_CASE("count_table marginals add up to the binomial total") {
  for (const Slope& s : coprime_slopes(5))
    for (std::size_t k = 1; s.steps_per_unit() * k <= 14; ++k) {
      std::uint64_t sum = 0;
      for (Restriction r : {Restriction::ee, Restriction::en, Restriction::ne, Restriction::nn})
        for (const auto& [lr, n] : count_table(s, k, r)) sum += n;
      CHECK(Integer(sum) == binomial(s.steps_per_unit() * k, s.alpha() * k));
    }
}

TEST_CASE("every path is enumerated once") {
  for (const Slope& s : coprime_slopes(7))
    for (std::size_t k = 1; s.steps_per_unit() * k <= 16; ++k) {
      const ProfileHistogram h = enumerate_profiles(s, k);
      CHECK(Integer(total_paths(h)) == binomial(s.steps_per_unit() * k, s.alpha() * k));
      std::uint64_t first_e = 0;
      for (const auto& [p, n] : h) {
        CHECK(p.bounces() + 1 <= k);
        if (p.first == Step::E) first_e += n;
      }
      CHECK(Integer(first_e) == g_prefix_series(s, Step::E, k)[k]);
    }
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (const Slope& s : coprime_slopes(5))
    for (std::size_t k = 1; s.steps_per_unit() * k <= 16; ++k)
      CHECK(enumerate_profiles(s, k, Execution::parallel) == enumerate_profiles(s, k, Execution::serial));
}

TEST_CASE("transposing a path swaps left and right bounces") {
  for (const Slope& s : coprime_slopes(6)) {
    const Slope t = s.transposed();
    for (std::size_t k = 1; s.steps_per_unit() * k <= 12; ++k) {
      // Walk every word by counting through subsets of E positions.
      const std::size_t len = s.steps_per_unit() * k;
      for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != s.alpha() * k) continue;
        std::vector<Step> steps;
        for (std::size_t i = 0; i < len; ++i) steps.push_back((mask >> i) & 1U ? Step::E : Step::N);
        const BounceProfile p = classify(StepWord(steps, s), s);
        const BounceProfile q = classify(StepWord(transpose(steps), t), t);
        REQUIRE(p.left == q.right);
        REQUIRE(p.right == q.left);
      }
    }
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(enumerate_profiles(Slope(1, 1), 13), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_profiles(Slope(1, 1), 6, Execution::serial, {24, 100}), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_profiles(Slope(1, 1), 0), std::invalid_argument);
}

TEST_CASE("enumerate_syt") {
  CHECK(enumerate_syt({3, 0}) == 1);
  CHECK(enumerate_syt({2, 1}) == 2);
  CHECK(enumerate_syt({4, 1}) == 4);
  CHECK(enumerate_syt({3, 3}) == 5);
  CHECK_THROWS_AS(enumerate_syt({10, 9}), BudgetExceeded);
  CHECK(enumerate_syt({10, 9}, 19) == 16796);
  CHECK_THROWS_AS(enumerate_syt({1, 2}), InvalidShape);
}
