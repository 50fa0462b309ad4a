#include <doctest.h>

#include <random>

#include "latbounce/series.hpp"

using namespace latbounce;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant = false) {
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<Integer> v(order + 1);
  for (auto& c : v) c = coeff(rng);
  if (unit_constant) v[0] = (rng() & 1U) ? 1 : -1;
  return Series(std::move(v));
}

}  // namespace

TEST_CASE("add") {
  const Series a({1, 1}, 3);
  CHECK(a + Series(3) == a);
  CHECK((a + Series({-1, -1}, 3)).is_zero());
  CHECK(Series({0, 1, 2}, 2) + Series({0, 0, 1}, 2) == Series({0, 1, 3}, 2));
}

TEST_CASE("add truncates to the smaller order") {
  const Series r = Series({1, 2, 3, 4}, 3) + Series({1, 1}, 1);
  CHECK(r.order() == 1);
  CHECK(r == Series({2, 3}, 1));
}

TEST_CASE("mul") {
  const Series a({3, -1, 4, 1, 5}, 4);
  CHECK(a * Series::constant(1, 4) == a);
  CHECK(Series({1, 1}, 2) * Series({1, -1}, 2) == Series({1, 0, -1}, 2));
  const Series b({0, 1, 1, 2}, 4);
  CHECK(b * b == Series({0, 0, 1, 2, 5}, 4));
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(Series({1, -1}, 3)) == Series({1, 1, 1, 1}, 3));
  CHECK(reciprocal(Series::constant(1, 0)) == Series::constant(1, 0));
  const Series a({1, 1, 2, 6}, 3);
  const Series inv = reciprocal(a);
  CHECK(a * inv == Series::constant(1, 3));
  CHECK(inv == Series({1, -1, -1, -3}, 3));
  CHECK(reciprocal(Series({-1, 2}, 2)) == Series({-1, -2, -4}, 2));
}

TEST_CASE("reciprocal rejects a non-unit constant term") {
  CHECK_THROWS_AS(reciprocal(Series({2, 1}, 2)), NonUnitConstantTerm);
  CHECK_THROWS_AS(reciprocal(Series({0, 1}, 2)), NonUnitConstantTerm);
}

TEST_CASE("div") {
  CHECK(div(Series({0, 0, 1}, 2), Series({0, 1}, 2), Cancel::common_power) == Series({0, 1}, 1));
  const Series q = div(Series({0, 1, 2, 5}, 3), Series({1, 1, 1, 2}, 3));
  CHECK(q == Series({0, 1, 1, 3}, 3));
  CHECK(q * Series({1, 1, 1, 2}, 3) == Series({0, 1, 2, 5}, 3));
  CHECK_THROWS_AS(div(Series({1, 1}, 2), Series({0, 1}, 2), Cancel::common_power), ValuationMismatch);
}

TEST_CASE("div without cancellation needs a unit constant term") {
  CHECK_THROWS_AS(div(Series({0, 0, 1}, 2), Series({0, 1}, 2)), NonUnitConstantTerm);
  CHECK_THROWS_AS(div(Series({0, 1}, 2), Series(2), Cancel::common_power), NonUnitConstantTerm);
}

TEST_CASE("div with cancellation shrinks the order by the valuation") {
  // (x^2 + 3x^3) / (x^2 + x^3) = (1 + 3x) / (1 + x)
  const Series r = div(Series({0, 0, 1, 3, 0, 0}, 5), Series({0, 0, 1, 1, 0, 0}, 5), Cancel::common_power);
  CHECK(r.order() == 3);
  CHECK(r == Series({1, 2, -2, 2}, 3));
}

TEST_CASE("geometric_sum") {
  CHECK(geometric_sum(Series({0, 1}, 3)) == Series({1, 1, 1, 1}, 3));
  CHECK(geometric_sum(Series(4)) == Series::constant(1, 4));
  CHECK(geometric_sum(Series({0, 1, 1}, 3)) == Series({1, 1, 2, 3}, 3));
  CHECK_THROWS_AS(geometric_sum(Series({1, 1}, 3)), NonzeroConstantTerm);
}

TEST_CASE("geometric_sum equals the partial sums of powers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Series a = random_series(rng, 6);
    a[0] = 0;
    Series sum = Series::constant(1, 6);
    for (unsigned j = 1; j <= 6; ++j) sum += pow(a, j);
    CHECK(geometric_sum(a) == sum);
  }
}

TEST_CASE("valuation and truncation") {
  CHECK(Series({0, 0, 3}, 4).valuation() == 2);
  CHECK(Series(4).valuation() == 5);
  CHECK(Series({1, 2, 3, 4}, 3).truncated(1) == Series({1, 2}, 1));
  CHECK_THROWS(Series({1, 2}, 1).truncated(2));
  CHECK(agree(Series({1, 2, 3}, 2), Series({1, 2}, 1)));
  CHECK_FALSE(agree(Series({1, 2, 3}, 2), Series({1, 3}, 1)));
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const Series inv = reciprocal(Series({1, -1000000}, 8));
  Integer expected = 1;
  for (int i = 0; i < 8; ++i) expected *= 1000000;
  CHECK(inv[8] == expected);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng() % 10;
    const Series a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("reciprocal and div round trips") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng() % 10;
    const Series u = random_series(rng, n, true);
    const Series a = random_series(rng, n);
    CHECK(u * reciprocal(u) == Series::constant(1, n));
    CHECK(div(a, u) * u == a);
  }
}

TEST_CASE("div with cancellation round trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = 1 + rng() % 3;
    const std::size_t n = m + rng() % 8;
    Series b = random_series(rng, n, true);
    Series a = random_series(rng, n);
    // Multiply both by x^m.
    const Series xm = Series::monomial(1, m, n);
    const Series q = div(a * xm, b * xm, Cancel::common_power);
    REQUIRE(q.order() == n - m);
    CHECK(q * b.truncated(n - m) == a.truncated(n - m));
  }
}

TEST_CASE("truncation commutes with the ring operations") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = rng() % n;
    const Series a = random_series(rng, n), b = random_series(rng, n), u = random_series(rng, n, true);
    CHECK((a * b).truncated(m) == a.truncated(m) * b.truncated(m));
    CHECK((a + b).truncated(m) == a.truncated(m) + b.truncated(m));
    CHECK(reciprocal(u).truncated(m) == reciprocal(u.truncated(m)));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(Series({1, -2, 0}, 2)) == "1 -2 0");
  const RationalSeriesExpr e{Series({0, 1}, 3), Series({1, -1}, 3)};
  CHECK(e.expand() == Series({0, 1, 1, 1}, 3));
}
