#include <doctest.h>

#include <numeric>

#include "latbounce/bounce_gf.hpp"
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

template <class Pred>
std::uint64_t oracle_count(const Slope& s, std::size_t k, Pred pred) {
  std::uint64_t n = 0;
  for (const auto& [p, count] : enumerate_profiles(s, k))
    if (pred(p)) n += count;
  return n;
}

Series tail(const Series& s) {
  Series out = s;
  out[0] = 0;
  return out;
}

}  // namespace

TEST_CASE("nrb_series") {
  const Slope unit(1, 1);
  CHECK(nrb_series(unit, Restriction::en, 3) == Series({0, 1, 1, 3}, 3));
  CHECK(nrb_series(unit, Restriction::ee, 2) == Series({0, 0, 1}, 2));
  CHECK(nrb_series(Slope(2, 1), Restriction::en, 1)[1] == 1);
  CHECK_THROWS_AS(nrb_series(unit, Restriction::ne, 3), std::invalid_argument);
}

TEST_CASE("nrb_series counts paths with no right bounces") {
  for (const Slope& s : coprime_slopes(6))
    for (Restriction r : {Restriction::ee, Restriction::en, Restriction::nn}) {
      const std::size_t kmax = 16 / s.steps_per_unit();
      const Series nrb = nrb_series(s, r, kmax);
      for (std::size_t k = 1; k <= kmax; ++k) {
        CAPTURE(k);
        CHECK(nrb[k] == oracle_count(s, k, [&](const BounceProfile& p) { return p.restriction() == r && p.right == 0; }));
      }
    }
}

TEST_CASE("bounce_free_ab") {
  const Slope unit(1, 1);
  CHECK(bounce_free_ab(unit, Restriction::en, 3) == Series({0, 1, 1, 3}, 3));
  CHECK(bounce_free_ab(Slope(2, 1), Restriction::ee, 8) == Series({0, 1, 4, 18, 89, 466, 2537, 14209, 81316}, 8));
  CHECK(bounce_free_ab(Slope(2, 1), Restriction::en, 8) == Series({0, 1, 3, 13, 63, 326, 1761, 9808, 55895}, 8));
  CHECK(bounce_free_ab(Slope(3, 5), Restriction::ne, 5) == bounce_free_ab(Slope(3, 5), Restriction::en, 5));
  CHECK_THROWS(bounce_free_ab(unit, Restriction::all, 3));
}

TEST_CASE("bounce_free_total") {
  CHECK(bounce_free_total(Slope(1, 1), 4) == Series({0, 2, 4, 10, 28}, 4));
  const Slope unit(1, 1);
  const BounceFree f = bounce_free(unit, 10);
  CHECK(bounce_free_total(unit, 10) == f.ee + f.nn + f.en * Integer(2));
  // Exhaustive counts over paths to (3k, 2k): 10 at k = 1, 162 at k = 2.
  CHECK(bounce_free_total(Slope(3, 2), 2) == Series({0, 10, 162}, 2));
}

TEST_CASE("one_sided_bounce_series") {
  const Slope unit(1, 1);
  CHECK(one_sided_bounce_series(unit, Side::left, 1, 2)[2] == 1);
  CHECK(one_sided_bounce_series(unit, Side::right, 1, 2)[2] == 1);
  for (unsigned m = 1; m <= 3; ++m)
    CHECK(one_sided_bounce_series(Slope(2, 3), Side::left, m, 5) ==
          one_sided_bounce_series(Slope(3, 2), Side::right, m, 5));
  // Exhaustive counts over paths to (2k, 3k).
  CHECK(one_sided_bounce_series(Slope(2, 3), Side::left, 1, 4) == Series({0, 0, 24, 780, 21836}, 4));
  CHECK(one_sided_bounce_series(Slope(2, 3), Side::left, 2, 4) == Series({0, 0, 0, 72, 3396}, 4));
  CHECK_THROWS(one_sided_bounce_series(unit, Side::left, 0, 3));
}

TEST_CASE("no_left_bounce_total") {
  CHECK(no_left_bounce_total(Slope(1, 1), 3) == Series({0, 2, 5, 15}, 3));
  CHECK(no_left_bounce_total(Slope(2, 1), 1)[1] == 3);
  for (const Slope& s : coprime_slopes(6)) {
    const std::size_t n = 10;
    Series sum = bounce_free_total(s, n);
    for (unsigned l = 1; l <= n; ++l) sum += one_sided_bounce_series(s, Side::left, l, n);
    CHECK(no_left_bounce_total(s, n) == sum);
  }
}

TEST_CASE("b_lr_closed_form") {
  const Slope unit(1, 1);
  // Exhaustive counts: none up to (3,3), then 2 at (4,4) and 12 at (5,5).
  CHECK(b_lr_closed_form(unit, 1, 1, 5) == Series({0, 0, 0, 0, 2, 12}, 5));
  for (const Slope& s : coprime_slopes(5))
    for (unsigned l = 1; l <= 3; ++l)
      for (unsigned r = 1; r <= 3; ++r) {
        const Series b = b_lr_closed_form(s, l, r, l + r);
        for (std::size_t k = 0; k <= l + r; ++k) CHECK(b[k] == 0);
      }
  CHECK_THROWS(b_lr_closed_form(unit, 0, 1, 3));
}

TEST_CASE("bounce_table small grids") {
  const Slope unit(1, 1);
  const BounceTable t = bounce_table(unit, Restriction::all, 2, 2, 4);
  CHECK(t.entry(0, 0) == Series({0, 2, 4, 10, 28}, 4));
  CHECK(t.entry(0, 0)[2] == 4);
  CHECK(t.entry(1, 0)[2] == 1);
  CHECK(t.entry(0, 1)[2] == 1);
  CHECK(t.entry(1, 1)[2] == 0);
  CHECK(t.entry(1, 1)[4] == 2);

  const BounceTable full = bounce_table(unit, Restriction::all, 6, 6, 6);
  CHECK(full.total() == g_series(unit, 6));

  const BounceTable en = bounce_table(unit, Restriction::en, 1, 1, 2);
  CHECK(en.entry(0, 0)[2] == 1);
  CHECK(en.entry(0, 1)[2] == 1);
  CHECK(en.entry(1, 0)[2] == 0);
}

TEST_CASE("bounce_table entries are non-negative and start at the bounce-free series") {
  for (const Slope& s : coprime_slopes(6))
    for (Restriction r : {Restriction::all, Restriction::ee, Restriction::en, Restriction::ne, Restriction::nn}) {
      const BounceTable t = bounce_table(s, r, 4, 4, 8);
      CHECK(t.entry(0, 0) == (r == Restriction::all ? bounce_free_total(s, 8) : bounce_free_ab(s, r, 8)));
      for (std::size_t l = 0; l <= 4; ++l)
        for (std::size_t rr = 0; rr <= 4; ++rr)
          for (const Integer& c : t.entry(l, rr).coeffs()) CHECK(sgn(c) >= 0);
    }
}

TEST_CASE("bounce_table matches the oracle") {
  for (const Slope& s : coprime_slopes(5)) {
    const std::size_t kmax = 14 / s.steps_per_unit();
    for (Restriction r : {Restriction::all, Restriction::ee, Restriction::en, Restriction::ne, Restriction::nn}) {
      const BounceTable t = bounce_table(s, r, kmax, kmax, kmax);
      for (std::size_t k = 1; k <= kmax; ++k) {
        const CountGrid counts = count_table(s, k, r);
        for (std::size_t l = 0; l <= kmax; ++l)
          for (std::size_t rr = 0; rr <= kmax; ++rr) {
            const auto it = counts.find({static_cast<unsigned>(l), static_cast<unsigned>(rr)});
            CHECK(t.entry(l, rr)[k] == (it == counts.end() ? 0UL : it->second));
          }
      }
    }
  }
}

TEST_CASE("closed-form assembly agrees with the rational expansion") {
  for (const Slope& s : coprime_slopes(6)) {
    const BounceTable rational = bounce_table(s, Restriction::all, 4, 4, 12);
    const BounceTable serial = bounce_table_closed_form(s, 4, 4, 12, Execution::serial);
    const BounceTable parallel = bounce_table_closed_form(s, 4, 4, 12, Execution::parallel);
    CHECK(serial == parallel);
    CHECK(serial == rational);
  }
}

TEST_CASE("nrb series factor through the bounce-free series") {
  for (const Slope& s : coprime_slopes(7)) {
    const std::size_t n = 12;
    const BaseSeries g = base_series(s, n);
    const BounceFree f = bounce_free(s, n);
    const Series one_en = 1 + g.en;
    const Series inv = reciprocal(1 - f.en);
    CHECK(inv == div(one_en * one_en - g.ee * g.nn, one_en));
    CHECK(f.en + f.ee * f.nn * inv == nrb_series(s, Restriction::en, n));
    CHECK(f.ee * inv == nrb_series(s, Restriction::ee, n));
    CHECK(f.nn * inv == nrb_series(s, Restriction::nn, n));
    CHECK(geometric_sum(f.en) == inv);
  }
}

TEST_CASE("MarkerSeries inverse") {
  // (1 - s x)^{-1} = sum_j s^j x^j
  MarkerSeries d(3, 2, 5);
  d.add_term(0, 0, Series::constant(1, 5));
  d.add_term(1, 0, -Series::monomial(1, 1, 5));
  const MarkerSeries inv = d.inverse();
  for (std::size_t j = 0; j <= 3; ++j) CHECK(inv.at(j, 0) == Series::monomial(1, j, 5));
  CHECK(inv.at(1, 1).is_zero());
  MarkerSeries one(3, 2, 5);
  one.add_term(0, 0, Series::constant(1, 5));
  CHECK(d * inv == one);
  MarkerSeries copy = d;
  CHECK(copy.add_term(9, 9, Series::constant(1, 5)) == d);
}

TEST_CASE("g_b_series") {
  const Series g1 = g_b_series(1, 4);
  CHECK(g1[2] == 2);
  CHECK(g1[3] == 8);
  CHECK(g1[4] == 28);
  CHECK(g_b_series(0, 10) == bounce_free_total(Slope(1, 1), 10));
  for (unsigned b = 0; b <= 6; ++b) CHECK(g_b_series(b, 14) == g_b_binomial_series(b, 14));
  CHECK(tail(g_b_series(2, 6)) == g_b_series(2, 6));
}
