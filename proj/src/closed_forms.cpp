#include "latbounce/closed_forms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace latbounce {

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::all: return "all";
    case Restriction::ee: return "EE";
    case Restriction::en: return "EN";
    case Restriction::ne: return "NE";
    case Restriction::nn: return "NN";
  }
  return "?";
}

Restriction parse_restriction(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "ALL") return Restriction::all;
  if (t == "EE") return Restriction::ee;
  if (t == "EN") return Restriction::en;
  if (t == "NE") return Restriction::ne;
  if (t == "NN") return Restriction::nn;
  throw std::invalid_argument("unknown restriction '" + text + "'");
}

Restriction restriction_of(Step first, Step last) {
  if (first == Step::E) return last == Step::E ? Restriction::ee : Restriction::en;
  return last == Step::E ? Restriction::ne : Restriction::nn;
}

Slope::Slope(unsigned alpha, unsigned beta) : alpha_(alpha), beta_(beta) {
  if (alpha == 0 || beta == 0) throw std::invalid_argument("slope: alpha and beta must be positive");
  if (std::gcd(alpha, beta) != 1)
    throw std::invalid_argument("slope: gcd(" + std::to_string(alpha) + ", " + std::to_string(beta) + ") != 1");
}

Integer binomial(long m, long n) {
  if (m < 0) throw std::invalid_argument("binomial: negative upper index");
  if (n < 0 || n > m) return 0;
  n = std::min(n, m - n);
  // After step i the accumulator holds C(m - n + i, i), so each division is exact.
  Integer acc = 1;
  for (long i = 1; i <= n; ++i) {
    acc *= m - n + i;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

Series g_series(const Slope& slope, std::size_t order) {
  Series s(order);
  const long a = slope.alpha();
  const long ab = slope.steps_per_unit();
  for (std::size_t k = 1; k <= order; ++k) s[k] = binomial(ab * static_cast<long>(k), a * static_cast<long>(k));
  return s;
}

Series g_ab_series(const Slope& slope, Step first, Step last, std::size_t order) {
  // Fix the first and last step; the remaining (a+b)k - 2 steps are free.
  const long shift = (first == Step::E ? 1 : 0) + (last == Step::E ? 1 : 0);
  Series s(order);
  const long a = slope.alpha();
  const long ab = slope.steps_per_unit();
  for (std::size_t k = 1; k <= order; ++k) {
    const long kk = static_cast<long>(k);
    s[k] = binomial(ab * kk - 2, a * kk - shift);
  }
  return s;
}

Series g_ab_series(const Slope& slope, Restriction r, std::size_t order) {
  switch (r) {
    case Restriction::ee: return g_ab_series(slope, Step::E, Step::E, order);
    case Restriction::en: return g_ab_series(slope, Step::E, Step::N, order);
    case Restriction::ne: return g_ab_series(slope, Step::N, Step::E, order);
    case Restriction::nn: return g_ab_series(slope, Step::N, Step::N, order);
    case Restriction::all: return g_series(slope, order);
  }
  throw std::invalid_argument("g_ab_series: bad restriction");
}

Series g_prefix_series(const Slope& slope, Step first, std::size_t order) {
  return g_ab_series(slope, first, first, order) + g_ab_series(slope, Step::E, Step::N, order);
}

Series fuss_catalan(unsigned alpha, std::size_t order) {
  if (alpha == 0) throw std::invalid_argument("fuss_catalan: alpha must be positive");
  Series s(order);
  const long a = alpha;
  for (std::size_t k = 0; k <= order; ++k) {
    const long kk = static_cast<long>(k);
    const Integer numer = binomial((a + 1) * kk, kk);
    const Integer denom = a * kk + 1;
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
      throw NonIntegerCoefficient("fuss_catalan: inexact division at k = " + std::to_string(k));
    mpz_divexact(s[k].get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  }
  return s;
}

BaseSeries base_series(const Slope& slope, std::size_t order) {
  return {g_series(slope, order), g_ab_series(slope, Step::E, Step::E, order),
          g_ab_series(slope, Step::E, Step::N, order), g_ab_series(slope, Step::N, Step::N, order)};
}

}  // namespace latbounce
