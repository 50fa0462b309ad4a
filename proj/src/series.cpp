#include "latbounce/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace latbounce {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Series: empty coefficient vector");
}

Series::Series(std::initializer_list<long> coeffs, std::size_t order) : coeffs_(order + 1) {
  std::size_t j = 0;
  for (long c : coeffs) {
    if (j > order) break;
    coeffs_[j++] = c;
  }
}

Series Series::constant(const Integer& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Integer& c, std::size_t power, std::size_t order) {
  Series s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("Series::truncated: order exceeds the known terms");
  return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

std::size_t Series::valuation() const noexcept {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return j;
  return coeffs_.size();
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

Series& Series::operator*=(const Integer& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  Series r(n);
  // Sparse low-order terms are common (every g_ab starts at x^1 or x^2).
  for (std::size_t i = va; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = vb; i + j <= n; ++j)
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return r;
}

Series operator-(Series a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

bool agree(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t j = 0; j <= n; ++j)
    if (a[j] != b[j]) return false;
  return true;
}

Series operator+(Series a, long c) {
  a[0] += c;
  return a;
}
Series operator+(long c, Series a) { return std::move(a) + c; }
Series operator-(Series a, long c) {
  a[0] -= c;
  return a;
}
Series operator-(long c, const Series& a) { return -a + c; }

Series add(const Series& a, const Series& b) { return a + b; }
Series mul(const Series& a, const Series& b) { return a * b; }

Series reciprocal(const Series& a) {
  const Integer& c0 = a[0];
  if (abs(c0) != 1) throw NonUnitConstantTerm("reciprocal: constant term " + c0.get_str() + " is not a unit");
  const std::size_t n = a.order();
  Series r(n);
  r[0] = c0;  // c0^{-1} == c0 for c0 = +-1
  Integer acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(a[j]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), r[k - j].get_mpz_t());
    }
    r[k] = -c0 * acc;
  }
  return r;
}

namespace {

Series shift_down(const Series& s, std::size_t m) {
  std::vector<Integer> c(s.coeffs().begin() + static_cast<std::ptrdiff_t>(m), s.coeffs().end());
  return Series(std::move(c));
}

}  // namespace

Series div(const Series& a, const Series& b, Cancel mode) {
  if (mode == Cancel::none || abs(b[0]) == 1) return a * reciprocal(b);

  const std::size_t m = b.valuation();
  if (m > b.order()) throw NonUnitConstantTerm("div: divisor is the zero series");
  if (a.valuation() < m)
    throw ValuationMismatch("div: valuation of the dividend is below the divisor's (" + std::to_string(m) + ")");
  if (m > a.order()) throw ValuationMismatch("div: dividend is not known up to x^" + std::to_string(m));
  return shift_down(a, m) * reciprocal(shift_down(b, m));
}

Series geometric_sum(const Series& a) {
  if (sgn(a[0]) != 0) throw NonzeroConstantTerm("geometric_sum: constant term must vanish");
  return reciprocal(1 - a);
}

Series pow(const Series& a, unsigned exponent) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string to_string(const Series& s) {
  std::string out;
  for (std::size_t j = 0; j <= s.order(); ++j) {
    if (j) out += ' ';
    out += s[j].get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << to_string(s); }

}  // namespace latbounce
