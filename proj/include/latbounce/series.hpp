#ifndef LATBOUNCE_SERIES_HPP
#define LATBOUNCE_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace latbounce {

using Integer = mpz_class;

struct NonUnitConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonzeroConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct ValuationMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact integer
/// coefficients. N (the truncation order) travels with the value; binary
/// operations produce a result at the smaller of the two operand orders.
class Series {
 public:
  /// The zero series at order `order`.
  explicit Series(std::size_t order = 0);
  /// Coefficients c_0..c_N; `coeffs` must be non-empty.
  explicit Series(std::vector<Integer> coeffs);
  Series(std::initializer_list<long> coeffs, std::size_t order);

  static Series constant(const Integer& c, std::size_t order);
  static Series monomial(const Integer& c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^j; j must not exceed order().
  const Integer& operator[](std::size_t j) const { return coeffs_[j]; }
  Integer& operator[](std::size_t j) { return coeffs_[j]; }
  const Integer& at(std::size_t j) const { return coeffs_.at(j); }

  /// Drops every coefficient above x^order. `order` must not exceed order().
  Series truncated(std::size_t order) const;

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() > order(); }

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Integer& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Integer& c) { return a *= c; }
  friend Series operator*(const Integer& c, Series a) { return a *= c; }
  friend Series operator-(Series a);

  /// Equality of both order and coefficients.
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Same as a == b after truncating both to the smaller order.
bool agree(const Series& a, const Series& b);

/// Series plus a constant (the constant is added to c_0).
Series operator+(Series a, long c);
Series operator+(long c, Series a);
Series operator-(long c, const Series& a);
Series operator-(Series a, long c);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// Multiplicative inverse; requires c_0 = +-1.
Series reciprocal(const Series& a);

enum class Cancel {
  none,
  /// Strip the common factor x^m, m = valuation(b), before dividing. The
  /// result is m orders shorter than the operands.
  common_power,
};

Series div(const Series& a, const Series& b, Cancel mode = Cancel::none);

/// 1 / (1 - a) for a with zero constant term.
Series geometric_sum(const Series& a);

Series pow(const Series& a, unsigned exponent);

/// Coefficients "c0 c1 ... cN" separated by single spaces.
std::string to_string(const Series& s);
std::ostream& operator<<(std::ostream& os, const Series& s);

/// Numerator/denominator pair, expanded on demand.
struct RationalSeriesExpr {
  Series numerator;
  Series denominator;

  Series expand() const { return div(numerator, denominator); }
};

}  // namespace latbounce

#endif  // LATBOUNCE_SERIES_HPP
