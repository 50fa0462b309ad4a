#ifndef LATBOUNCE_CLOSED_FORMS_HPP
#define LATBOUNCE_CLOSED_FORMS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "latbounce/series.hpp"

namespace latbounce {

struct NonIntegerCoefficient : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Step : char { E = 'E', N = 'N' };

/// Path classes by first and last step. `all` means no restriction.
enum class Restriction { all, ee, en, ne, nn };

std::string to_string(Restriction r);
/// Accepts "all", "EE", "EN", "NE", "NN" (case-insensitive).
Restriction parse_restriction(const std::string& text);
Restriction restriction_of(Step first, Step last);

/// The line y = (beta/alpha) x, with alpha and beta coprime.
class Slope {
 public:
  Slope(unsigned alpha, unsigned beta);

  unsigned alpha() const noexcept { return alpha_; }
  unsigned beta() const noexcept { return beta_; }
  unsigned steps_per_unit() const noexcept { return alpha_ + beta_; }
  /// (alpha, beta) -> (beta, alpha): reflection across y = x.
  Slope transposed() const noexcept { return Slope(beta_, alpha_, unchecked{}); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  struct unchecked {};
  Slope(unsigned a, unsigned b, unchecked) : alpha_(a), beta_(b) {}

  unsigned alpha_;
  unsigned beta_;
};

/// C(m, n), zero when n < 0 or n > m.
Integer binomial(long m, long n);

/// Sum_{k>=1} C((a+b)k, ak) x^k: all paths to (ak, bk).
Series g_series(const Slope& slope, std::size_t order);

/// Paths to (ak, bk) starting with `first` and ending with `last`. The EN and
/// NE classes have the same count.
Series g_ab_series(const Slope& slope, Step first, Step last, std::size_t order);
Series g_ab_series(const Slope& slope, Restriction r, std::size_t order);

/// g_{E*} = g_ee + g_en for first = E, g_{N*} = g_nn + g_en for first = N.
Series g_prefix_series(const Slope& slope, Step first, std::size_t order);

/// Fuss-Catalan series Sum_{k>=0} C((a+1)k, k)/(ak+1) x^k.
Series fuss_catalan(unsigned alpha, std::size_t order);

/// The three base series and g, bundled because almost every formula needs
/// all of them.
struct BaseSeries {
  Series g, ee, en, nn;

  /// g_en^2 - g_ee g_nn
  Series discriminant() const { return en * en - ee * nn; }
};

BaseSeries base_series(const Slope& slope, std::size_t order);

}  // namespace latbounce

#endif  // LATBOUNCE_CLOSED_FORMS_HPP
