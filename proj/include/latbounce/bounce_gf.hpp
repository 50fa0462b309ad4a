#ifndef LATBOUNCE_BOUNCE_GF_HPP
#define LATBOUNCE_BOUNCE_GF_HPP

#include <cstddef>
#include <vector>

#include "latbounce/closed_forms.hpp"
#include "latbounce/execution.hpp"
#include "latbounce/series.hpp"

namespace latbounce {

/// Generating functions of bounce-free paths, split by first/last step.
/// The NE class equals the EN class.
struct BounceFree {
  Series ee, en, nn;

  /// f_{E*} = f_{*E} = f_ee + f_ne
  Series e_side() const { return ee + en; }
  /// f_{N*} = f_{*N} = f_nn + f_ne
  Series n_side() const { return nn + en; }
  Series total() const { return ee + nn + en * Integer(2); }
};

BounceFree bounce_free(const Slope& slope, std::size_t order);

/// Paths of class EE, EN or NN with no right bounces (equivalently, with no
/// left bounces): g_ab / (1 + g_en).
Series nrb_series(const Slope& slope, Restriction r, std::size_t order);

/// Bounce-free paths of class EE, EN, NE or NN.
Series bounce_free_ab(const Slope& slope, Restriction r, std::size_t order);

/// All bounce-free paths, from the g-series directly.
Series bounce_free_total(const Slope& slope, std::size_t order);

enum class Side { left, right };

/// B_{m,0} (side = left) or B_{0,m} (side = right) for m >= 1.
Series one_sided_bounce_series(const Slope& slope, Side side, unsigned count, std::size_t order);

/// Paths with no left bounces, any number of right bounces (and vice versa).
Series no_left_bounce_total(const Slope& slope, std::size_t order);

/// B_{l,r} for l, r >= 1 as the four-case sum over groupings of right bounces.
Series b_lr_closed_form(const Slope& slope, unsigned left, unsigned right, std::size_t order);
Series b_lr_closed_form(const BounceFree& f, unsigned left, unsigned right);

/// A power series in x whose coefficients depend polynomially on two markers
/// s and t, kept only up to s^L t^R. Entry (i, j) is the coefficient of
/// s^i t^j.
class MarkerSeries {
 public:
  MarkerSeries(std::size_t max_s, std::size_t max_t, std::size_t order);

  std::size_t max_s() const noexcept { return max_s_; }
  std::size_t max_t() const noexcept { return max_t_; }
  std::size_t order() const noexcept { return order_; }

  const Series& at(std::size_t i, std::size_t j) const { return cells_[index(i, j)]; }
  Series& at(std::size_t i, std::size_t j) { return cells_[index(i, j)]; }

  /// Adds `c * s^i t^j`; terms beyond the marker bounds are dropped.
  MarkerSeries& add_term(std::size_t i, std::size_t j, const Series& c);

  /// Entries with i <= max_s and j <= max_t of the product.
  friend MarkerSeries operator*(const MarkerSeries& a, const MarkerSeries& b);
  friend MarkerSeries operator+(MarkerSeries a, const MarkerSeries& b);
  friend MarkerSeries operator-(MarkerSeries a, const MarkerSeries& b);

  /// Inverse in the ring of power series in s and t; needs a unit constant
  /// term at (0, 0).
  MarkerSeries inverse() const;

  /// Sum over all entries. Equals the value at s = t = 1 once the bounds hold
  /// every nonzero entry.
  Series sum() const;

  friend bool operator==(const MarkerSeries&, const MarkerSeries&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (max_t_ + 1) + j; }

  std::size_t max_s_, max_t_, order_;
  std::vector<Series> cells_;
};

/// Coefficients B_{l,r}(x) of G(x, s, t) (or of G_ab) for 0 <= l <= L,
/// 0 <= r <= R, truncated at x^N.
class BounceTable {
 public:
  BounceTable(Slope slope, Restriction restriction, MarkerSeries grid);

  const Slope& slope() const noexcept { return slope_; }
  Restriction restriction() const noexcept { return restriction_; }
  std::size_t order() const noexcept { return grid_.order(); }
  std::size_t max_left() const noexcept { return grid_.max_s(); }
  std::size_t max_right() const noexcept { return grid_.max_t(); }

  const Series& entry(std::size_t left, std::size_t right) const { return grid_.at(left, right); }
  const MarkerSeries& grid() const noexcept { return grid_; }

  /// Sum of every entry: all paths of the class when L and R cover k - 1.
  Series total() const { return grid_.sum(); }

  friend bool operator==(const BounceTable&, const BounceTable&) = default;

 private:
  Slope slope_;
  Restriction restriction_;
  MarkerSeries grid_;
};

/// Numerator and denominator of G (or G_ab) as polynomials in s and t.
struct BounceRational {
  MarkerSeries numerator;
  MarkerSeries denominator;
};

BounceRational bounce_rational(const Slope& slope, Restriction r, std::size_t max_left, std::size_t max_right,
                               std::size_t order);

/// Expands G (or G_ab) to the (L, R) grid. This is the library's main route.
BounceTable bounce_table(const Slope& slope, Restriction r, std::size_t max_left, std::size_t max_right,
                         std::size_t order);

/// Unrestricted table assembled entry by entry from the bounce-free series,
/// the one-sided products and the four-case sums. Entries are independent, so
/// the parallel variant distributes them over OpenMP threads.
BounceTable bounce_table_closed_form(const Slope& slope, std::size_t max_left, std::size_t max_right,
                                     std::size_t order, Execution exec = Execution::parallel);

/// Paths to (n, n) with exactly b bounces (alpha = beta = 1): 2 (c(x) - 1)^{b+1}.
Series g_b_series(unsigned bounces, std::size_t order);
/// The same series from its binomial coefficient formula.
Series g_b_binomial_series(unsigned bounces, std::size_t order);

}  // namespace latbounce

#endif  // LATBOUNCE_BOUNCE_GF_HPP
