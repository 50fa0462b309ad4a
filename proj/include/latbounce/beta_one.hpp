#ifndef LATBOUNCE_BETA_ONE_HPP
#define LATBOUNCE_BETA_ONE_HPP

// Specializations for the line y = x / alpha (beta = 1), where the base
// series can be written through the Fuss-Catalan series c_alpha(x) and
// horizontal crosses of the line happen only at lattice points.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "latbounce/bounce_gf.hpp"
#include "latbounce/closed_forms.hpp"
#include "latbounce/series.hpp"

namespace latbounce {

struct InvalidShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Young diagram with two rows, first_row >= second_row >= 0.
struct TwoRowShape {
  unsigned first_row;
  unsigned second_row;

  /// (n + b, n - b - 1); requires n > b.
  static TwoRowShape from_bounces(unsigned n, unsigned b);

  unsigned cells() const noexcept { return first_row + second_row; }
};

/// f_ee, f_en, f_nn for slope (alpha, 1) as rational functions of c_alpha.
Series f_ab_via_fuss_catalan(unsigned alpha, Restriction r, std::size_t order);

/// Bounce-free series for beta = 1, using the denominator 1 + g - g_ee.
BounceFree bounce_free_beta1(unsigned alpha, std::size_t order);

/// alpha = beta = 1: f_ee = f_nn = (x c^2 - x c)/(1 + x c), f_en = x c^2/(1 + x c).
BounceFree bounce_free_catalan(std::size_t order);

struct IdentityReport {
  bool holds = true;
  /// Lowest power of x where the two sides differ.
  std::optional<std::size_t> first_mismatch;
};

/// Checks f_ee = f_nn + (alpha - 1) f_en for slope (alpha, 1).
IdentityReport beta1_f_identity_check(unsigned alpha, std::size_t order);

/// Paths of class EE, EN or NE to (alpha k, k) with no horizontal cross.
Series nhc_series(unsigned alpha, Restriction r, std::size_t order);

/// E-start paths with no horizontal cross, (g_ee + g_en)/(1 + g_ee). Checked
/// against h_prefix_closed_form before returning.
Series h_prefix_series(unsigned alpha, std::size_t order);
Series h_prefix_closed_form(unsigned alpha, std::size_t order);

struct HPrefixForms {
  Series via_h;             // h_{E*} / (1 + nhc_en)
  Series via_g_prefix;      // g_{E*} / (1 + g_{E*})
  Series via_fuss_catalan;  // alpha (c_alpha - 1)
};

HPrefixForms H_prefix_forms(unsigned alpha, std::size_t order);

/// E-start paths with neither a horizontal cross nor a right bounce. Throws
/// std::logic_error if the three forms disagree.
Series H_prefix_series(unsigned alpha, std::size_t order);

/// c_alpha - 1: N-start paths with no horizontal cross, i.e. rational Dyck
/// paths of slope 1/alpha.
Series rational_dyck_count(unsigned alpha, std::size_t order);

/// G(x, s, t) for beta = 1 in the simplified form
/// (g + (2-s-t) g_nn) / (1 + (2-s-t) g_en + (1-s)(1-t) g_nn).
BounceTable bounce_table_beta1(unsigned alpha, std::size_t max_left, std::size_t max_right, std::size_t order);

/// G(x, s, t) for alpha = beta = 1 written through the Catalan series.
BounceTable bounce_table_catalan(std::size_t max_left, std::size_t max_right, std::size_t order);

/// Standard Young tableaux of a two-row shape, by the hook length formula.
Integer syt_count(const TwoRowShape& shape);
/// Standard Young tableaux of shape (n + b, n - b - 1).
Integer syt_two_row_count(unsigned n, unsigned b);

}  // namespace latbounce

#endif  // LATBOUNCE_BETA_ONE_HPP
