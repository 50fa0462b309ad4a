#include "latbounce/beta_one.hpp"

#include <string>
#include <utility>

namespace latbounce {

TwoRowShape TwoRowShape::from_bounces(unsigned n, unsigned b) {
  if (n <= b)
    throw InvalidShape("shape (n+b, n-b-1) needs n > b; got n = " + std::to_string(n) + ", b = " + std::to_string(b));
  return {n + b, n - b - 1};
}

Series f_ab_via_fuss_catalan(unsigned alpha, Restriction r, std::size_t order) {
  const Series c = fuss_catalan(alpha, order);
  const Series c1 = c - 1;
  const Integer a = alpha;
  // (1 - alpha) c^2 + (alpha + 1) c - 1
  const Series den = c * c * Integer(1 - static_cast<long>(alpha)) + c * Integer(alpha + 1) - 1;
  switch (r) {
    case Restriction::ee: return div((c * a - 1) * c1, den);
    case Restriction::en:
    case Restriction::ne: return div(c * c1, den);
    case Restriction::nn: return div(c1 * c1, den);
    case Restriction::all: break;
  }
  throw std::invalid_argument("f_ab_via_fuss_catalan: restriction must be EE, EN, NE or NN");
}

BounceFree bounce_free_beta1(unsigned alpha, std::size_t order) {
  const BaseSeries g = base_series(Slope(alpha, 1), order);
  const Series inv = reciprocal(1 + g.g - g.ee);
  return {g.ee * inv, (g.nn + g.en) * inv, g.nn * inv};
}

BounceFree bounce_free_catalan(std::size_t order) {
  const Series c = fuss_catalan(1, order);
  const Series x = Series::monomial(1, 1, order);
  const Series xc = x * c;
  const Series xcc = xc * c;
  const Series inv = reciprocal(1 + xc);
  Series ee = (xcc - xc) * inv;
  Series nn = ee;
  return {std::move(ee), xcc * inv, std::move(nn)};
}

IdentityReport beta1_f_identity_check(unsigned alpha, std::size_t order) {
  const BounceFree f = bounce_free(Slope(alpha, 1), order);
  const Series rhs = f.nn + f.en * Integer(static_cast<long>(alpha) - 1);
  IdentityReport report;
  for (std::size_t k = 0; k <= order; ++k)
    if (f.ee[k] != rhs[k]) {
      report.holds = false;
      report.first_mismatch = k;
      break;
    }
  return report;
}

Series nhc_series(unsigned alpha, Restriction r, std::size_t order) {
  const Slope slope(alpha, 1);
  const Series g_ee = g_ab_series(slope, Step::E, Step::E, order);
  switch (r) {
    case Restriction::ee: return div(g_ee, 1 + g_ee);
    case Restriction::en:
    case Restriction::ne: return div(g_ab_series(slope, Step::E, Step::N, order), 1 + g_ee);
    default: break;
  }
  throw std::invalid_argument("nhc_series: restriction must be EE, EN or NE");
}

Series h_prefix_closed_form(unsigned alpha, std::size_t order) {
  const long a = alpha;
  Series s(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const long kk = static_cast<long>(k);
    const Integer numer = binomial((a + 1) * kk + 1, kk - 1) * (a * (a + 2));
    const Integer denom = (a + 1) * kk + 1;
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
      throw NonIntegerCoefficient("h_prefix_closed_form: inexact division at k = " + std::to_string(k));
    mpz_divexact(s[k].get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  }
  return s;
}

Series h_prefix_series(unsigned alpha, std::size_t order) {
  const Slope slope(alpha, 1);
  const Series g_ee = g_ab_series(slope, Step::E, Step::E, order);
  Series h = div(g_prefix_series(slope, Step::E, order), 1 + g_ee);
  if (h != h_prefix_closed_form(alpha, order))
    throw std::logic_error("h_prefix_series: quotient and binomial form disagree");
  return h;
}

HPrefixForms H_prefix_forms(unsigned alpha, std::size_t order) {
  const Series g_prefix = g_prefix_series(Slope(alpha, 1), Step::E, order);
  return {div(h_prefix_series(alpha, order), 1 + nhc_series(alpha, Restriction::en, order)),
          div(g_prefix, 1 + g_prefix), (fuss_catalan(alpha, order) - 1) * Integer(alpha)};
}

Series H_prefix_series(unsigned alpha, std::size_t order) {
  HPrefixForms forms = H_prefix_forms(alpha, order);
  if (forms.via_h != forms.via_g_prefix || forms.via_h != forms.via_fuss_catalan)
    throw std::logic_error("H_prefix_series: the three forms disagree");
  return std::move(forms.via_fuss_catalan);
}

Series rational_dyck_count(unsigned alpha, std::size_t order) { return fuss_catalan(alpha, order) - 1; }

BounceTable bounce_table_beta1(unsigned alpha, std::size_t max_left, std::size_t max_right, std::size_t order) {
  const Slope slope(alpha, 1);
  const BaseSeries g = base_series(slope, order);
  const Series en_nn = g.en + g.nn;

  MarkerSeries den(max_left, max_right, order);
  den.add_term(0, 0, 1 + en_nn + g.en);
  den.add_term(1, 0, -en_nn);
  den.add_term(0, 1, -en_nn);
  den.add_term(1, 1, g.nn);

  MarkerSeries num(max_left, max_right, order);
  num.add_term(0, 0, g.g + g.nn * Integer(2));
  num.add_term(1, 0, -g.nn);
  num.add_term(0, 1, -g.nn);
  return BounceTable(slope, Restriction::all, num * den.inverse());
}

BounceTable bounce_table_catalan(std::size_t max_left, std::size_t max_right, std::size_t order) {
  const Series c = fuss_catalan(1, order);
  const Series x = Series::monomial(1, 1, order);
  const Series xc = x * c;
  const Series xc_x = xc - x;

  // 1 - 2xc + (2-s-t) x + (1-s)(1-t)(xc - x)
  MarkerSeries den(max_left, max_right, order);
  den.add_term(0, 0, 1 - xc * Integer(2) + x * Integer(2) + xc_x);
  den.add_term(1, 0, -(x + xc_x));
  den.add_term(0, 1, -(x + xc_x));
  den.add_term(1, 1, xc_x);

  // 2xc + (2-s-t)(xc - x)
  MarkerSeries num(max_left, max_right, order);
  num.add_term(0, 0, xc * Integer(2) + xc_x * Integer(2));
  num.add_term(1, 0, -xc_x);
  num.add_term(0, 1, -xc_x);
  return BounceTable(Slope(1, 1), Restriction::all, num * den.inverse());
}

Integer syt_count(const TwoRowShape& shape) {
  const unsigned top = shape.first_row;
  const unsigned bottom = shape.second_row;
  if (bottom > top) throw InvalidShape("two-row shape needs first_row >= second_row");
  Integer hooks = 1;
  for (unsigned j = 0; j < top; ++j) {
    const unsigned arm = top - j - 1;
    const unsigned leg = j < bottom ? 1 : 0;
    hooks *= arm + leg + 1;
  }
  for (unsigned j = 0; j < bottom; ++j) hooks *= bottom - j;
  Integer cells_factorial;
  mpz_fac_ui(cells_factorial.get_mpz_t(), shape.cells());
  return cells_factorial / hooks;
}

Integer syt_two_row_count(unsigned n, unsigned b) { return syt_count(TwoRowShape::from_bounces(n, b)); }

}  // namespace latbounce
