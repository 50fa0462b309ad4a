#include "latbounce/bounce_gf.hpp"

#include <stdexcept>
#include <utility>

namespace latbounce {

namespace {

// (1 + g_en)^2 - g_ee g_nn
Series bounce_free_denominator(const BaseSeries& g) {
  const Series one_en = 1 + g.en;
  return one_en * one_en - g.ee * g.nn;
}

}  // namespace

BounceFree bounce_free(const Slope& slope, std::size_t order) {
  const BaseSeries g = base_series(slope, order);
  const Series inv = reciprocal(bounce_free_denominator(g));
  return {g.ee * inv, 1 - (1 + g.en) * inv, g.nn * inv};
}

Series nrb_series(const Slope& slope, Restriction r, std::size_t order) {
  if (r == Restriction::all || r == Restriction::ne)
    throw std::invalid_argument("nrb_series: restriction must be EE, EN or NN");
  const Series g_en = g_ab_series(slope, Step::E, Step::N, order);
  return div(g_ab_series(slope, r, order), 1 + g_en);
}

Series bounce_free_ab(const Slope& slope, Restriction r, std::size_t order) {
  BounceFree f = bounce_free(slope, order);
  switch (r) {
    case Restriction::ee: return std::move(f.ee);
    case Restriction::en:
    case Restriction::ne: return std::move(f.en);
    case Restriction::nn: return std::move(f.nn);
    case Restriction::all: break;
  }
  throw std::invalid_argument("bounce_free_ab: restriction must be EE, EN, NE or NN");
}

Series bounce_free_total(const Slope& slope, std::size_t order) {
  const BaseSeries g = base_series(slope, order);
  return div(g.g + g.discriminant() * Integer(2), bounce_free_denominator(g));
}

Series one_sided_bounce_series(const Slope& slope, Side side, unsigned count, std::size_t order) {
  if (count == 0) throw std::invalid_argument("one_sided_bounce_series: count must be at least 1");
  const BounceFree f = bounce_free(slope, order);
  const Series inner = pow(f.en, count - 1);
  if (side == Side::left) return f.e_side() * inner * f.n_side();  // f_{*E} f_ne^{m-1} f_{N*}
  return f.n_side() * inner * f.e_side();                          // f_{*N} f_en^{m-1} f_{E*}
}

Series no_left_bounce_total(const Slope& slope, std::size_t order) {
  const BaseSeries g = base_series(slope, order);
  return div(g.g + g.discriminant(), 1 + g.en);
}

Series b_lr_closed_form(const BounceFree& f, unsigned left, unsigned right) {
  if (left == 0 || right == 0) throw std::invalid_argument("b_lr_closed_form: needs l >= 1 and r >= 1");
  const std::size_t order = f.ee.order();
  const long l = left;
  const long r = right;
  const Series e_side = f.e_side();
  const Series n_side = f.n_side();
  const Series ee_nn = f.ee * f.nn;
  Series total(order);

  auto add_case = [&](const Integer& multiplicity, const Series& prefix, long en_power, const Series& rest) {
    if (sgn(multiplicity) == 0) return;
    if (en_power < 0) throw std::logic_error("b_lr_closed_form: negative exponent with nonzero multiplicity");
    total += prefix * rest * pow(f.en, static_cast<unsigned>(en_power)) * multiplicity;
  };

  // First and last bounce both left.
  for (long i = 1; i <= l - 1; ++i)
    add_case(binomial(l - 1, i) * binomial(r - 1, i - 1), e_side * n_side, l + r - 2 * i - 1,
             pow(ee_nn, static_cast<unsigned>(i)));
  // First left, last right.
  for (long i = 1; i <= l; ++i)
    add_case(binomial(l - 1, i - 1) * binomial(r - 1, i - 1), e_side * e_side, l + r - 2 * i,
             pow(f.ee, static_cast<unsigned>(i - 1)) * pow(f.nn, static_cast<unsigned>(i)));
  // First right, last left.
  for (long i = 1; i <= l; ++i)
    add_case(binomial(l - 1, i - 1) * binomial(r - 1, i - 1), n_side * n_side, l + r - 2 * i,
             pow(f.ee, static_cast<unsigned>(i)) * pow(f.nn, static_cast<unsigned>(i - 1)));
  // First and last bounce both right.
  for (long i = 2; i <= l + 1; ++i)
    add_case(binomial(l - 1, i - 2) * binomial(r - 1, i - 1), n_side * e_side, l + r - 2 * i + 1,
             pow(ee_nn, static_cast<unsigned>(i - 1)));
  return total;
}

Series b_lr_closed_form(const Slope& slope, unsigned left, unsigned right, std::size_t order) {
  return b_lr_closed_form(bounce_free(slope, order), left, right);
}

MarkerSeries::MarkerSeries(std::size_t max_s, std::size_t max_t, std::size_t order)
    : max_s_(max_s), max_t_(max_t), order_(order), cells_((max_s + 1) * (max_t + 1), Series(order)) {}

MarkerSeries& MarkerSeries::add_term(std::size_t i, std::size_t j, const Series& c) {
  if (i <= max_s_ && j <= max_t_) at(i, j) += c;
  return *this;
}

MarkerSeries operator*(const MarkerSeries& a, const MarkerSeries& b) {
  if (a.max_s_ != b.max_s_ || a.max_t_ != b.max_t_)
    throw std::invalid_argument("MarkerSeries: marker bounds differ");
  MarkerSeries out(a.max_s_, a.max_t_, std::min(a.order_, b.order_));
  for (std::size_t i1 = 0; i1 <= a.max_s_; ++i1)
    for (std::size_t j1 = 0; j1 <= a.max_t_; ++j1) {
      const Series& x = a.at(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i1 + i2 <= a.max_s_; ++i2)
        for (std::size_t j2 = 0; j1 + j2 <= a.max_t_; ++j2) {
          const Series& y = b.at(i2, j2);
          if (y.is_zero()) continue;
          out.at(i1 + i2, j1 + j2) += x * y;
        }
    }
  return out;
}

MarkerSeries operator+(MarkerSeries a, const MarkerSeries& b) {
  if (a.max_s_ != b.max_s_ || a.max_t_ != b.max_t_)
    throw std::invalid_argument("MarkerSeries: marker bounds differ");
  for (std::size_t n = 0; n < a.cells_.size(); ++n) a.cells_[n] += b.cells_[n];
  a.order_ = std::min(a.order_, b.order_);
  return a;
}

MarkerSeries operator-(MarkerSeries a, const MarkerSeries& b) {
  if (a.max_s_ != b.max_s_ || a.max_t_ != b.max_t_)
    throw std::invalid_argument("MarkerSeries: marker bounds differ");
  for (std::size_t n = 0; n < a.cells_.size(); ++n) a.cells_[n] -= b.cells_[n];
  a.order_ = std::min(a.order_, b.order_);
  return a;
}

MarkerSeries MarkerSeries::inverse() const {
  const Series inv00 = reciprocal(at(0, 0));
  MarkerSeries out(max_s_, max_t_, order_);
  // out_{l,r} = inv00 * ([l = r = 0] - sum_{(i,j) != (0,0)} a_{i,j} out_{l-i,r-j})
  for (std::size_t l = 0; l <= max_s_; ++l)
    for (std::size_t r = 0; r <= max_t_; ++r) {
      Series acc = (l == 0 && r == 0) ? Series::constant(1, order_) : Series(order_);
      for (std::size_t i = 0; i <= l; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
          if (i == 0 && j == 0) continue;
          const Series& c = at(i, j);
          if (c.is_zero()) continue;
          acc -= c * out.at(l - i, r - j);
        }
      out.at(l, r) = acc * inv00;
    }
  return out;
}

Series MarkerSeries::sum() const {
  Series s(order_);
  for (const auto& c : cells_) s += c;
  return s;
}

BounceTable::BounceTable(Slope slope, Restriction restriction, MarkerSeries grid)
    : slope_(slope), restriction_(restriction), grid_(std::move(grid)) {}

BounceRational bounce_rational(const Slope& slope, Restriction r, std::size_t max_left, std::size_t max_right,
                               std::size_t order) {
  const BaseSeries g = base_series(slope, order);
  const Series delta = g.discriminant();
  const Series en_delta = g.en + delta;

  // 1 + (2 - s - t) g_en + (1 - s)(1 - t) delta
  MarkerSeries den(max_left, max_right, order);
  den.add_term(0, 0, 1 + en_delta + g.en);
  den.add_term(1, 0, -en_delta);
  den.add_term(0, 1, -en_delta);
  den.add_term(1, 1, delta);

  MarkerSeries num(max_left, max_right, order);
  switch (r) {
    case Restriction::all:
      num.add_term(0, 0, g.g + delta * Integer(2));
      num.add_term(1, 0, -delta);
      num.add_term(0, 1, -delta);
      break;
    case Restriction::ee: num.add_term(0, 0, g.ee); break;
    case Restriction::nn: num.add_term(0, 0, g.nn); break;
    case Restriction::en:
      num.add_term(0, 0, en_delta);
      num.add_term(1, 0, -delta);
      break;
    case Restriction::ne:
      num.add_term(0, 0, en_delta);
      num.add_term(0, 1, -delta);
      break;
  }
  return {std::move(num), std::move(den)};
}

BounceTable bounce_table(const Slope& slope, Restriction r, std::size_t max_left, std::size_t max_right,
                         std::size_t order) {
  const BounceRational q = bounce_rational(slope, r, max_left, max_right, order);
  return BounceTable(slope, r, q.numerator * q.denominator.inverse());
}

BounceTable bounce_table_closed_form(const Slope& slope, std::size_t max_left, std::size_t max_right,
                                     std::size_t order, Execution exec) {
  const BounceFree f = bounce_free(slope, order);
  MarkerSeries grid(max_left, max_right, order);
  const long cells = static_cast<long>((max_left + 1) * (max_right + 1));

  auto fill = [&](long n) {
    const auto l = static_cast<unsigned>(n / static_cast<long>(max_right + 1));
    const auto r = static_cast<unsigned>(n % static_cast<long>(max_right + 1));
    Series& out = grid.at(l, r);
    if (l == 0 && r == 0)
      out = f.total();
    else if (l == 0 || r == 0)
      out = f.e_side() * pow(f.en, l + r - 1) * f.n_side();
    else
      out = b_lr_closed_form(f, l, r);
  };

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n < cells; ++n) fill(n);
  } else {
    for (long n = 0; n < cells; ++n) fill(n);
  }
  return BounceTable(slope, Restriction::all, std::move(grid));
}

Series g_b_series(unsigned bounces, std::size_t order) {
  const Series c = fuss_catalan(1, order);
  return pow(c - 1, bounces + 1) * Integer(2);
}

Series g_b_binomial_series(unsigned bounces, std::size_t order) {
  Series s(order);
  const long b = bounces;
  for (long n = b + 1; n <= static_cast<long>(order); ++n) {
    const long k = n - b;
    const Integer numer = binomial(2 * k + 2 * b, k - 1) * (2 * (b + 1));
    const Integer denom = k + b;
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
      throw NonIntegerCoefficient("g_b_binomial_series: inexact division at x^" + std::to_string(n));
    mpz_divexact(s[static_cast<std::size_t>(n)].get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  }
  return s;
}

}  // namespace latbounce
