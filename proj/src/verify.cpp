#include "latbounce/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "latbounce/beta_one.hpp"
#include "latbounce/bounce_gf.hpp"
#include "latbounce/oracle.hpp"

namespace latbounce::verify {

std::string Mismatch::describe() const {
  std::string s = identity + ": slope (" + std::to_string(alpha) + "," + std::to_string(beta) +
                  "), k=" + std::to_string(k);
  if (left) s += ", l=" + std::to_string(*left);
  if (right) s += ", r=" + std::to_string(*right);
  return s + ": expected " + expected + ", actual " + actual;
}

std::vector<Slope> slopes_up_to(unsigned max_sum) {
  std::vector<Slope> out;
  for (unsigned sum = 2; sum <= max_sum; ++sum)
    for (unsigned a = 1; a < sum; ++a)
      if (std::gcd(a, sum - a) == 1) out.emplace_back(a, sum - a);
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  bool ok() const { return report_.passed(); }

  /// Compares coefficients 0..min order; false on the first difference.
  bool series(const std::string& id, const Slope& slope, const Series& expected, const Series& actual,
              std::optional<std::size_t> l = {}, std::optional<std::size_t> r = {}) {
    if (!ok()) return false;
    const std::size_t n = std::min(expected.order(), actual.order());
    for (std::size_t k = 0; k <= n; ++k)
      if (!value(id, slope, k, expected[k], actual[k], l, r)) return false;
    return true;
  }

  bool value(const std::string& id, const Slope& slope, std::size_t k, const Integer& expected,
             const Integer& actual, std::optional<std::size_t> l = {}, std::optional<std::size_t> r = {}) {
    if (!ok()) return false;
    ++report_.checks;
    if (expected == actual) return true;
    report_.failure = Mismatch{id, slope.alpha(), slope.beta(), k, l, r, expected.get_str(), actual.get_str()};
    return false;
  }

 private:
  SuiteReport& report_;
};

std::vector<Slope> slopes_or(const Options& o, unsigned max_sum) {
  if (o.slope) return {*o.slope};
  return slopes_up_to(max_sum);
}

std::vector<unsigned> alphas_or(const Options& o, unsigned max_alpha) {
  if (o.slope) {
    if (o.slope->beta() != 1) throw std::invalid_argument("this suite needs beta = 1");
    return {o.slope->alpha()};
  }
  std::vector<unsigned> out(max_alpha);
  std::iota(out.begin(), out.end(), 1U);
  return out;
}

void suite_eq1(const Options& o, Checker& c) {
  for (const Slope& s : slopes_or(o, 8)) {
    const Integer a = s.alpha(), b = s.beta();
    const Series lhs = g_prefix_series(s, Step::E, o.order) * b;
    const Series rhs = g_prefix_series(s, Step::N, o.order) * a;
    if (!c.series("beta g_{E*} = alpha g_{N*}", s, lhs, rhs)) return;
  }
}

void suite_g_split(const Options& o, Checker& c) {
  for (const Slope& s : slopes_or(o, 8)) {
    const BaseSeries g = base_series(s, o.order);
    if (!c.series("g = g_ee + 2 g_en + g_nn", s, g.g, g.ee + g.en * Integer(2) + g.nn)) return;
  }
}

void suite_fuss_catalan(const Options& o, Checker& c) {
  for (unsigned a : alphas_or(o, o.alpha_max)) {
    const Series cat = fuss_catalan(a, o.order);
    const Series x = Series::monomial(1, 1, o.order);
    if (!c.series("c = 1 + x c^(alpha+1)", Slope(a, 1), cat, 1 + x * pow(cat, a + 1))) return;
  }
}

void suite_bounce_free(const Options& o, Checker& c) {
  for (const Slope& s : slopes_or(o, 7)) {
    const std::size_t n = o.order;
    const BaseSeries g = base_series(s, n);
    const BounceFree f = bounce_free(s, n);
    const Series one_minus_fen_inv = reciprocal(1 - f.en);
    const Series one_en = 1 + g.en;
    c.series("nrb_en via bounce-free pieces", s, nrb_series(s, Restriction::en, n),
             f.en + f.ee * f.nn * one_minus_fen_inv);
    c.series("nrb_ee via bounce-free pieces", s, nrb_series(s, Restriction::ee, n), f.ee * one_minus_fen_inv);
    c.series("nrb_nn via bounce-free pieces", s, nrb_series(s, Restriction::nn, n), f.nn * one_minus_fen_inv);
    c.series("f total vs f_ee + f_nn + 2 f_en", s, bounce_free_total(s, n), f.total());
    c.series("1/(1 - f_en) in g-series", s, one_minus_fen_inv, div(one_en * one_en - g.ee * g.nn, one_en));
    Series one_sided_sum = f.total();
    for (unsigned m = 1; m <= n; ++m) one_sided_sum += one_sided_bounce_series(s, Side::left, m, n);
    c.series("no-left-bounce total vs sum of B_{l,0}", s, no_left_bounce_total(s, n), one_sided_sum);
    if (!c.ok()) return;
  }
}

void suite_oracle_vs_g(const Options& o, Checker& c) {
  const EnumerationBudget budget{std::max<std::size_t>(o.max_steps, 1), 50'000'000};
  constexpr Restriction kinds[] = {Restriction::all, Restriction::ee, Restriction::en, Restriction::ne,
                                   Restriction::nn};
  for (const Slope& s : slopes_or(o, 7)) {
    const std::size_t kmax = o.max_steps / s.steps_per_unit();
    if (kmax == 0) continue;
    std::vector<BounceTable> tables;
    for (Restriction r : kinds) tables.push_back(bounce_table(s, r, kmax, kmax, kmax));
    for (std::size_t k = 1; k <= kmax; ++k) {
      const ProfileHistogram profiles = enumerate_profiles(s, k, Execution::parallel, budget);
      for (std::size_t t = 0; t < std::size(kinds); ++t) {
        const CountGrid counts = count_table(profiles, kinds[t]);
        for (std::size_t l = 0; l <= kmax; ++l)
          for (std::size_t r = 0; r <= kmax; ++r) {
            const auto it = counts.find({static_cast<unsigned>(l), static_cast<unsigned>(r)});
            const Integer expected = it == counts.end() ? 0UL : it->second;
            if (!c.value("oracle vs G_" + to_string(kinds[t]), s, k, expected, tables[t].entry(l, r)[k], l, r))
              return;
          }
      }
    }
  }
}

void suite_specializations(const Options& o, Checker& c) {
  const std::size_t n = o.order;
  for (const Slope& s : slopes_or(o, 7)) {
    const BounceTable all = bounce_table(s, Restriction::all, n, n, n);
    c.series("G(1,1) = g", s, g_series(s, n), all.total());
    c.series("G(0,0) = f", s, bounce_free_total(s, n), all.entry(0, 0));
    Series row(n), col(n);
    for (std::size_t j = 0; j <= n; ++j) {
      row += all.entry(0, j);
      col += all.entry(j, 0);
    }
    const Series nlb = no_left_bounce_total(s, n);
    c.series("G(0,1) = no-left-bounce total", s, nlb, row);
    c.series("G(1,0) = no-right-bounce total", s, nlb, col);
    for (Restriction r : {Restriction::ee, Restriction::en, Restriction::ne, Restriction::nn}) {
      const BounceTable t = bounce_table(s, r, n, n, n);
      c.series("G_" + to_string(r) + "(1,1) = g_" + to_string(r), s, g_ab_series(s, r, n), t.total());
      c.series("G_" + to_string(r) + "(0,0) = f_" + to_string(r), s, bounce_free_ab(s, r, n), t.entry(0, 0));
    }
    if (!c.ok()) return;
  }
}

// G written through the bounce-free series:
// (f - (s+t)(f_en^2 - f_ee f_nn)) / ((1 - s f_en)(1 - t f_en) - st f_ee f_nn)
MarkerSeries g_from_bounce_free(const Slope& s, std::size_t max_l, std::size_t max_r, std::size_t n) {
  const BounceFree f = bounce_free(s, n);
  const Series d = f.en * f.en - f.ee * f.nn;
  MarkerSeries num(max_l, max_r, n), den(max_l, max_r, n);
  num.add_term(0, 0, f.total());
  num.add_term(1, 0, -d);
  num.add_term(0, 1, -d);
  den.add_term(0, 0, Series::constant(1, n));
  den.add_term(1, 0, -f.en);
  den.add_term(0, 1, -f.en);
  den.add_term(1, 1, d);
  return num * den.inverse();
}

void suite_dual(const Options& o, Checker& c) {
  const std::size_t n = o.order;
  const std::size_t m = o.marker_max;
  for (const Slope& s : slopes_or(o, 6)) {
    const BounceTable rational = bounce_table(s, Restriction::all, m, m, n);
    const BounceFree f = bounce_free(s, n);
    for (unsigned l = 1; l <= m; ++l)
      for (unsigned r = 1; r <= m; ++r)
        c.series("four-case sum vs expansion", s, rational.entry(l, r), b_lr_closed_form(f, l, r), l, r);
    for (unsigned j = 1; j <= m; ++j) {
      c.series("B_{l,0} product vs expansion", s, rational.entry(j, 0),
               one_sided_bounce_series(s, Side::left, j, n), j, 0);
      c.series("B_{0,r} product vs expansion", s, rational.entry(0, j),
               one_sided_bounce_series(s, Side::right, j, n), 0, j);
    }
    const BounceTable assembled = bounce_table_closed_form(s, m, m, n);
    const MarkerSeries f_form = g_from_bounce_free(s, m, m, n);
    for (std::size_t l = 0; l <= m; ++l)
      for (std::size_t r = 0; r <= m; ++r) {
        c.series("assembled table vs expansion", s, rational.entry(l, r), assembled.entry(l, r), l, r);
        c.series("bounce-free form of G vs g form", s, rational.entry(l, r), f_form.at(l, r), l, r);
      }
    if (!c.ok()) return;
  }
}

void suite_beta1(const Options& o, Checker& c) {
  const std::size_t n = o.order;
  for (unsigned a : alphas_or(o, o.alpha_max)) {
    const Slope s(a, 1);
    const Integer al = a, am1 = static_cast<long>(a) - 1;
    const BaseSeries g = base_series(s, n);
    const BounceFree f = bounce_free(s, n);
    c.series("g_ee = alpha g_nn + (alpha-1) g_en", s, g.ee, g.nn * al + g.en * am1);
    c.series("f_ee = f_nn + (alpha-1) f_en", s, f.ee, f.nn + f.en * am1);
    c.series("g_en^2 - g_ee g_nn = g_nn", s, g.nn, g.discriminant());
    const BounceFree simple = bounce_free_beta1(a, n);
    c.series("simplified f_ee", s, f.ee, simple.ee);
    c.series("simplified f_en", s, f.en, simple.en);
    c.series("simplified f_nn", s, f.nn, simple.nn);
    c.series("Fuss-Catalan f_ee", s, f.ee, f_ab_via_fuss_catalan(a, Restriction::ee, n));
    c.series("Fuss-Catalan f_en", s, f.en, f_ab_via_fuss_catalan(a, Restriction::en, n));
    c.series("Fuss-Catalan f_nn", s, f.nn, f_ab_via_fuss_catalan(a, Restriction::nn, n));
    const std::size_t m = std::min<std::size_t>(n, 6);
    const BounceTable general = bounce_table(s, Restriction::all, m, m, n);
    const BounceTable special = bounce_table_beta1(a, m, m, n);
    for (std::size_t l = 0; l <= m; ++l)
      for (std::size_t r = 0; r <= m; ++r)
        c.series("simplified G", s, general.entry(l, r), special.entry(l, r), l, r);
    if (a == 1) {
      const BounceFree cat = bounce_free_catalan(n);
      const Series cm1 = fuss_catalan(1, n) - 1;
      c.series("Catalan f_ee", s, f.ee, cat.ee);
      c.series("Catalan f_nn", s, f.nn, cat.nn);
      c.series("Catalan f_en", s, f.en, cat.en);
      c.series("f = 2(c - 1)", s, f.total(), cm1 * Integer(2));
      c.series("f_{*E} = c - 1", s, cm1, f.e_side());
      c.series("f_{N*} = c - 1", s, cm1, f.n_side());
      c.series("f_{*E} f_{N*} = (c - 1)^2", s, cm1 * cm1, f.e_side() * f.n_side());
      const BounceTable catalan = bounce_table_catalan(m, m, n);
      for (std::size_t l = 0; l <= m; ++l)
        for (std::size_t r = 0; r <= m; ++r)
          c.series("Catalan G", s, general.entry(l, r), catalan.entry(l, r), l, r);
    }
    if (!c.ok()) return;
  }
}

std::map<unsigned, std::uint64_t> by_total_bounces(const ProfileHistogram& h, bool east_start_only) {
  std::map<unsigned, std::uint64_t> out;
  for (const auto& [p, count] : h)
    if (!east_start_only || p.first == Step::E) out[p.bounces()] += count;
  return out;
}

void suite_exact_bounces(const Options& o, Checker& c) {
  const Slope unit(1, 1);
  const std::size_t n = std::max<std::size_t>(o.order, o.bounce_n_max);
  const EnumerationBudget budget{2 * o.bounce_n_max, 50'000'000};
  std::vector<std::map<unsigned, std::uint64_t>> oracle(o.bounce_n_max + 1);
  for (unsigned k = 1; k <= o.bounce_n_max; ++k)
    oracle[k] = by_total_bounces(enumerate_profiles(unit, k, Execution::parallel, budget), false);
  const BounceTable table = bounce_table(unit, Restriction::all, o.b_max, o.b_max, n);
  for (unsigned b = 0; b <= o.b_max; ++b) {
    const std::string tag = " (b=" + std::to_string(b) + ")";
    const Series power = g_b_series(b, n);
    c.series("2(c-1)^(b+1) vs binomial form" + tag, unit, power, g_b_binomial_series(b, n));
    Series diagonal(n);
    for (unsigned l = 0; l <= b; ++l) diagonal += table.entry(l, b - l);
    c.series("2(c-1)^(b+1) vs sum of B_{l,b-l}" + tag, unit, power, diagonal);
    for (unsigned k = 1; k <= o.bounce_n_max; ++k) {
      const auto it = oracle[k].find(b);
      c.value("2(c-1)^(b+1) vs oracle" + tag, unit, k, it == oracle[k].end() ? 0UL : it->second, power[k]);
    }
    if (!c.ok()) return;
  }
}

void suite_syt(const Options& o, Checker& c) {
  const Slope unit(1, 1);
  const EnumerationBudget budget{2 * o.n_max, 50'000'000};
  for (unsigned n = 1; n <= o.n_max; ++n) {
    const auto oracle = by_total_bounces(enumerate_profiles(unit, n, Execution::parallel, budget), true);
    for (unsigned b = 0; b < n; ++b) {
      const TwoRowShape shape = TwoRowShape::from_bounces(n, b);
      const Integer hook = syt_count(shape);
      const auto it = oracle.find(b);
      const std::string tag = " (b=" + std::to_string(b) + ")";
      c.value("hook length vs backtracking" + tag, unit, n, hook, Integer(enumerate_syt(shape, shape.cells())));
      c.value("hook length vs E-start paths with b bounces" + tag, unit, n, hook,
              Integer(it == oracle.end() ? 0UL : it->second));
      c.value("hook length vs half of G_b" + tag, unit, n, hook, Integer(g_b_series(b, n)[n] / 2));
      if (!c.ok()) return;
    }
  }
}

void suite_crosses(const Options& o, Checker& c) {
  const std::vector<unsigned> alphas = alphas_or(o, std::min(o.alpha_max, 3U));
  for (unsigned a : alphas) {
    const Slope s(a, 1);
    const std::size_t kmax = 20 / (a + 1);
    const Series nhc_ee = nhc_series(a, Restriction::ee, kmax);
    const Series nhc_en = nhc_series(a, Restriction::en, kmax);
    const Series nhc_ne = nhc_series(a, Restriction::ne, kmax);
    const Series h = h_prefix_series(a, kmax);
    const Series H = H_prefix_series(a, kmax);
    const Series dyck = rational_dyck_count(a, kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
      std::uint64_t ee = 0, en = 0, ne = 0, h_count = 0, H_count = 0, n_start = 0;
      for (const auto& [p, count] : enumerate_profiles(s, k, Execution::parallel, {24, 50'000'000})) {
        if (*p.horizontal_crosses != 0) continue;
        const Restriction r = p.restriction();
        if (r == Restriction::ee) ee += count;
        if (r == Restriction::en) en += count;
        if (r == Restriction::ne) ne += count;
        if (p.first == Step::E) h_count += count;
        if (p.first == Step::E && p.right == 0) H_count += count;
        if (p.first == Step::N) n_start += count;
      }
      c.value("nhc_ee vs oracle", s, k, ee, nhc_ee[k]);
      c.value("nhc_en vs oracle", s, k, en, nhc_en[k]);
      c.value("nhc_ne vs oracle", s, k, ne, nhc_ne[k]);
      c.value("h_{E*} vs oracle", s, k, h_count, h[k]);
      c.value("H_{E*} vs oracle", s, k, H_count, H[k]);
      c.value("c_alpha - 1 vs N-start paths without crosses", s, k, n_start, dyck[k]);
      if (!c.ok()) return;
    }
  }
  for (unsigned a : alphas_or(o, o.alpha_max)) {
    const HPrefixForms forms = H_prefix_forms(a, o.order);
    c.series("H_{E*}: h/(1+nhc_en) vs g_{E*}/(1+g_{E*})", Slope(a, 1), forms.via_h, forms.via_g_prefix);
    c.series("H_{E*}: h/(1+nhc_en) vs alpha(c-1)", Slope(a, 1), forms.via_h, forms.via_fuss_catalan);
    if (!c.ok()) return;
  }
}

Series random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Integer> v(order + 1);
  for (auto& x : v) x = coeff(rng);
  if (unit_constant) v[0] = (rng() & 1U) ? 1 : -1;
  return Series(std::move(v));
}

void suite_ring(const Options& o, Checker& c) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> order_dist(0, 12);
  const Slope tag(1, 1);  // mismatch reports need a slope; the ring suite has none
  for (std::size_t i = 0; i < o.random_cases; ++i) {
    const std::size_t n = order_dist(rng);
    const Series a = random_series(rng, n, false);
    const Series b = random_series(rng, n, false);
    const Series d = random_series(rng, n, false);
    const Series u = random_series(rng, n, true);
    c.series("(a+b)+d = a+(b+d)", tag, (a + b) + d, a + (b + d));
    c.series("a+b = b+a", tag, a + b, b + a);
    c.series("(ab)d = a(bd)", tag, (a * b) * d, a * (b * d));
    c.series("ab = ba", tag, a * b, b * a);
    c.series("a(b+d) = ab+ad", tag, a * (b + d), a * b + a * d);
    c.series("u * 1/u = 1", tag, Series::constant(1, n), u * reciprocal(u));
    c.series("(a/u) u = a", tag, a, div(a, u) * u);
    if (n > 0) {
      const std::size_t m = n / 2;
      c.series("truncate(ab) = truncate(a) truncate(b)", tag, (a * b).truncated(m),
               a.truncated(m) * b.truncated(m));
      c.series("truncate(1/u) = 1/truncate(u)", tag, reciprocal(u).truncated(m), reciprocal(u.truncated(m)));
    }
    if (!c.ok()) return;
  }
}

using SuiteFn = void (*)(const Options&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"eq1", suite_eq1},
      {"g-split", suite_g_split},
      {"fuss-catalan", suite_fuss_catalan},
      {"bounce-free", suite_bounce_free},
      {"oracle-vs-G", suite_oracle_vs_g},
      {"specializations", suite_specializations},
      {"dual", suite_dual},
      {"beta1", suite_beta1},
      {"exact-bounces", suite_exact_bounces},
      {"syt", suite_syt},
      {"crosses", suite_crosses},
      {"ring", suite_ring},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool has_suite(const std::string& name) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const auto& e) { return e.first == name; });
}

SuiteReport run_suite(const std::string& name, const Options& opts) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) {
      SuiteReport report{name, 0, {}};
      Checker checker(report);
      fn(opts, checker);
      return report;
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace latbounce::verify
