#include "latbounce/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "latbounce/beta_one.hpp"
#include "latbounce/closed_forms.hpp"
#include "latbounce/execution.hpp"
#include "latbounce/verify.hpp"

namespace latbounce::cli {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "oeis-bfile") return Format::oeis_bfile;
  throw std::invalid_argument("unknown format '" + text + "' (expected table, csv, json or oeis-bfile)");
}

namespace {

using SeriesFn = std::function<Series(const SeriesQuery&)>;

Slope slope_of(const SeriesQuery& q) { return Slope(q.alpha, q.beta); }

unsigned need_beta_one(const SeriesQuery& q, const std::string& name) {
  if (q.beta != 1) throw std::invalid_argument("series '" + name + "' is defined for beta = 1 only");
  slope_of(q);
  return q.alpha;
}

void need_unit_slope(const SeriesQuery& q, const std::string& name) {
  if (q.alpha != 1 || q.beta != 1) throw std::invalid_argument("series '" + name + "' needs alpha = beta = 1");
}

Series bounce_entry(const SeriesQuery& q) {
  return bounce_table(slope_of(q), Restriction::all, q.left, q.right, q.order).entry(q.left, q.right);
}

Series bounce_entry_closed(const SeriesQuery& q) {
  const Slope s = slope_of(q);
  if (q.left == 0 && q.right == 0) return bounce_free_total(s, q.order);
  if (q.right == 0) return one_sided_bounce_series(s, Side::left, q.left, q.order);
  if (q.left == 0) return one_sided_bounce_series(s, Side::right, q.right, q.order);
  return b_lr_closed_form(s, q.left, q.right, q.order);
}

const std::vector<std::pair<std::string, SeriesFn>>& registry() {
  using R = Restriction;
  static const std::vector<std::pair<std::string, SeriesFn>> table = {
      {"g", [](const SeriesQuery& q) { return g_series(slope_of(q), q.order); }},
      {"g_ee", [](const SeriesQuery& q) { return g_ab_series(slope_of(q), R::ee, q.order); }},
      {"g_en", [](const SeriesQuery& q) { return g_ab_series(slope_of(q), R::en, q.order); }},
      {"g_ne", [](const SeriesQuery& q) { return g_ab_series(slope_of(q), R::ne, q.order); }},
      {"g_nn", [](const SeriesQuery& q) { return g_ab_series(slope_of(q), R::nn, q.order); }},
      {"g_E", [](const SeriesQuery& q) { return g_prefix_series(slope_of(q), Step::E, q.order); }},
      {"g_N", [](const SeriesQuery& q) { return g_prefix_series(slope_of(q), Step::N, q.order); }},
      {"f", [](const SeriesQuery& q) { return bounce_free_total(slope_of(q), q.order); }},
      {"f_ee", [](const SeriesQuery& q) { return bounce_free_ab(slope_of(q), R::ee, q.order); }},
      {"f_en", [](const SeriesQuery& q) { return bounce_free_ab(slope_of(q), R::en, q.order); }},
      {"f_ne", [](const SeriesQuery& q) { return bounce_free_ab(slope_of(q), R::ne, q.order); }},
      {"f_nn", [](const SeriesQuery& q) { return bounce_free_ab(slope_of(q), R::nn, q.order); }},
      {"f_E", [](const SeriesQuery& q) { return bounce_free(slope_of(q), q.order).e_side(); }},
      {"f_N", [](const SeriesQuery& q) { return bounce_free(slope_of(q), q.order).n_side(); }},
      {"nrb_ee", [](const SeriesQuery& q) { return nrb_series(slope_of(q), R::ee, q.order); }},
      {"nrb_en", [](const SeriesQuery& q) { return nrb_series(slope_of(q), R::en, q.order); }},
      {"nrb_nn", [](const SeriesQuery& q) { return nrb_series(slope_of(q), R::nn, q.order); }},
      {"nlb", [](const SeriesQuery& q) { return no_left_bounce_total(slope_of(q), q.order); }},
      {"B", bounce_entry},
      {"B_closed", bounce_entry_closed},
      {"f_ee_fc",
       [](const SeriesQuery& q) { return f_ab_via_fuss_catalan(need_beta_one(q, "f_ee_fc"), R::ee, q.order); }},
      {"f_en_fc",
       [](const SeriesQuery& q) { return f_ab_via_fuss_catalan(need_beta_one(q, "f_en_fc"), R::en, q.order); }},
      {"f_nn_fc",
       [](const SeriesQuery& q) { return f_ab_via_fuss_catalan(need_beta_one(q, "f_nn_fc"), R::nn, q.order); }},
      {"nhc_ee", [](const SeriesQuery& q) { return nhc_series(need_beta_one(q, "nhc_ee"), R::ee, q.order); }},
      {"nhc_en", [](const SeriesQuery& q) { return nhc_series(need_beta_one(q, "nhc_en"), R::en, q.order); }},
      {"nhc_ne", [](const SeriesQuery& q) { return nhc_series(need_beta_one(q, "nhc_ne"), R::ne, q.order); }},
      {"h", [](const SeriesQuery& q) { return h_prefix_series(need_beta_one(q, "h"), q.order); }},
      {"H", [](const SeriesQuery& q) { return H_prefix_series(need_beta_one(q, "H"), q.order); }},
      {"H_ne", [](const SeriesQuery& q) { return rational_dyck_count(need_beta_one(q, "H_ne"), q.order); }},
      {"c_alpha", [](const SeriesQuery& q) { return fuss_catalan(need_beta_one(q, "c_alpha"), q.order); }},
      {"G_b",
       [](const SeriesQuery& q) {
         need_unit_slope(q, "G_b");
         return g_b_series(q.bounces, q.order);
       }},
  };
  return table;
}

std::vector<std::string> coefficient_strings(const Series& s, std::size_t first_k) {
  std::vector<std::string> out;
  for (std::size_t k = first_k; k <= s.order(); ++k) out.push_back(s[k].get_str());
  return out;
}

nlohmann::json json_header(unsigned alpha, unsigned beta, std::size_t order) {
  return {{"slope", {alpha, beta}}, {"order", order}, {"series", nlohmann::json::object()},
          {"table", nlohmann::json::array()}};
}

}  // namespace

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

Series named_series(const std::string& name, const SeriesQuery& q) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(q);
  throw std::invalid_argument("unknown series '" + name + "'");
}

void write_series(std::ostream& out, Format fmt, const std::string& name, unsigned alpha, unsigned beta,
                  const Series& s, std::size_t first_k) {
  switch (fmt) {
    case Format::table: {
      const auto values = coefficient_strings(s, first_k);
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      out << '\n';
      break;
    }
    case Format::csv:
      out << "k,value\n";
      for (std::size_t k = first_k; k <= s.order(); ++k) out << k << ',' << s[k].get_str() << '\n';
      break;
    case Format::oeis_bfile:
      for (std::size_t k = first_k; k <= s.order(); ++k) out << k << ' ' << s[k].get_str() << '\n';
      break;
    case Format::json: {
      nlohmann::json doc = json_header(alpha, beta, s.order());
      doc["series"][name] = coefficient_strings(s, first_k);
      out << doc.dump() << '\n';
      break;
    }
  }
}

void write_table(std::ostream& out, Format fmt, const BounceTable& table) {
  const std::size_t n = table.order();
  switch (fmt) {
    case Format::table:
      for (std::size_t l = 0; l <= table.max_left(); ++l)
        for (std::size_t r = 0; r <= table.max_right(); ++r) {
          out << "B[" << l << ',' << r << "]:";
          for (std::size_t k = 1; k <= n; ++k) out << ' ' << table.entry(l, r)[k].get_str();
          out << '\n';
        }
      break;
    case Format::csv:
      out << "l,r,k,count\n";
      for (std::size_t l = 0; l <= table.max_left(); ++l)
        for (std::size_t r = 0; r <= table.max_right(); ++r)
          for (std::size_t k = 1; k <= n; ++k)
            out << l << ',' << r << ',' << k << ',' << table.entry(l, r)[k].get_str() << '\n';
      break;
    case Format::json: {
      nlohmann::json doc = json_header(table.slope().alpha(), table.slope().beta(), n);
      doc["restriction"] = to_string(table.restriction());
      for (std::size_t l = 0; l <= table.max_left(); ++l) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t r = 0; r <= table.max_right(); ++r) row.push_back(coefficient_strings(table.entry(l, r), 1));
        doc["table"].push_back(std::move(row));
      }
      out << doc.dump() << '\n';
      break;
    }
    case Format::oeis_bfile:
      throw std::invalid_argument("the oeis-bfile format holds a single sequence; use coeffs --series B");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions for rational lattice paths counted by bounces", "latbounce"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads for the enumeration kernels (0 = default)");

  SeriesQuery q;
  std::string series_name;
  std::string format = "table";
  bool with_constant = false;
  bool list = false;
  auto* coeffs = app.add_subcommand("coeffs", "Print coefficients k = 1..order of a named series");
  coeffs->add_option("--series", series_name, "Series name (see --list)");
  coeffs->add_option("--alpha", q.alpha, "Run of the line y = (beta/alpha) x")->check(CLI::PositiveNumber);
  coeffs->add_option("--beta", q.beta, "Rise of the line")->check(CLI::PositiveNumber);
  coeffs->add_option("--order", q.order, "Highest power of x");
  coeffs->add_option("--left", q.left, "Left bounces (series B, B_closed)");
  coeffs->add_option("--right", q.right, "Right bounces (series B, B_closed)");
  coeffs->add_option("--bounces", q.bounces, "Total bounces (series G_b)");
  coeffs->add_option("--format", format, "table, csv, json or oeis-bfile");
  coeffs->add_flag("--with-constant", with_constant, "Also print the x^0 term of c_alpha");
  coeffs->add_flag("--list", list, "List the series names and exit");

  unsigned t_alpha = 1, t_beta = 1;
  std::size_t t_order = 10, max_left = 3, max_right = 3;
  std::string restriction = "all", method = "rational", t_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "Print the (l, r) grid of bounce counts");
  table_cmd->add_option("--alpha", t_alpha)->check(CLI::PositiveNumber);
  table_cmd->add_option("--beta", t_beta)->check(CLI::PositiveNumber);
  table_cmd->add_option("--order", t_order);
  table_cmd->add_option("--max-left", max_left);
  table_cmd->add_option("--max-right", max_right);
  table_cmd->add_option("--restriction", restriction, "all, EE, EN, NE or NN");
  table_cmd->add_option("--method", method, "rational (expand G) or closed (assemble entries; all only)");
  table_cmd->add_option("--format", t_format, "table, csv or json");

  std::vector<std::string> suites;
  verify::Options vopts;
  std::optional<unsigned> v_alpha, v_beta;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites; exit code 0 iff all pass");
  verify_cmd->add_option("--suite", suites, "Suite name, repeatable, or 'all'");
  verify_cmd->add_option("--alpha", v_alpha, "Restrict to one slope");
  verify_cmd->add_option("--beta", v_beta, "Restrict to one slope");
  verify_cmd->add_option("--order", vopts.order);
  verify_cmd->add_option("--max-steps", vopts.max_steps, "Longest path the oracle enumerates");
  verify_cmd->add_option("--n-max", vopts.n_max, "SYT suite: 0 <= b < n <= n-max");
  verify_cmd->add_option("--bounce-n-max", vopts.bounce_n_max, "exact-bounces suite: oracle up to (n, n)");
  verify_cmd->add_option("--b-max", vopts.b_max);
  verify_cmd->add_option("--alpha-max", vopts.alpha_max, "beta = 1 suites: alpha = 1..alpha-max");
  verify_cmd->add_option("--marker-max", vopts.marker_max);
  verify_cmd->add_option("--random-cases", vopts.random_cases);
  verify_cmd->add_option("--seed", vopts.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  set_threads(threads);
  try {
    if (coeffs->parsed()) {
      if (list) {
        for (const auto& n : series_names()) out << n << '\n';
        return 0;
      }
      if (series_name.empty()) throw std::invalid_argument("coeffs: --series is required");
      const Series s = named_series(series_name, q);
      const bool constant = with_constant && series_name == "c_alpha";
      write_series(out, parse_format(format), series_name, q.alpha, q.beta, s, constant ? 0 : 1);
      return 0;
    }
    if (table_cmd->parsed()) {
      const Slope slope(t_alpha, t_beta);
      const Restriction r = parse_restriction(restriction);
      const Format fmt = parse_format(t_format);
      if (method == "rational") {
        write_table(out, fmt, bounce_table(slope, r, max_left, max_right, t_order));
      } else if (method == "closed") {
        if (r != Restriction::all) throw std::invalid_argument("table: --method closed supports --restriction all only");
        write_table(out, fmt, bounce_table_closed_form(slope, max_left, max_right, t_order));
      } else {
        throw std::invalid_argument("table: unknown method '" + method + "'");
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (v_alpha || v_beta) vopts.slope = Slope(v_alpha.value_or(1), v_beta.value_or(1));
      if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end())
        suites = verify::suite_names();
      for (const auto& name : suites)
        if (!verify::has_suite(name)) throw std::invalid_argument("verify: unknown suite '" + name + "'");
      std::size_t failed = 0;
      for (const auto& name : suites) {
        const verify::SuiteReport report = verify::run_suite(name, vopts);
        if (report.passed()) {
          out << "PASS " << name << " (" << report.checks << " coefficient checks)\n";
        } else {
          ++failed;
          out << "FAIL " << name << ": " << report.failure->describe() << '\n';
        }
      }
      out << (failed == 0 ? "all " + std::to_string(suites.size()) + " suites passed"
                          : std::to_string(failed) + " of " + std::to_string(suites.size()) + " suites failed")
          << '\n';
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace latbounce::cli
