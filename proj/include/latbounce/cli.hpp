#ifndef LATBOUNCE_CLI_HPP
#define LATBOUNCE_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "latbounce/bounce_gf.hpp"
#include "latbounce/series.hpp"

namespace latbounce::cli {

enum class Format { table, csv, json, oeis_bfile };

Format parse_format(const std::string& text);

/// Parameters a named series may need beyond the slope and order.
struct SeriesQuery {
  unsigned alpha = 1;
  unsigned beta = 1;
  std::size_t order = 10;
  unsigned left = 0;     // B, B_closed
  unsigned right = 0;    // B, B_closed
  unsigned bounces = 0;  // G_b
};

/// Every series reachable from the `coeffs` command, in listing order.
const std::vector<std::string>& series_names();

/// Evaluates a named series; throws std::invalid_argument for unknown names
/// or unsupported slopes.
Series named_series(const std::string& name, const SeriesQuery& q);

/// Writes coefficients first_k..order of `s`.
void write_series(std::ostream& out, Format fmt, const std::string& name, unsigned alpha, unsigned beta,
                  const Series& s, std::size_t first_k = 1);

/// Writes the (l, r) grid, coefficients k = 1..order, rows ordered by l then r.
void write_table(std::ostream& out, Format fmt, const BounceTable& table);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latbounce::cli

#endif  // LATBOUNCE_CLI_HPP
