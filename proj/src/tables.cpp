#include "widthlab/tables.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "widthlab/bounds.hpp"
#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/widthcalc.hpp"

namespace widthlab {

namespace {

constexpr int kDirectTableCap = 10;

std::string decimal(const Rational& r, int digits = 12) {
  const BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt scaled = floor_rational(r * scale);
  std::string s = to_string(BigInt(scaled / scale)) + ".";
  std::string frac = to_string(BigInt(scaled % scale));
  return s + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
}

Table bw_table(const TableGrid& g) {
  Table t{{"t", "n", "closed", "recursive", "direct", "agree"}, {}};
  const int t_max = g.t_max.value_or(3), n_max = g.n_max.value_or(10);
  for (int tt = 1; tt <= t_max; ++tt)
    for (int n = tt + 1; n <= n_max; ++n) {
      const BigInt closed = bw_closed(tt, n), rec = bw_recursion(tt, n);
      std::string direct;
      bool agree = closed == rec;
      if (n <= kDirectTableCap) {
        const auto d = matrix_bandwidth(assemble_full(tt, n));
        direct = std::to_string(d);
        agree = agree && closed == d;
      }
      t.rows.push_back({std::to_string(tt), std::to_string(n), to_string(closed), to_string(rec), direct,
                        agree ? "true" : "false"});
    }
  return t;
}

Table radius_table(const TableGrid& g) {
  Table t{{"t", "n", "k", "s", "closed", "recursive", "direct", "agree"}, {}};
  const int n_max = g.n_max.value_or(8);
  for (int n = 1; n <= n_max; ++n)
    for (int tt = 1; tt <= std::min(n + 1, g.t_max.value_or(n + 1)); ++tt)
      for (int s = 0; 2 * s <= tt; ++s)
        for (int k = 0; k + tt - 2 * s <= n; ++k) {
          const auto closed = radius_closed(tt, n, k, s);
          const auto rec = radius_recursive(tt, n, k, tt - 2 * s);
          std::string direct;
          bool agree = closed == rec;
          if (n <= kDirectTableCap) {
            const auto d = manhattan_radius(assemble_block(tt, n, k, k + tt - 2 * s));
            direct = d.to_string();
            agree = agree && closed == d;
          }
          t.rows.push_back({std::to_string(tt), std::to_string(n), std::to_string(k), std::to_string(s),
                            closed.to_string(), rec.to_string(), direct, agree ? "true" : "false"});
        }
  return t;
}

Table bk_table(const TableGrid& g) {
  Table t{{"k", "n", "vertices", "bk_spectral_lb"}, {}};
  for (int k = 1; k <= g.k_max.value_or(20); ++k)
    t.rows.push_back({std::to_string(k), std::to_string(2 * k + 1), to_string(BigInt(2 * binom_ext(2 * k + 1, k))),
                      to_string(bk_spectral_lb(k))});
  return t;
}

Table johnson_table(const TableGrid& g) {
  Table t{{"k", "n", "slice_bandwidth", "binomial", "ratio"}, {}};
  for (int k = 1; k <= g.k_max.value_or(12); ++k) {
    const int n = 2 * k + 1;
    const BigInt b = johnson_slice_bandwidth(n, k), c = binom_ext(n, k);
    t.rows.push_back({std::to_string(k), std::to_string(n), to_string(b), to_string(c), decimal(Rational(b, c))});
  }
  return t;
}

Table petersen_table(const TableGrid& g) {
  Table t{{"n", "k", "t", "lower_2k+1", "order_bound", "construction_width"}, {}};
  const int k_max = g.k_max.value_or(3), n_max = g.n_max.value_or(20);
  for (int k = 1; k <= k_max; ++k)
    for (int n = 2 * k + 2; n <= n_max; ++n) {
      const int tt = petersen_bramble_t(n, k);
      const auto order = (n + tt) / (tt + 1);
      const auto g_nk = gen_petersen(n, k);
      const auto rep = validate_decomposition(g_nk, petersen_pd(n, k, PetersenMode::repaired));
      t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(tt), std::to_string(2 * k + 1),
                        std::to_string(order), rep.ok ? std::to_string(*rep.width) : "invalid"});
    }
  return t;
}

}  // namespace

const std::vector<std::string>& table_formulas() {
  static const std::vector<std::string> names{"bw_closed", "radius_closed", "bk_spectral_lb",
                                              "johnson_slice_bandwidth", "petersen_bounds"};
  return names;
}

Table emit_table(const std::string& formula, const TableGrid& grid) {
  if (formula == "bw_closed") return bw_table(grid);
  if (formula == "radius_closed") return radius_table(grid);
  if (formula == "bk_spectral_lb") return bk_table(grid);
  if (formula == "johnson_slice_bandwidth") return johnson_table(grid);
  if (formula == "petersen_bounds") return petersen_table(grid);
  throw ParameterError("unknown table formula '" + formula + "'");
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  out << nlohmann::json{{"columns", table.columns}, {"rows", rows}}.dump(2) << "\n";
}

}  // namespace widthlab
