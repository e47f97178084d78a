#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace widthlab {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct TableGrid {
  std::optional<int> t_max;
  std::optional<int> n_max;
  std::optional<int> k_max;
};

/// bw_closed, radius_closed, bk_spectral_lb, johnson_slice_bandwidth,
/// petersen_bounds.
const std::vector<std::string>& table_formulas();

/// Throws ParameterError for an unknown formula.
Table emit_table(const std::string& formula, const TableGrid& grid);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

}  // namespace widthlab
