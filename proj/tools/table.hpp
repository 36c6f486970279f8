#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigsum/double_wide.hpp"

namespace trigsum::cli {

using Cell = nlohmann::ordered_json;

/// JSON-valued cells, rendered as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Shortest round-trip decimal.
std::string format_real(double x);

/// Wide values become 32-digit strings; native ones plain doubles.
Cell real_cell(const DoubleWide& x, Precision precision);

void write_csv(const Table& t, std::ostream& os);
/// One object per row; a single-row table prints a bare object when single is set.
void write_json(const Table& t, std::ostream& os, bool single = false);

}  // namespace trigsum::cli
