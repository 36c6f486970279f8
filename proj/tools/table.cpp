#include "table.hpp"

#include <charconv>
#include <cmath>

namespace trigsum::cli {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Cell real_cell(const DoubleWide& x, Precision precision) {
  if (precision == Precision::Native || !std::isfinite(x.hi())) return x.to_double();
  return to_string(x, 32);
}

namespace {

std::string csv_field(const Cell& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_float()) return format_real(v.get<double>());
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

Cell row_object(const Table& t, const std::vector<Cell>& row) {
  Cell plain = Cell::object();
  for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i) plain[t.columns[i]] = row[i];
  return plain;
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os, bool single) {
  if (single && t.rows.size() == 1) {
    os << row_object(t, t.rows.front()).dump(2) << '\n';
    return;
  }
  Cell arr = Cell::array();
  for (const auto& row : t.rows) arr.push_back(row_object(t, row));
  os << arr.dump(2) << '\n';
}

}  // namespace trigsum::cli
