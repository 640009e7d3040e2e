#include "basn/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace basn {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::optional<double> parse_cell(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

std::string file_stem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

}  // namespace

Dataset make_dataset(std::string name, std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw DataError("dataset '" + name + "': value " + std::to_string(i) + " is not finite");
  return {std::move(name), std::move(values)};
}

Dataset ingest_csv(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  auto fail = [&](std::size_t line_no, const std::string& what) -> void {
    throw DataError(path + ":" + std::to_string(line_no) + ": " + what);
  };

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  bool saw_header = false;
  std::size_t ncols = 0;
  bool first_row = true;
  std::size_t col_index = 0;
  bool col_resolved = false;
  std::vector<double> values;
  std::string col_label;

  auto resolve_column = [&](std::size_t cols) {
    ncols = cols;
    if (column.empty()) {
      if (cols != 1)
        throw DataError("'" + path + "' has " + std::to_string(cols) +
                        " columns; select one with --column");
      col_index = 0;
    } else if (auto idx = parse_cell(column); idx && *idx == static_cast<std::size_t>(*idx)) {
      col_index = static_cast<std::size_t>(*idx);
      if (col_index >= cols)
        throw DataError("'" + path + "': column index " + column + " out of range (" +
                        std::to_string(cols) + " columns)");
    } else {
      if (!saw_header)
        throw DataError("'" + path + "': column '" + column + "' requested but no header row");
      bool found = false;
      for (std::size_t i = 0; i < header.size(); ++i)
        if (trim(header[i]) == column) {
          col_index = i;
          found = true;
          break;
        }
      if (!found) throw DataError("'" + path + "': no column named '" + column + "'");
    }
    col_label = saw_header && col_index < header.size() ? trim(header[col_index]) : "";
    col_resolved = true;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split_row(line);

    if (first_row) {
      first_row = false;
      bool all_numeric = true;
      for (const auto& c : cells)
        if (!parse_cell(c)) all_numeric = false;
      if (!all_numeric) {
        saw_header = true;
        header = cells;
        resolve_column(cells.size());
        continue;
      }
      resolve_column(cells.size());
    }

    if (!col_resolved) resolve_column(cells.size());
    if (cells.size() != ncols)
      fail(line_no, "expected " + std::to_string(ncols) + " cells, found " +
                        std::to_string(cells.size()));
    const auto v = parse_cell(cells[col_index]);
    if (!v) fail(line_no, "cell '" + trim(cells[col_index]) + "' is not numeric");
    if (!std::isfinite(*v)) fail(line_no, "non-finite value");
    values.push_back(*v);
  }

  if (values.empty()) throw DataError("'" + path + "': no data rows");
  std::string name = file_stem(path);
  if (!col_label.empty() && ncols > 1) name += ":" + col_label;
  return {std::move(name), std::move(values)};
}

}  // namespace basn
