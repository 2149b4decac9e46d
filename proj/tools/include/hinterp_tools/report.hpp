#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hinterp::tools {

/// One table cell; std::monostate renders as an empty field.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct Report {
  std::vector<Table> tables;
  std::vector<std::string> failures;  // asserted inequalities that did not hold

  bool ok() const { return failures.empty(); }
};

/// 12 significant digits; non-finite values as inf, -inf, nan.
std::string format_number(double x);

/// Comma-separated tables with a header row each, separated by a blank line.
void write_csv(std::ostream& out, const Report& report);

/// {"<table name>": [{"<column>": value, ...}, ...], ...}
void write_json(std::ostream& out, const Report& report);

}  // namespace hinterp::tools
