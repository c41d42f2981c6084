#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dicke3::cli {

/// Empty cell, number, integer or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Header row, then one line per row. Doubles use 17 significant digits,
/// fields are separated by ',' and lines end in '\n'.
void write_csv(std::ostream& out, const Table& table);

/// {"columns": [...], "rows": [[...], ...]}; empty and non-finite cells are null.
nlohmann::json to_json(const Table& table);

}  // namespace dicke3::cli
