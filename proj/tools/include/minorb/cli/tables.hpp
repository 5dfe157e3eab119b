#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minorb/rootsys.hpp"

namespace minorb::cli {

using Cell = std::variant<std::int64_t, std::string>;

struct TableRow {
  bool family = false;  // closed-form row for a classical family
  std::vector<Cell> cells;
};

struct TableReport {
  int number = 0;
  int max_rank = 0;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

/// A1..AN, B2..BN, C3..CN, D4..DN, E6, E7, E8, F4, G2.
std::vector<SimpleType> table_types(int max_rank);

/// Throws std::invalid_argument for a table number outside 2..5.
TableReport build_table(int number, int max_rank);

std::string render_text(const TableReport& table);
nlohmann::json encode(const TableReport& table);

}  // namespace minorb::cli
