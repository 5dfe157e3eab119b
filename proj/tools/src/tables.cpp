#include "minorb/cli/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "minorb/invariants.hpp"
#include "minorb/repdim.hpp"

namespace minorb::cli {

namespace {

using Symbolic = std::vector<std::string>;

/// Closed-form rows, keyed by table and family.
const std::map<std::pair<int, Family>, Symbolic>& symbolic_rows() {
  static const std::map<std::pair<int, Family>, Symbolic> rows = {
      {{2, Family::A}, {"A_n (n>3)", "n(n+2)", "n+1", "2n", "2n", "A_{n-1}xT1", "w1:smooth,wn:smooth"}},
      {{2, Family::B}, {"B_n (n>2)", "n(2n+1)", "2n", "2n", "2n", "D_n", "w1:singular"}},
      {{2, Family::C}, {"C_n (n>=3)", "n(2n+1)", "2n", "4n-4", "4n-4", "C_{n-1}xA1", "w1:smooth"}},
      {{2, Family::D}, {"D_n (n>=5)", "n(2n-1)", "2n-1", "2n-1", "2n-1", "B_{n-1}", "w1:singular"}},
      {{3, Family::A}, {"A_n (n>=1)", "n+1", "n", "P_w1,P_wn", "n+1,n+1", "w1:smooth,wn:smooth"}},
      {{3, Family::B}, {"B_n (n>=3)", "2n", "2n-1", "P_w1", "2n+1", "w1:singular"}},
      {{3, Family::C}, {"C_n (n>=3)", "2n", "2n-1", "P_w1", "2n", "w1:smooth"}},
      {{3, Family::D}, {"D_n (n>=5)", "2n-1", "2n-2", "P_w1", "2n", "w1:singular"}},
      {{4, Family::A}, {"A_n (n!=3)", "A_{n-1}xT1", "2n", "n+1"}},
      {{4, Family::B}, {"B_n", "D_n", "2n", "2n"}},
      {{4, Family::C}, {"C_n (n>=3)", "C_{n-1}xA1", "4(n-1)", "2n"}},
      {{4, Family::D}, {"D_n (n>=4)", "B_{n-1}", "2n-1", "2n-1"}},
      {{5, Family::A}, {"A_n (n>=4)", "2n", "2n", "n+1"}},
      {{5, Family::B}, {"B_n", "2n", "2n", "2n"}},
      {{5, Family::C}, {"C_n (n>=3)", "4(n-1)", "4(n-1)", "2n"}},
      {{5, Family::D}, {"D_n (n>=4)", "2n-1", "2n-1", "2n-1"}},
  };
  return rows;
}

std::vector<std::string> columns_of(int number) {
  switch (number) {
    case 2: return {"G", "dim G", "m_G", "d_G", "r_G", "H", "closure of O_w"};
    case 3: return {"G", "m_G", "p_G", "maximal P", "dim V_w", "closure of O_w"};
    case 4: return {"G", "H", "r_G", "m_G"};
    case 5: return {"G", "r_G", "d_G", "m_G"};
  }
  throw std::invalid_argument("no table " + std::to_string(number) + " (expected 2, 3, 4 or 5)");
}

std::string closure_cell(const InvariantReport& report) {
  std::string out;
  for (int i : report.min.argmin) {
    if (!out.empty()) out += ',';
    out += "w" + std::to_string(i) + (report.smooth_closure[static_cast<std::size_t>(i - 1)] ? ":smooth" : ":singular");
  }
  return out;
}

std::vector<Cell> instance_row(int number, const RootSystem& rs, const InvariantReport& report) {
  const std::string label = report.type.label();
  const std::string h = factors_label(report.r.factors);
  switch (number) {
    case 2:
      return {label, std::int64_t{report.dim_g}, std::int64_t{report.min.m}, std::int64_t{report.d.d},
              std::int64_t{report.r.codim}, h, closure_cell(report)};
    case 3: {
      std::string parabolics;
      std::string dims;
      for (int i : report.min.argmin) {
        if (!parabolics.empty()) {
          parabolics += ',';
          dims += ',';
        }
        parabolics += "P_w" + std::to_string(i);
        dims += dim_irrep(rs, Weight::fundamental(rs.rank(), i)).str();
      }
      return {label, std::int64_t{report.min.m}, std::int64_t{report.min.p}, parabolics, dims, closure_cell(report)};
    }
    case 4:
      return {label, h, std::int64_t{report.r.codim}, std::int64_t{report.min.m}};
    default:
      return {label, std::int64_t{report.r.codim}, std::int64_t{report.d.d}, std::int64_t{report.min.m}};
  }
}

std::string cell_text(const Cell& c) {
  if (const auto* n = std::get_if<std::int64_t>(&c)) return std::to_string(*n);
  return std::get<std::string>(c);
}

}  // namespace

std::vector<SimpleType> table_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

TableReport build_table(int number, int max_rank) {
  TableReport out{number, max_rank, columns_of(number), {}};
  std::optional<Family> current;
  for (const SimpleType& t : table_types(max_rank)) {
    if (t.family() != current) {
      current = t.family();
      const auto it = symbolic_rows().find({number, t.family()});
      if (it != symbolic_rows().end()) out.rows.push_back({true, std::vector<Cell>(it->second.begin(), it->second.end())});
    }
    const RootSystem rs(t);
    out.rows.push_back({false, instance_row(number, rs, full_report(t))});
  }
  return out;
}

std::string render_text(const TableReport& table) {
  std::vector<std::size_t> widths;
  for (const auto& c : table.columns) widths.push_back(c.size());
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.cells.size(); ++i) widths[i] = std::max(widths[i], cell_text(row.cells[i]).size());

  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(widths[i] - cells[i].size(), ' ');
    }
    return s + "\n";
  };

  std::ostringstream os;
  os << "Table " << table.number << "\n";
  os << line(table.columns);
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  os << std::string(total + 2 * (widths.size() - 1), '-') << "\n";
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row.cells) cells.push_back(cell_text(c));
    os << line(cells);
  }
  return os.str();
}

nlohmann::json encode(const TableReport& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::object();
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& c = row.cells[i];
      if (const auto* n = std::get_if<std::int64_t>(&c)) {
        cells[table.columns[i]] = *n;
      } else {
        cells[table.columns[i]] = std::get<std::string>(c);
      }
    }
    rows.push_back({{"kind", row.family ? "family" : "instance"}, {"cells", cells}});
  }
  return {{"table", table.number}, {"max_rank", table.max_rank}, {"columns", table.columns}, {"rows", rows}};
}

}  // namespace minorb::cli
