#include "unarb/io.hpp"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "unarb/errors.hpp"

namespace unarb {

namespace {

using nlohmann::json;

struct Cell {
  std::string text;
  int line;
  int column;
};

// Plain CSV: no quoting, one record per line, blank lines skipped.
std::vector<std::vector<Cell>> read_csv_cells(std::istream& in) {
  std::vector<std::vector<Cell>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Cell> row;
    int column = 1;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::size_t end = comma == std::string::npos ? line.size() : comma;
      std::string cell = line.substr(start, end - start);
      const std::size_t first = cell.find_first_not_of(" \t");
      const std::size_t last = cell.find_last_not_of(" \t");
      cell = first == std::string::npos
                 ? std::string()
                 : cell.substr(first, last - first + 1);
      row.push_back(Cell{cell, line_no, column});
      if (comma == std::string::npos) break;
      start = comma + 1;
      ++column;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational cell_rational(const Cell& cell) {
  const auto value = parse_rational(cell.text);
  if (!value)
    throw ParseError("'" + cell.text + "' is not a rational (use p/q or an integer)",
                     cell.line, cell.column);
  return *value;
}

bool is_state_header(const std::vector<Cell>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i].text != "state_" + std::to_string(i)) return false;
  return true;
}

RationalMatrix rows_to_matrix(const std::vector<std::vector<Cell>>& rows,
                              std::size_t first_row, Eigen::Index width) {
  RationalMatrix out(static_cast<Eigen::Index>(rows.size() - first_row), width);
  for (std::size_t r = first_row; r < rows.size(); ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != width)
      throw ParseError("row has " + std::to_string(rows[r].size()) +
                           " columns, expected " + std::to_string(width),
                       rows[r].front().line, 1);
    for (Eigen::Index c = 0; c < width; ++c)
      out(static_cast<Eigen::Index>(r - first_row), c) =
          cell_rational(rows[r][static_cast<std::size_t>(c)]);
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

Rational json_rational(const json& node, const std::string& where) {
  if (node.is_string()) {
    const auto value = parse_rational(node.get<std::string>());
    if (!value)
      throw ParseError("'" + node.get<std::string>() + "' in " + where +
                       " is not a rational");
    return *value;
  }
  if (node.is_number_integer())
    return Rational(static_cast<long>(node.get<std::int64_t>()));
  if (node.is_number())
    throw ParseError("non-integer number in " + where +
                     "; write exact values as \"p/q\" strings");
  throw ParseError("expected a rational in " + where);
}

bool first_asset_is_riskless(const json& assets) {
  if (!assets.is_array() || assets.empty()) return false;
  const json& first = assets.at(0);
  if (first.is_string()) return first.get<std::string>() == "bond";
  if (first.is_object())
    return first.value("riskless", false);
  return false;
}

}  // namespace

MatrixScheme read_scheme_csv(std::istream& in) {
  const auto rows = read_csv_cells(in);
  if (rows.empty())
    throw ParseError("empty scheme file: need a header or at least one act row");

  const bool header = is_state_header(rows.front());
  const Eigen::Index width = static_cast<Eigen::Index>(rows.front().size());
  return make_scheme(rows_to_matrix(rows, header ? 1 : 0, width));
}

MatrixScheme read_scheme_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_scheme_csv(in);
}

std::string write_scheme_csv(const MatrixScheme& scheme) {
  std::ostringstream out;
  for (Eigen::Index s = 0; s < scheme.state_count(); ++s)
    out << (s ? "," : "") << "state_" << s;
  out << '\n';
  for (Eigen::Index i = 0; i < scheme.act_count(); ++i) {
    for (Eigen::Index s = 0; s < scheme.state_count(); ++s)
      out << (s ? "," : "") << to_string(scheme.acts(i, s));
    out << '\n';
  }
  return out.str();
}

Market read_market_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("market document must be an object");
  for (const char* key : {"assets", "states", "payoffs", "prices"})
    if (!doc.contains(key))
      throw ParseError(std::string("missing field '") + key + "'");

  const json& assets = doc["assets"];
  const json& states = doc["states"];
  const json& payoffs = doc["payoffs"];
  const json& prices = doc["prices"];
  if (!assets.is_array() || !states.is_array() || !payoffs.is_array() ||
      !prices.is_array())
    throw ParseError("assets, states, payoffs and prices must be arrays");

  if (!first_asset_is_riskless(assets))
    throw InvariantError(
        "first asset must be riskless: name it \"bond\" or set "
        "{\"riskless\": true}");

  const Eigen::Index n = static_cast<Eigen::Index>(assets.size());
  const Eigen::Index m = static_cast<Eigen::Index>(states.size());
  if (static_cast<Eigen::Index>(payoffs.size()) != n)
    throw InvariantError("payoffs has " + std::to_string(payoffs.size()) +
                         " rows for " + std::to_string(n) + " assets");

  RationalMatrix a(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = payoffs.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m)
      throw InvariantError("payoffs row " + std::to_string(i) +
                           " does not have one entry per state");
    for (Eigen::Index s = 0; s < m; ++s)
      a(i, s) = json_rational(row.at(static_cast<std::size_t>(s)),
                              "payoffs[" + std::to_string(i) + "]");
  }

  if (static_cast<Eigen::Index>(prices.size()) != n)
    throw InvariantError("prices has " + std::to_string(prices.size()) +
                         " entries for " + std::to_string(n) + " assets");
  RationalVector p(n);
  for (Eigen::Index i = 0; i < n; ++i)
    p(i) = json_rational(prices.at(static_cast<std::size_t>(i)), "prices");

  return validate_market(std::move(a), std::move(p));
}

Market read_market_json_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_market_json(in);
}

std::vector<Portfolio> read_portfolios_csv(std::istream& in,
                                           Eigen::Index asset_count) {
  const auto rows = read_csv_cells(in);
  std::vector<Portfolio> out;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != asset_count)
      throw ParseError("portfolio row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(asset_count),
                       row.front().line, 1);
    RationalVector holdings(asset_count);
    for (Eigen::Index c = 0; c < asset_count; ++c)
      holdings(c) = cell_rational(row[static_cast<std::size_t>(c)]);
    out.push_back(Portfolio{std::move(holdings)});
  }
  return out;
}

std::vector<Portfolio> read_portfolios_csv_file(const std::string& path,
                                                Eigen::Index asset_count) {
  auto in = open_or_throw(path);
  return read_portfolios_csv(in, asset_count);
}

}  // namespace unarb
