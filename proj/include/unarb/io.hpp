#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unarb/market.hpp"
#include "unarb/scheme.hpp"

namespace unarb {

/// Scheme CSV: one row per act, one column per state, entries "p/q" or
/// integer literals, optional header row "state_0,...,state_{m-1}".
/// Throws ParseError with 1-based line/column on malformed input.
MatrixScheme read_scheme_csv(std::istream& in);
MatrixScheme read_scheme_csv_file(const std::string& path);

/// Header plus one CSV row per act.
std::string write_scheme_csv(const MatrixScheme& scheme);

/// Market JSON: object with `assets` (first entry riskless: either the name
/// "bond" or {"name":..., "riskless":true}), `states`, `payoffs` (n x m),
/// `prices` (length n). Rational entries are "p/q" strings; bare JSON
/// numbers are accepted for integers only.
/// ParseError for malformed documents, InvariantError for Definition-level
/// violations (riskless row, price bound, shape mismatches).
Market read_market_json(std::istream& in);
Market read_market_json_file(const std::string& path);

/// Portfolio CSV: one row per portfolio, rational entries, fixed width.
std::vector<Portfolio> read_portfolios_csv(std::istream& in,
                                           Eigen::Index asset_count);
std::vector<Portfolio> read_portfolios_csv_file(const std::string& path,
                                                Eigen::Index asset_count);

}  // namespace unarb
