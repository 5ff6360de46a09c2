#pragma once

#include <optional>

#include "unarb/rational.hpp"

namespace unarb {

/// One-period market: payoffs(i, s) = cash flow of asset i in state s,
/// prices(i) = price of asset i. Asset 0 is riskless (pays 1 everywhere,
/// price in (0, 1]). Build through validate_market.
struct Market {
  RationalMatrix payoffs;  // n x m
  RationalVector prices;   // length n

  Eigen::Index asset_count() const { return payoffs.rows(); }
  Eigen::Index state_count() const { return payoffs.cols(); }
};

struct Portfolio {
  RationalVector holdings;  // length n, negative = short
};

enum class ArbitrageKind { none, strong_branch_1, strong_branch_2 };

/// Outcome of arbitrage detection. `witness` is present iff kind != none.
/// `state_prices` (present only on some no-arbitrage outcomes) certifies the
/// discounted market: every component positive and prices = payoffs * psi
/// after discounting.
struct ArbitrageVerdict {
  ArbitrageKind kind = ArbitrageKind::none;
  std::optional<Portfolio> witness;
  std::optional<RationalVector> state_prices;
};

struct DetectionOptions {
  bool discount = true;  // run the branch problems on prices scaled to p1 = 1
};

/// Checks every market invariant; throws InvariantError naming the first
/// violation (riskless row, price bound, dimension mismatch).
Market validate_market(RationalMatrix payoffs, RationalVector prices);

/// Prices scaled by 1/p1 so the riskless asset costs exactly 1.
Market discount_prices(const Market& market);

/// B = payoffs - prices * 1^T: entry (i, s) is the profit of holding one
/// unit of asset i when state s occurs.
RationalMatrix profit_matrix(const Market& market);

/// B^T x: the profit vector of portfolio x across states.
RationalVector corresponding_scheme_payoff(const Market& market,
                                           const Portfolio& x);

// Definition-8 re-substitution checks, exact.
bool satisfies_branch_1(const Market& market, const Portfolio& x);
bool satisfies_branch_2(const Market& market, const Portfolio& x);
bool is_arbitrage_portfolio(const Market& market, const Portfolio& x);

/// Decides both arbitrage branches by exact feasibility (branch 1 with the
/// cone normalization sum(A^T x) = 1, branch 2 with p^T x = -1). Witnesses
/// re-verified by substitution before they are returned; on a no-arbitrage
/// verdict the state-price certificate is attached when one exists.
ArbitrageVerdict find_arbitrage(const Market& market,
                                const DetectionOptions& options = {});

/// Branch 2 only (p^T x < 0 and A^T x >= 0).
ArbitrageVerdict find_weak_arbitrage(const Market& market,
                                     const DetectionOptions& options = {});

/// x_bar = x - (p^T x) e_0: self-financing version of x. Requires p1 = 1.
/// Postconditions p^T x_bar = 0 and A^T x_bar = B^T x are re-checked.
Portfolio leverage(const Market& market, const Portfolio& x);

/// A portfolio whose profit vector is semipositive (B^T x > 0 in the vector
/// order), or nullopt if none exists. Requires a discounted market (p1 = 1).
std::optional<Portfolio> positive_decision_exists(const Market& market);

/// Strictly positive psi with prices = payoffs * psi, or nullopt. Tries a
/// fixed schedule of uniform lower bounds psi >= 1/M first, then settles the
/// boundary exactly by maximizing the minimum component.
std::optional<RationalVector> state_prices(const Market& market);

}  // namespace unarb
