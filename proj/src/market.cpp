#include "unarb/market.hpp"

#include <utility>

#include "unarb/errors.hpp"
#include "unarb/simplex.hpp"

namespace unarb {

namespace {

void check_portfolio_size(const Market& market, const Portfolio& x) {
  if (x.holdings.size() != market.asset_count())
    throw InvariantError("portfolio has " + std::to_string(x.holdings.size()) +
                         " holdings for a market with " +
                         std::to_string(market.asset_count()) + " assets");
}

void require_discounted(const Market& market, const char* operation) {
  if (market.prices(0) != 1)
    throw InvariantError(std::string(operation) +
                         " requires a discounted market (p1 = 1); call "
                         "discount_prices first");
}

ArbitrageVerdict verified_witness(const Market& detection_market,
                                  ArbitrageKind kind, RationalVector x) {
  Portfolio witness{std::move(x)};
  const bool ok = kind == ArbitrageKind::strong_branch_1
                      ? satisfies_branch_1(detection_market, witness)
                      : satisfies_branch_2(detection_market, witness);
  if (!ok)
    throw InternalError(
        "feasibility kernel returned a portfolio that fails the arbitrage "
        "re-substitution check");
  return ArbitrageVerdict{kind, std::move(witness), std::nullopt};
}

}  // namespace

Market validate_market(RationalMatrix payoffs, RationalVector prices) {
  if (payoffs.rows() < 1 || payoffs.cols() < 1)
    throw InvariantError("market needs at least one asset and one state");
  if (prices.size() != payoffs.rows())
    throw InvariantError("dimension mismatch: " +
                         std::to_string(prices.size()) + " prices for " +
                         std::to_string(payoffs.rows()) + " assets");
  for (Eigen::Index s = 0; s < payoffs.cols(); ++s)
    if (payoffs(0, s) != 1)
      throw InvariantError("riskless row violation: payoffs(0," +
                           std::to_string(s) + ") != 1");
  if (!(prices(0) > 0 && prices(0) <= 1))
    throw InvariantError("riskless price " + to_string(prices(0)) +
                         " outside (0, 1]");
  return Market{std::move(payoffs), std::move(prices)};
}

Market discount_prices(const Market& market) {
  RationalVector scaled = market.prices / market.prices(0);
  return Market{market.payoffs, std::move(scaled)};
}

RationalMatrix profit_matrix(const Market& market) {
  return market.payoffs -
         market.prices *
             RationalVector::Ones(market.state_count()).transpose();
}

RationalVector corresponding_scheme_payoff(const Market& market,
                                           const Portfolio& x) {
  check_portfolio_size(market, x);
  return profit_matrix(market).transpose() * x.holdings;
}

bool satisfies_branch_1(const Market& market, const Portfolio& x) {
  check_portfolio_size(market, x);
  const RationalVector payoff = market.payoffs.transpose() * x.holdings;
  return market.prices.dot(x.holdings) <= 0 && is_semipositive(payoff);
}

bool satisfies_branch_2(const Market& market, const Portfolio& x) {
  check_portfolio_size(market, x);
  const RationalVector payoff = market.payoffs.transpose() * x.holdings;
  return market.prices.dot(x.holdings) < 0 && is_nonnegative(payoff);
}

bool is_arbitrage_portfolio(const Market& market, const Portfolio& x) {
  return satisfies_branch_1(market, x) || satisfies_branch_2(market, x);
}

ArbitrageVerdict find_arbitrage(const Market& market,
                                const DetectionOptions& options) {
  const Market d = options.discount ? discount_prices(market) : market;
  const Eigen::Index n = d.asset_count();
  const Eigen::Index m = d.state_count();

  // Branch 1: p.x <= 0, A^T x >= 0 per state, sum(A^T x) = 1. The arbitrage
  // set is a cone, so normalizing the payoff sum to 1 loses no solutions and
  // replaces the open condition A^T x > 0 with closed rows.
  LinearProgram branch1(n);
  branch1.add_constraint(d.prices, ConstraintSense::le, 0);
  for (Eigen::Index s = 0; s < m; ++s)
    branch1.add_constraint(d.payoffs.col(s), ConstraintSense::ge, 0);
  branch1.add_constraint(d.payoffs * RationalVector::Ones(m),
                         ConstraintSense::eq, 1);
  if (auto x = find_feasible_point(branch1))
    return verified_witness(d, ArbitrageKind::strong_branch_1, std::move(*x));

  // Branch 2: p.x = -1, A^T x >= 0.
  LinearProgram branch2(n);
  branch2.add_constraint(d.prices, ConstraintSense::eq, -1);
  for (Eigen::Index s = 0; s < m; ++s)
    branch2.add_constraint(d.payoffs.col(s), ConstraintSense::ge, 0);
  if (auto x = find_feasible_point(branch2))
    return verified_witness(d, ArbitrageKind::strong_branch_2, std::move(*x));

  return ArbitrageVerdict{ArbitrageKind::none, std::nullopt, state_prices(d)};
}

ArbitrageVerdict find_weak_arbitrage(const Market& market,
                                     const DetectionOptions& options) {
  const Market d = options.discount ? discount_prices(market) : market;
  LinearProgram branch2(d.asset_count());
  branch2.add_constraint(d.prices, ConstraintSense::eq, -1);
  for (Eigen::Index s = 0; s < d.state_count(); ++s)
    branch2.add_constraint(d.payoffs.col(s), ConstraintSense::ge, 0);
  if (auto x = find_feasible_point(branch2))
    return verified_witness(d, ArbitrageKind::strong_branch_2, std::move(*x));
  return ArbitrageVerdict{ArbitrageKind::none, std::nullopt, state_prices(d)};
}

Portfolio leverage(const Market& market, const Portfolio& x) {
  check_portfolio_size(market, x);
  require_discounted(market, "leverage");
  Portfolio leveraged = x;
  leveraged.holdings(0) -= market.prices.dot(x.holdings);

  // Postconditions of the construction; a failure here is a bug.
  if (market.prices.dot(leveraged.holdings) != 0)
    throw InternalError("leverage produced a portfolio with nonzero cost");
  const RationalVector lhs = market.payoffs.transpose() * leveraged.holdings;
  const RationalVector rhs = corresponding_scheme_payoff(market, x);
  if (!lhs.cwiseEqual(rhs).all())
    throw InternalError("leverage payoff does not match the profit vector");
  return leveraged;
}

std::optional<Portfolio> positive_decision_exists(const Market& market) {
  require_discounted(market, "positive_decision_exists");
  const RationalMatrix b = profit_matrix(market);
  const Eigen::Index n = market.asset_count();
  const Eigen::Index m = market.state_count();

  LinearProgram lp(n);
  for (Eigen::Index s = 0; s < m; ++s)
    lp.add_constraint(b.col(s), ConstraintSense::ge, 0);
  lp.add_constraint(b * RationalVector::Ones(m), ConstraintSense::eq, 1);
  auto x = find_feasible_point(lp);
  if (!x) return std::nullopt;

  Portfolio decision{std::move(*x)};
  if (!is_semipositive(corresponding_scheme_payoff(market, decision)))
    throw InternalError(
        "feasibility kernel returned a decision with a non-semipositive "
        "profit vector");
  return decision;
}

std::optional<RationalVector> state_prices(const Market& market) {
  const Eigen::Index n = market.asset_count();
  const Eigen::Index m = market.state_count();

  const auto verify = [&](const RationalVector& psi) {
    return is_strictly_positive(psi) &&
           (market.payoffs * psi).cwiseEqual(market.prices).all();
  };

  // Uniform lower-bound schedule: psi >= 1/M for escalating M.
  for (const unsigned long exponent : {1ul, 8ul, 32ul, 64ul}) {
    mpz_class m_pow;
    mpz_ui_pow_ui(m_pow.get_mpz_t(), 2, exponent);
    const Rational floor = Rational(1) / Rational(m_pow);

    LinearProgram lp(m);
    for (Eigen::Index i = 0; i < n; ++i)
      lp.add_constraint(market.payoffs.row(i).transpose(), ConstraintSense::eq,
                        market.prices(i));
    for (Eigen::Index s = 0; s < m; ++s)
      lp.add_constraint(RationalVector::Unit(m, s), ConstraintSense::ge,
                        floor);
    if (auto psi = find_feasible_point(lp)) {
      if (!verify(*psi))
        throw InternalError("state-price candidate failed re-substitution");
      return psi;
    }
  }

  // Exact boundary: maximize t with psi >= t componentwise. The riskless row
  // pins sum(psi) = p1, so t is bounded above; strict positivity holds iff
  // the optimum is positive.
  LinearProgram lp(m + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    RationalVector row(m + 1);
    row.head(m) = market.payoffs.row(i).transpose();
    row(m) = 0;
    lp.add_constraint(std::move(row), ConstraintSense::eq, market.prices(i));
  }
  for (Eigen::Index s = 0; s < m; ++s) {
    RationalVector row = RationalVector::Zero(m + 1);
    row(s) = 1;
    row(m) = -1;
    lp.add_constraint(std::move(row), ConstraintSense::ge, 0);
  }
  RationalVector objective = RationalVector::Zero(m + 1);
  objective(m) = 1;
  const SolveResult best = maximize(lp, objective);
  if (best.status == SolveStatus::unbounded)
    throw InternalError("state-price bound is unbounded on a valid market");
  if (best.status != SolveStatus::optimal || !(best.objective > 0))
    return std::nullopt;

  RationalVector psi = best.point.head(m);
  if (!verify(psi))
    throw InternalError("state-price candidate failed re-substitution");
  return psi;
}

}  // namespace unarb
