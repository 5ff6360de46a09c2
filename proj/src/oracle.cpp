#include "unarb/oracle.hpp"

#include <set>

#include "unarb/errors.hpp"

namespace unarb {

namespace {

// rng() % k directly: keeps draws identical across standard libraries,
// unlike std::uniform_int_distribution.
int pick(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

const Rational& pick_from(std::mt19937_64& rng,
                          const std::vector<Rational>& pool) {
  return pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))];
}

std::vector<Rational> riskless_price_pool() {
  return {Rational(1), Rational(1, 2), Rational(3, 4), Rational(2, 3),
          Rational(1, 4)};
}

std::vector<Rational> positive_pool() {
  return {Rational(1), Rational(2),    Rational(3),    Rational(1, 2),
          Rational(1, 3), Rational(1, 4), Rational(3, 2)};
}

RationalVector sample_portfolio(std::mt19937_64& rng, Eigen::Index n) {
  RationalVector x(n);
  if (rng() % 2 == 0) {
    for (Eigen::Index i = 0; i < n; ++i) x(i) = Rational(pick(rng, 7) - 3);
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      Rational r(pick(rng, 13) - 6, pick(rng, 4) + 1);
      r.canonicalize();
      x(i) = r;
    }
  }
  return x;
}

bool vector_leq(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

}  // namespace

GeneratedMarket generate_market(const InstanceSpec& spec) {
  const int min_assets = spec.forced_class == ForcedClass::arbitrage ? 2 : 1;
  if (spec.asset_count < min_assets || spec.asset_count > 5)
    throw InvariantError("asset_count out of range for generator");
  if (spec.state_count < 1 || spec.state_count > 5)
    throw InvariantError("state_count out of range for generator");
  if (spec.entry_pool.empty()) throw InvariantError("entry pool is empty");

  std::mt19937_64 rng(spec.seed);
  const Eigen::Index n = spec.asset_count;
  const Eigen::Index m = spec.state_count;

  RationalMatrix payoffs(n, m);
  for (Eigen::Index s = 0; s < m; ++s) payoffs(0, s) = 1;
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index s = 0; s < m; ++s)
      payoffs(i, s) = pick_from(rng, spec.entry_pool);

  const auto p1_pool = riskless_price_pool();

  if (spec.forced_class == ForcedClass::no_arbitrage) {
    const auto psi_pool = positive_pool();
    RationalVector psi(m);
    Rational total = 0;
    for (Eigen::Index s = 0; s < m; ++s) {
      psi(s) = pick_from(rng, psi_pool);
      total += psi(s);
    }
    psi *= pick_from(rng, p1_pool) / total;  // sum(psi) lands in (0, 1]
    RationalVector prices = payoffs * psi;
    return GeneratedMarket{validate_market(std::move(payoffs), std::move(prices)),
                           std::move(psi)};
  }

  RationalVector prices(n);
  prices(0) = pick_from(rng, p1_pool);
  for (Eigen::Index i = 1; i < n; ++i)
    prices(i) = pick_from(rng, spec.entry_pool);

  if (spec.forced_class == ForcedClass::arbitrage) {
    // Plant row j >= row k with one strict coordinate at equal prices, so
    // e_j - e_k is an arbitrage portfolio whatever the rest looks like.
    const Eigen::Index j = 1 + pick(rng, static_cast<int>(n) - 1);
    Eigen::Index k = pick(rng, static_cast<int>(n) - 1);
    if (k >= j) ++k;
    const std::vector<Rational> bumps = {Rational(0), Rational(1),
                                         Rational(1, 2), Rational(2)};
    const Eigen::Index forced_state = pick(rng, static_cast<int>(m));
    for (Eigen::Index s = 0; s < m; ++s) {
      Rational bump = pick_from(rng, bumps);
      if (s == forced_state && bump == 0) bump = Rational(1);
      payoffs(j, s) = payoffs(k, s) + bump;
    }
    prices(j) = prices(k);
  }

  return GeneratedMarket{validate_market(std::move(payoffs), std::move(prices)),
                         std::nullopt};
}

MatrixScheme random_scheme(std::mt19937_64& rng, int max_acts, int max_states,
                           const std::vector<Rational>& entry_pool) {
  if (entry_pool.empty()) throw InvariantError("entry pool is empty");
  const Eigen::Index acts = pick(rng, max_acts + 1);
  const Eigen::Index states = 1 + pick(rng, max_states);
  RationalMatrix payoffs(acts, states);
  for (Eigen::Index i = 0; i < acts; ++i)
    for (Eigen::Index s = 0; s < states; ++s)
      payoffs(i, s) = pick_from(rng, entry_pool);
  return make_scheme(std::move(payoffs));
}

RelationMask domination_mask(const MatrixScheme& scheme) {
  const Eigen::Index n = scheme.act_count();
  if (n > 5) throw InvariantError("relation masks are capped at 5 acts");
  RelationMask mask = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && dominates(scheme, i, j))
        mask |= RelationMask{1} << (i * n + j);
  return mask;
}

std::vector<RelationMask> passing_projection_relations(
    const MatrixScheme& scheme) {
  const int n = static_cast<int>(scheme.act_count());
  if (n > 5) throw InvariantError("enumeration is capped at 5 acts");

  const RelationMask dom = domination_mask(scheme);
  std::set<RelationMask> distinct;
  std::vector<int> ranks(static_cast<std::size_t>(n), 0);

  // Odometer over all n^n rank maps.
  while (true) {
    RelationMask induced = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (ranks[static_cast<std::size_t>(i)] <
            ranks[static_cast<std::size_t>(j)])
          induced |= RelationMask{1} << (i * n + j);
    if ((dom & ~induced) == 0) distinct.insert(induced);

    int digit = 0;
    while (digit < n && ranks[static_cast<std::size_t>(digit)] == n - 1)
      ranks[static_cast<std::size_t>(digit++)] = 0;
    if (digit == n) break;
    ++ranks[static_cast<std::size_t>(digit)];
  }
  return {distinct.begin(), distinct.end()};
}

bool brute_force_uncertainty(const MatrixScheme& scheme) {
  const MatrixScheme unique = deduplicate_acts(scheme);
  return passing_projection_relations(unique).size() > 1;
}

EquivalenceReport check_theorem2(const Market& market, int sample_count,
                                 std::uint64_t seed) {
  EquivalenceReport report;
  report.instance = market;

  const Market disc = discount_prices(market);
  const RationalMatrix b = profit_matrix(disc);
  const Eigen::Index n = disc.asset_count();

  const ArbitrageVerdict verdict = find_arbitrage(market);
  report.procedure_a_found = verdict.kind != ArbitrageKind::none;
  report.procedure_a_witness = verdict.witness;

  const std::optional<Portfolio> exact = positive_decision_exists(disc);
  report.procedure_b_witness = exact;

  std::mt19937_64 rng(seed);
  for (int round = 0; round < sample_count && !report.sampled_pair_found;
       ++round) {
    Portfolio x1{sample_portfolio(rng, n)};
    Portfolio x2{sample_portfolio(rng, n)};
    const RationalVector d1 = b.transpose() * x1.holdings;
    const RationalVector d2 = b.transpose() * x2.holdings;
    if (d1.cwiseEqual(d2).all()) continue;

    std::optional<std::pair<Portfolio, Portfolio>> ordered;
    if (vector_leq(d1, d2))
      ordered = std::make_pair(x1, x2);
    else if (vector_leq(d2, d1))
      ordered = std::make_pair(x2, x1);
    if (!ordered) continue;

    Portfolio diff{ordered->second.holdings - ordered->first.holdings};
    if (!is_semipositive(b.transpose() * diff.holdings))
      throw InternalError("ordered payoff pair with non-semipositive difference");
    report.sampled_pair_found = true;
    report.sampled_pair = std::move(ordered);
    if (!report.procedure_b_witness) report.procedure_b_witness = diff;
  }

  if (report.procedure_a_found) {
    const RationalVector profit =
        b.transpose() * verdict.witness->holdings;
    RationalMatrix two_acts(2, profit.size());
    two_acts.row(0) = profit.transpose();
    two_acts.row(1).setZero();
    report.forward_scheme_consistent =
        is_semipositive(profit) &&
        !contains_uncertainty(make_scheme(std::move(two_acts))).has_value();
  }

  report.procedure_b_found = exact.has_value() || report.sampled_pair_found;
  report.agree = report.procedure_a_found == exact.has_value() &&
                 (!report.sampled_pair_found || report.procedure_a_found) &&
                 report.forward_scheme_consistent;
  return report;
}

}  // namespace unarb
