#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "unarb/market.hpp"
#include "unarb/rational.hpp"
#include "unarb/scheme.hpp"

namespace unarb {

enum class ForcedClass { arbitrage, no_arbitrage, unconstrained };

/// Recipe for one deterministic random market. `no_arbitrage` instances are
/// built by sampling strictly positive state prices and pricing every asset
/// off them; `arbitrage` instances plant a dominated asset pair at equal
/// prices.
struct InstanceSpec {
  int asset_count = 2;  // 1..5 (2..5 when forcing arbitrage)
  int state_count = 2;  // 1..5
  std::vector<Rational> entry_pool;
  std::uint64_t seed = 0;
  ForcedClass forced_class = ForcedClass::unconstrained;
};

struct GeneratedMarket {
  Market market;
  // The state prices the instance was priced from, for forced no-arbitrage.
  std::optional<RationalVector> generating_state_prices;
};

/// Deterministic in spec.seed. Throws InvariantError on caps or an empty
/// entry pool.
GeneratedMarket generate_market(const InstanceSpec& spec);

/// Random scheme with up to max_acts acts (possibly zero) and 1..max_states
/// states, entries drawn from the pool.
MatrixScheme random_scheme(std::mt19937_64& rng, int max_acts, int max_states,
                           const std::vector<Rational>& entry_pool);

/// Strict relation over <= 5 acts packed as bits: pair (i, j) at bit i*n+j.
using RelationMask = std::uint32_t;

RelationMask domination_mask(const MatrixScheme& scheme);

/// Every distinct strict relation induced by a total rank map that extends
/// domination, found by literal enumeration of all act_count^act_count rank
/// maps. Throws InvariantError above 5 acts. Does not deduplicate payoff
/// vectors; callers that want set semantics deduplicate first.
std::vector<RelationMask> passing_projection_relations(
    const MatrixScheme& scheme);

/// Literal non-uniqueness check: deduplicates payoff vectors, enumerates all
/// rank maps, and reports whether more than one distinct relation extends
/// domination. Independent of contains_uncertainty by construction.
bool brute_force_uncertainty(const MatrixScheme& scheme);

/// Side-by-side run of the arbitrage detector (procedure A) against the
/// profit-scheme route (procedure B: exact semipositive-profit feasibility
/// plus a sampled search for dominated payoff pairs).
struct EquivalenceReport {
  Market instance;
  bool procedure_a_found = false;
  std::optional<Portfolio> procedure_a_witness;
  bool procedure_b_found = false;
  std::optional<Portfolio> procedure_b_witness;
  bool sampled_pair_found = false;
  // (dominated, dominating) portfolios whose profit vectors are ordered.
  std::optional<std::pair<Portfolio, Portfolio>> sampled_pair;
  // When procedure A finds a witness x, the two-act scheme {B^T x, 0} must
  // be uncertainty-free with a semipositive profit vector.
  bool forward_scheme_consistent = true;
  bool agree = false;
};

/// The sampled route may miss arbitrage (finite samples) but a dominated
/// pair against a no-arbitrage verdict is a hard failure; agree captures
/// that plus exact-route equality and the forward scheme check.
EquivalenceReport check_theorem2(const Market& market, int sample_count,
                                 std::uint64_t seed);

}  // namespace unarb
