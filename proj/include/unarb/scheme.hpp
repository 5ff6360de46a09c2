#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unarb/rational.hpp"

namespace unarb {

/// A finite decision scheme: one act per row, one state per column.
/// Entries are the (exact rational) payoffs of the act in that state.
/// Zero acts is a valid scheme; zero states is not.
struct MatrixScheme {
  RationalMatrix acts;

  Eigen::Index act_count() const { return acts.rows(); }
  Eigen::Index state_count() const { return acts.cols(); }
};

/// Checked constructor. Throws InvariantError when state_count < 1.
MatrixScheme make_scheme(RationalMatrix acts_by_row);

/// Total rank assignment over the acts of one scheme, one rank per act index.
/// Lower rank = less preferred; equal ranks = indifferent. Any such
/// assignment induces an asymmetric, negatively transitive strict relation
/// (rank(i) < rank(j)  <=>  act i below act j).
struct Ranking {
  std::vector<int> ranks;
};

/// A crossing pair: act_a beats act_b in state_b, act_b beats act_a in
/// state_a. Existence of such a pair is exactly non-uniqueness of the
/// domination-compatible preference order.
struct UncertaintyWitness {
  Eigen::Index act_a;
  Eigen::Index act_b;
  Eigen::Index state_a;  // acts(act_a, state_a) < acts(act_b, state_a)
  Eigen::Index state_b;  // acts(act_b, state_b) < acts(act_a, state_b)
};

/// True iff act i is componentwise <= act j with at least one strict
/// coordinate, i.e. i sits strictly below j in the domination order.
/// Throws std::out_of_range for bad indices.
bool dominates(const MatrixScheme& scheme, Eigen::Index i, Eigen::Index j);

/// True iff act i is strictly below act j in every state.
bool strictly_dominates(const MatrixScheme& scheme, Eigen::Index i,
                        Eigen::Index j);

/// True iff every pair of acts with distinct payoff vectors is ordered by
/// domination one way or the other. Duplicate payoff vectors count as the
/// same act and never break connectedness.
bool is_domination_connected(const MatrixScheme& scheme);

/// Returns the lexicographically first crossing pair, or nullopt when the
/// domination order is connected.
std::optional<UncertaintyWitness> contains_uncertainty(
    const MatrixScheme& scheme);

/// Deterministic linear extension of domination: all-distinct ranks,
/// dominates(i,j) => rank(i) < rank(j). Ties among incomparable acts break
/// toward the lower act index.
Ranking build_projection(const MatrixScheme& scheme);

/// Two rankings that both extend domination and order the crossing pair
/// oppositely (first: act_a below act_b). nullopt iff the scheme contains
/// no uncertainty.
std::optional<std::pair<Ranking, Ranking>> build_two_distinct_projections(
    const MatrixScheme& scheme);

/// True iff the ranking extends domination. Throws InvariantError when the
/// ranking is not total over the scheme's acts.
bool verify_projection(const MatrixScheme& scheme, const Ranking& ranking);

/// True iff the witness indices are in range and both crossing inequalities
/// hold. Re-substitution check used by tests and the CLI.
bool witness_is_valid(const MatrixScheme& scheme, const UncertaintyWitness& w);

/// The scheme over the distinct payoff vectors of `scheme`, first
/// occurrence order preserved.
MatrixScheme deduplicate_acts(const MatrixScheme& scheme);

}  // namespace unarb
