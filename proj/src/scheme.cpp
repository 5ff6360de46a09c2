#include "unarb/scheme.hpp"

#include <stdexcept>

#include "unarb/errors.hpp"

namespace unarb {

namespace {

void check_act_index(const MatrixScheme& scheme, Eigen::Index i) {
  if (i < 0 || i >= scheme.act_count())
    throw std::out_of_range("act index " + std::to_string(i) +
                            " out of range for scheme with " +
                            std::to_string(scheme.act_count()) + " acts");
}

bool acts_equal(const MatrixScheme& s, Eigen::Index i, Eigen::Index j) {
  return s.acts.row(i).cwiseEqual(s.acts.row(j)).all();
}

// rel(i,j) as an n*n adjacency matrix of the strict relation.
using Relation = std::vector<std::vector<bool>>;

Relation domination_relation(const MatrixScheme& s) {
  const Eigen::Index n = s.act_count();
  Relation rel(n, std::vector<bool>(n, false));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) rel[i][j] = dominates(s, i, j);
  return rel;
}

// Kahn linearization, lowest unplaced index first. The relation is a strict
// partial order, so this never stalls; a stall means a cycle slipped in.
Ranking linearize(const Relation& rel) {
  const std::size_t n = rel.size();
  Ranking out;
  out.ranks.assign(n, -1);
  std::vector<std::size_t> open_below(n, 0);  // unplaced predecessors
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][j]) ++open_below[j];

  for (std::size_t next_rank = 0; next_rank < n; ++next_rank) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (out.ranks[j] < 0 && open_below[j] == 0) {
        pick = j;
        break;
      }
    }
    if (pick == n) throw InternalError("relation to linearize has a cycle");
    out.ranks[pick] = static_cast<int>(next_rank);
    for (std::size_t j = 0; j < n; ++j)
      if (rel[pick][j]) --open_below[j];
  }
  return out;
}

// Extension of domination that forces `lo` below `hi`:
//   x <' y  <=>  x < y  or  [(x < lo or x = lo) and (hi < y or y = hi)].
// A strict partial order whenever lo and hi are domination-incomparable.
Relation extend_with_pair(const Relation& dom, Eigen::Index lo,
                          Eigen::Index hi) {
  const std::size_t n = dom.size();
  Relation rel = dom;
  for (std::size_t x = 0; x < n; ++x) {
    const bool below_lo = (static_cast<Eigen::Index>(x) == lo) || dom[x][lo];
    if (!below_lo) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if ((static_cast<Eigen::Index>(y) == hi) || dom[hi][y]) rel[x][y] = true;
    }
  }
  return rel;
}

}  // namespace

MatrixScheme make_scheme(RationalMatrix acts_by_row) {
  if (acts_by_row.cols() < 1)
    throw InvariantError("scheme needs at least one state");
  return MatrixScheme{std::move(acts_by_row)};
}

bool dominates(const MatrixScheme& scheme, Eigen::Index i, Eigen::Index j) {
  check_act_index(scheme, i);
  check_act_index(scheme, j);
  bool strict = false;
  for (Eigen::Index s = 0; s < scheme.state_count(); ++s) {
    const Rational& a = scheme.acts(i, s);
    const Rational& b = scheme.acts(j, s);
    if (a > b) return false;
    if (a < b) strict = true;
  }
  return strict;
}

bool strictly_dominates(const MatrixScheme& scheme, Eigen::Index i,
                        Eigen::Index j) {
  check_act_index(scheme, i);
  check_act_index(scheme, j);
  for (Eigen::Index s = 0; s < scheme.state_count(); ++s)
    if (!(scheme.acts(i, s) < scheme.acts(j, s))) return false;
  return true;
}

bool is_domination_connected(const MatrixScheme& scheme) {
  const Eigen::Index n = scheme.act_count();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (acts_equal(scheme, i, j)) continue;
      if (!dominates(scheme, i, j) && !dominates(scheme, j, i)) return false;
    }
  return true;
}

std::optional<UncertaintyWitness> contains_uncertainty(
    const MatrixScheme& scheme) {
  const Eigen::Index n = scheme.act_count();
  const Eigen::Index m = scheme.state_count();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::Index state_a = -1;  // first state where act i < act j
      Eigen::Index state_b = -1;  // first state where act j < act i
      for (Eigen::Index s = 0; s < m; ++s) {
        if (state_a < 0 && scheme.acts(i, s) < scheme.acts(j, s)) state_a = s;
        if (state_b < 0 && scheme.acts(j, s) < scheme.acts(i, s)) state_b = s;
      }
      if (state_a >= 0 && state_b >= 0)
        return UncertaintyWitness{i, j, state_a, state_b};
    }
  return std::nullopt;
}

Ranking build_projection(const MatrixScheme& scheme) {
  return linearize(domination_relation(scheme));
}

std::optional<std::pair<Ranking, Ranking>> build_two_distinct_projections(
    const MatrixScheme& scheme) {
  const auto witness = contains_uncertainty(scheme);
  if (!witness) return std::nullopt;
  const Relation dom = domination_relation(scheme);
  Ranking first = linearize(extend_with_pair(dom, witness->act_a, witness->act_b));
  Ranking second = linearize(extend_with_pair(dom, witness->act_b, witness->act_a));
  return std::make_pair(std::move(first), std::move(second));
}

bool verify_projection(const MatrixScheme& scheme, const Ranking& ranking) {
  const Eigen::Index n = scheme.act_count();
  if (static_cast<Eigen::Index>(ranking.ranks.size()) != n)
    throw InvariantError("ranking is not total: " +
                         std::to_string(ranking.ranks.size()) +
                         " ranks for " + std::to_string(n) + " acts");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && dominates(scheme, i, j) &&
          !(ranking.ranks[i] < ranking.ranks[j]))
        return false;
  return true;
}

bool witness_is_valid(const MatrixScheme& scheme, const UncertaintyWitness& w) {
  const auto in_acts = [&](Eigen::Index k) {
    return k >= 0 && k < scheme.act_count();
  };
  const auto in_states = [&](Eigen::Index k) {
    return k >= 0 && k < scheme.state_count();
  };
  if (!in_acts(w.act_a) || !in_acts(w.act_b) || !in_states(w.state_a) ||
      !in_states(w.state_b))
    return false;
  return scheme.acts(w.act_a, w.state_a) < scheme.acts(w.act_b, w.state_a) &&
         scheme.acts(w.act_b, w.state_b) < scheme.acts(w.act_a, w.state_b);
}

MatrixScheme deduplicate_acts(const MatrixScheme& scheme) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < scheme.act_count(); ++i) {
    bool seen = false;
    for (Eigen::Index k : keep)
      if (acts_equal(scheme, i, k)) {
        seen = true;
        break;
      }
    if (!seen) keep.push_back(i);
  }
  RationalMatrix unique(static_cast<Eigen::Index>(keep.size()),
                        scheme.state_count());
  for (std::size_t r = 0; r < keep.size(); ++r)
    unique.row(static_cast<Eigen::Index>(r)) = scheme.acts.row(keep[r]);
  return MatrixScheme{std::move(unique)};
}

}  // namespace unarb
