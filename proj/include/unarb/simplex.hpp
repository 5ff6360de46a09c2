#pragma once

#include <optional>
#include <vector>

#include "unarb/rational.hpp"

namespace unarb {

enum class ConstraintSense { le, eq, ge };

/// A small linear program over free rational variables. Constraints are
/// rows  coeffs . v  (<= | = | >=)  rhs.
class LinearProgram {
 public:
  explicit LinearProgram(Eigen::Index variable_count);

  /// Throws InvariantError when coeffs.size() != variable_count().
  void add_constraint(RationalVector coeffs, ConstraintSense sense,
                      Rational rhs);

  Eigen::Index variable_count() const { return variable_count_; }
  Eigen::Index constraint_count() const {
    return static_cast<Eigen::Index>(rows_.size());
  }

  struct Row {
    RationalVector coeffs;
    ConstraintSense sense;
    Rational rhs;
  };
  const std::vector<Row>& rows() const { return rows_; }

  /// Exact check that a point satisfies every constraint.
  bool is_feasible_point(const RationalVector& point) const;

 private:
  Eigen::Index variable_count_;
  std::vector<Row> rows_;
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  RationalVector point;  // empty unless status == optimal
  Rational objective;    // objective . point, recomputed by substitution
};

/// max objective . v subject to the program's constraints. Exact rational
/// two-phase simplex with Bland's rule; terminates on every input.
SolveResult maximize(const LinearProgram& lp, const RationalVector& objective);

/// Any feasible point, or nullopt when the constraint set is empty.
std::optional<RationalVector> find_feasible_point(const LinearProgram& lp);

}  // namespace unarb
