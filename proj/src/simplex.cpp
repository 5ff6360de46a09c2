#include "unarb/simplex.hpp"

#include <algorithm>
#include <utility>

#include "unarb/errors.hpp"

namespace unarb {

LinearProgram::LinearProgram(Eigen::Index variable_count)
    : variable_count_(variable_count) {
  if (variable_count < 0)
    throw InvariantError("negative variable count");
}

void LinearProgram::add_constraint(RationalVector coeffs,
                                   ConstraintSense sense, Rational rhs) {
  if (coeffs.size() != variable_count_)
    throw InvariantError("constraint has " + std::to_string(coeffs.size()) +
                         " coefficients, expected " +
                         std::to_string(variable_count_));
  rows_.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

bool LinearProgram::is_feasible_point(const RationalVector& point) const {
  if (point.size() != variable_count_) return false;
  for (const Row& row : rows_) {
    const Rational lhs = row.coeffs.dot(point);
    switch (row.sense) {
      case ConstraintSense::le:
        if (lhs > row.rhs) return false;
        break;
      case ConstraintSense::eq:
        if (lhs != row.rhs) return false;
        break;
      case ConstraintSense::ge:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense tableau over the standard form  E z = f, z >= 0  built from the
// program by splitting each free variable into a positive and a negative
// part and adding one slack per inequality. Artificial variables carry
// phase 1; Bland's rule on both the entering and the leaving choice makes
// every pivot sequence finite.
class Tableau {
 public:
  Tableau(const LinearProgram& lp)
      : var_count_(lp.variable_count()),
        split_count_(2 * lp.variable_count()) {
    Eigen::Index slack_count = 0;
    for (const auto& row : lp.rows())
      if (row.sense != ConstraintSense::eq) ++slack_count;

    const Eigen::Index k = lp.constraint_count();
    structural_ = split_count_ + slack_count;
    total_ = structural_ + k;  // one artificial per row
    tab_ = RationalMatrix::Zero(k + 1, total_ + 1);
    basis_.resize(k);

    Eigen::Index slack = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
      const auto& row = lp.rows()[static_cast<std::size_t>(i)];
      for (Eigen::Index v = 0; v < var_count_; ++v) {
        tab_(i, 2 * v) = row.coeffs(v);
        tab_(i, 2 * v + 1) = -row.coeffs(v);
      }
      if (row.sense != ConstraintSense::eq) {
        tab_(i, split_count_ + slack) =
            row.sense == ConstraintSense::le ? 1 : -1;
        ++slack;
      }
      tab_(i, total_) = row.rhs;
      if (tab_(i, total_) < 0) tab_.row(i) = -tab_.row(i);
      tab_(i, structural_ + i) = 1;  // artificial, initial basis
      basis_[static_cast<std::size_t>(i)] = structural_ + i;
    }
  }

  SolveStatus run_two_phase(const RationalVector& objective) {
    // Phase 1: minimize the artificial sum.
    {
      auto obj = objective_row();
      obj.setZero();
      for (Eigen::Index a = 0; a < row_count(); ++a) obj(structural_ + a) = 1;
      for (Eigen::Index i = 0; i < row_count(); ++i) obj -= tab_.row(i);
    }
    if (!pivot_until_optimal(total_))
      throw InternalError("phase 1 reported an unbounded artificial sum");
    if (-objective_row()(total_) > 0) return SolveStatus::infeasible;
    evict_artificials();  // invalidates row views into the tableau

    // Phase 2: minimize the negated objective over structural columns.
    {
      auto obj = objective_row();
      obj.setZero();
      for (Eigen::Index v = 0; v < var_count_; ++v) {
        obj(2 * v) = -objective(v);
        obj(2 * v + 1) = objective(v);
      }
      for (Eigen::Index i = 0; i < row_count(); ++i) {
        const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
        if (obj(b) != 0) obj -= obj(b) * tab_.row(i);
      }
    }
    if (!pivot_until_optimal(structural_)) return SolveStatus::unbounded;
    return SolveStatus::optimal;
  }

  RationalVector extract_point() const {
    RationalVector z = RationalVector::Zero(split_count_);
    for (Eigen::Index i = 0; i < row_count(); ++i) {
      const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      if (b < split_count_) z(b) = tab_(i, total_);
    }
    RationalVector v(var_count_);
    for (Eigen::Index j = 0; j < var_count_; ++j)
      v(j) = z(2 * j) - z(2 * j + 1);
    return v;
  }

 private:
  Eigen::Index row_count() const { return tab_.rows() - 1; }

  RationalMatrix::RowXpr objective_row() { return tab_.row(tab_.rows() - 1); }

  void pivot(Eigen::Index r, Eigen::Index s) {
    tab_.row(r) /= tab_(r, s);
    for (Eigen::Index i = 0; i < tab_.rows(); ++i) {
      if (i == r || tab_(i, s) == 0) continue;
      tab_.row(i) -= tab_(i, s) * tab_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = s;
  }

  // Bland: entering = lowest-index column with negative reduced cost among
  // columns [0, column_limit); leaving = lowest basis index among the
  // minimum-ratio rows. Returns false on an unbounded direction.
  bool pivot_until_optimal(Eigen::Index column_limit) {
    const auto obj = tab_.row(tab_.rows() - 1);
    for (int guard = 0; guard < 100000; ++guard) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < column_limit; ++j)
        if (obj(j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Rational best_ratio;
      for (Eigen::Index i = 0; i < row_count(); ++i) {
        if (!(tab_(i, entering) > 0)) continue;
        const Rational ratio = tab_(i, total_) / tab_(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] <
                 basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
    throw InternalError("simplex exceeded the pivot guard");
  }

  // Pivot basic artificials onto structural columns; rows that cannot be
  // repaired are 0 = 0 and get dropped outright.
  void evict_artificials() {
    std::vector<Eigen::Index> dead_rows;
    for (Eigen::Index i = 0; i < row_count(); ++i) {
      if (basis_[static_cast<std::size_t>(i)] < structural_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < structural_; ++j)
        if (tab_(i, j) != 0) {
          col = j;
          break;
        }
      if (col >= 0)
        pivot(i, col);
      else
        dead_rows.push_back(i);
    }
    if (dead_rows.empty()) return;

    RationalMatrix pruned(tab_.rows() - static_cast<Eigen::Index>(dead_rows.size()),
                          tab_.cols());
    std::vector<Eigen::Index> pruned_basis;
    Eigen::Index out = 0;
    for (Eigen::Index i = 0; i < row_count(); ++i) {
      if (std::find(dead_rows.begin(), dead_rows.end(), i) != dead_rows.end())
        continue;
      pruned.row(out++) = tab_.row(i);
      pruned_basis.push_back(basis_[static_cast<std::size_t>(i)]);
    }
    pruned.row(out) = tab_.row(tab_.rows() - 1);
    tab_ = std::move(pruned);
    basis_ = std::move(pruned_basis);
  }

  Eigen::Index var_count_;
  Eigen::Index split_count_;
  Eigen::Index structural_ = 0;
  Eigen::Index total_ = 0;
  RationalMatrix tab_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

SolveResult maximize(const LinearProgram& lp, const RationalVector& objective) {
  if (objective.size() != lp.variable_count())
    throw InvariantError("objective length does not match variable count");

  Tableau tableau(lp);
  SolveResult result;
  result.status = tableau.run_two_phase(objective);
  if (result.status != SolveStatus::optimal) return result;

  result.point = tableau.extract_point();
  if (!lp.is_feasible_point(result.point))
    throw InternalError("simplex returned an infeasible point");
  result.objective = objective.dot(result.point);
  return result;
}

std::optional<RationalVector> find_feasible_point(const LinearProgram& lp) {
  SolveResult r = maximize(lp, RationalVector::Zero(lp.variable_count()));
  if (r.status != SolveStatus::optimal) return std::nullopt;
  return std::move(r.point);
}

}  // namespace unarb
