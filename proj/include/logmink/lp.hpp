#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace logmink::lp {

// maximize c.x subject to a_i.x <= b_i, x free in R^d.
//
// Solved by the simplex method on the dual (min b.y, A^T y = c, y >= 0),
// which walks between primal vertices defined by d tight constraints. A box
// |x_k| <= box_bound is appended so the problem is always bounded and the
// initial dual basis is immediate. Intended for d <= 8 and thousands of rows.
class LinearProgram {
 public:
  explicit LinearProgram(int dim);

  int dim() const { return dim_; }
  int rows() const { return static_cast<int>(rhs_.size()); }

  void set_objective(std::span<const double> c);
  void add_constraint(std::span<const double> a, double b);

  std::span<const double> row(int i) const {
    return {coeffs_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  double rhs(int i) const { return rhs_[static_cast<std::size_t>(i)]; }
  std::span<const double> objective() const { return objective_; }

 private:
  int dim_;
  std::vector<double> objective_;
  std::vector<double> coeffs_;
  std::vector<double> rhs_;
};

enum class Status { Optimal, Infeasible, IterationLimit };

struct Solution {
  Status status = Status::IterationLimit;
  std::vector<double> x;
  double value = 0.0;
  bool box_active = false;  // optimum touches the artificial box
  int iterations = 0;
};

struct SolveOptions {
  double box_bound = 1e6;
  // Constraint order is shuffled with this seed; it only affects which of
  // several optimal vertices is returned.
  std::uint64_t seed = 0;
  double feasibility_tol = 1e-12;
};

Solution maximize(const LinearProgram& lp, const SolveOptions& options = {});

}  // namespace logmink::lp
