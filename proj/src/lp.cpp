#include "logmink/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "logmink/errors.hpp"

namespace logmink::lp {

LinearProgram::LinearProgram(int dim) : dim_(dim), objective_(static_cast<std::size_t>(dim), 0.0) {
  if (dim < 1) throw GeometryError(ErrorKind::InvalidArgument, "LP dimension must be >= 1");
}

void LinearProgram::set_objective(std::span<const double> c) {
  if (static_cast<int>(c.size()) != dim_) {
    throw GeometryError(ErrorKind::InvalidArgument, "objective has wrong dimension");
  }
  objective_.assign(c.begin(), c.end());
}

void LinearProgram::add_constraint(std::span<const double> a, double b) {
  if (static_cast<int>(a.size()) != dim_) {
    throw GeometryError(ErrorKind::InvalidArgument, "constraint has wrong dimension");
  }
  coeffs_.insert(coeffs_.end(), a.begin(), a.end());
  rhs_.push_back(b);
}

namespace {

struct Rows {
  Eigen::MatrixXd a;  // one constraint per row
  Eigen::VectorXd b;
  Eigen::VectorXd norms;
};

}  // namespace

Solution maximize(const LinearProgram& lp, const SolveOptions& options) {
  const int d = lp.dim();
  const int m_user = lp.rows();
  const int m = m_user + 2 * d;

  std::vector<int> order(static_cast<std::size_t>(m_user));
  std::iota(order.begin(), order.end(), 0);
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  Rows rows{Eigen::MatrixXd(m, d), Eigen::VectorXd(m), Eigen::VectorXd(m)};
  for (int i = 0; i < m_user; ++i) {
    const auto r = lp.row(order[static_cast<std::size_t>(i)]);
    for (int k = 0; k < d; ++k) rows.a(i, k) = r[static_cast<std::size_t>(k)];
    rows.b(i) = lp.rhs(order[static_cast<std::size_t>(i)]);
  }
  // Box rows: index m_user + 2k is x_k <= M, m_user + 2k + 1 is -x_k <= M.
  for (int k = 0; k < d; ++k) {
    rows.a.row(m_user + 2 * k).setZero();
    rows.a.row(m_user + 2 * k + 1).setZero();
    rows.a(m_user + 2 * k, k) = 1.0;
    rows.a(m_user + 2 * k + 1, k) = -1.0;
    rows.b(m_user + 2 * k) = options.box_bound;
    rows.b(m_user + 2 * k + 1) = options.box_bound;
  }
  for (int i = 0; i < m; ++i) rows.norms(i) = std::max(rows.a.row(i).norm(), 1e-300);

  Eigen::VectorXd c(d);
  for (int k = 0; k < d; ++k) c(k) = lp.objective()[static_cast<std::size_t>(k)];

  // Initial dual basis: one box row per coordinate, chosen by the sign of c.
  std::vector<int> basis(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) basis[k] = m_user + 2 * k + (c(k) >= 0.0 ? 0 : 1);

  const double bscale = std::max(1.0, rows.b.cwiseAbs().maxCoeff());
  const double tol = options.feasibility_tol * bscale;
  const int max_iter = 50 * (m + d) + 1000;

  Solution sol;
  Eigen::MatrixXd basis_rows(d, d);
  Eigen::VectorXd basis_rhs(d);
  double last_objective = std::numeric_limits<double>::infinity();
  int stalled = 0;
  bool bland = false;

  for (int iter = 0; iter < max_iter; ++iter) {
    for (int i = 0; i < d; ++i) {
      basis_rows.row(i) = rows.a.row(basis[i]);
      basis_rhs(i) = rows.b(basis[i]);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_rows);
    const Eigen::VectorXd x = lu.solve(basis_rhs);
    // Dual weights: basis_rows^T y = c.
    const Eigen::VectorXd y = lu.transpose().solve(c);

    // Entering row: the violated primal constraint.
    int enter = -1;
    double worst = 0.0;
    const Eigen::VectorXd slack = rows.b - rows.a * x;
    for (int i = 0; i < m; ++i) {
      if (slack(i) >= -tol) continue;
      if (std::find(basis.begin(), basis.end(), i) != basis.end()) continue;
      const double score = slack(i) / rows.norms(i);
      if (bland) {
        enter = i;
        break;
      }
      if (score < worst) {
        worst = score;
        enter = i;
      }
    }

    if (enter < 0) {
      sol.status = Status::Optimal;
      sol.x.assign(x.data(), x.data() + d);
      sol.value = c.dot(x);
      sol.iterations = iter;
      for (int k = 0; k < d; ++k) {
        if (std::abs(x(k)) >= options.box_bound * (1.0 - 1e-9)) sol.box_active = true;
      }
      return sol;
    }

    // Ratio test on y_B - s w >= 0 with basis_rows^T w = a_enter.
    const Eigen::VectorXd w = lu.transpose().solve(rows.a.row(enter).transpose());
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i) {
      if (w(i) <= 1e-12) continue;
      const double ratio = std::max(y(i), 0.0) / w(i);
      if (ratio < best - 1e-15 ||
          (bland && std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      sol.status = Status::Infeasible;
      sol.iterations = iter;
      return sol;
    }
    basis[leave] = enter;

    const double objective = basis_rhs.dot(y);
    if (objective < last_objective - 1e-14 * bscale) {
      last_objective = objective;
      stalled = 0;
    } else if (++stalled > 4 * d + 20) {
      bland = true;
    }
  }
  sol.status = Status::IterationLimit;
  sol.iterations = max_iter;
  return sol;
}

}  // namespace logmink::lp
