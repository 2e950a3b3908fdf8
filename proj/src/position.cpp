#include "logmink/position.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "logmink/errors.hpp"
#include "logmink/lp.hpp"

namespace logmink {

namespace {

lp::Solution solve_or_throw(const lp::LinearProgram& prog, const lp::SolveOptions& opts,
                            const char* what) {
  lp::Solution sol = lp::maximize(prog, opts);
  if (sol.status != lp::Status::Optimal || sol.box_active) {
    std::ostringstream os;
    os << what << " LP did not converge (status " << static_cast<int>(sol.status)
       << ", box active " << sol.box_active << ")";
    throw GeometryError(ErrorKind::SolverFailure, os.str());
  }
  return sol;
}

double size_scale(const Body& k, const Body& l) {
  return k.h().max() / l.h().min() + k.h().max() + l.h().max() + 1.0;
}

}  // namespace

double containment_violation(const Body& k, const Body& l, double r, double big_r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < k.size(); ++j) {
    worst = std::max(worst, r * l.h()[j] - k.h()[j]);
    worst = std::max(worst, k.h()[j] - big_r * l.h()[j]);
  }
  return worst;
}

RadiusSolution inradius(const Body& k_in, const Body& l_in, const PositionOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  lp::LinearProgram prog(3);
  const std::array<double, 3> objective{1.0, 0.0, 0.0};
  prog.set_objective(objective);
  for (int j = 0; j < k.size(); ++j) {
    const double t = k.grid().node(j);
    const std::array<double, 3> row{l.h()[j], std::cos(t), std::sin(t)};
    prog.add_constraint(row, k.h()[j]);
  }
  const lp::Solution sol =
      solve_or_throw(prog, {.box_bound = 10.0 * size_scale(k, l), .seed = options.seed}, "inradius");

  RadiusSolution out{sol.x[0], {sol.x[1], sol.x[2]}, {}};
  const double tight = options.tol_active * k.h().max();
  for (int j = 0; j < k.size(); ++j) {
    const double t = k.grid().node(j);
    if (k.h()[j] - out.value * l.h()[j] - out.witness.along(t) <= tight) {
      out.active_angles.push_back(t);
    }
  }
  return out;
}

RadiusSolution outradius(const Body& k_in, const Body& l_in, const PositionOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  lp::LinearProgram prog(3);
  const std::array<double, 3> objective{-1.0, 0.0, 0.0};
  prog.set_objective(objective);
  for (int j = 0; j < k.size(); ++j) {
    const double t = k.grid().node(j);
    const std::array<double, 3> row{-l.h()[j], -std::cos(t), -std::sin(t)};
    prog.add_constraint(row, -k.h()[j]);
  }
  const double bound = 10.0 * (k.h().max() / l.h().min() + size_scale(k, l));
  const lp::Solution sol =
      solve_or_throw(prog, {.box_bound = bound, .seed = options.seed}, "outradius");

  RadiusSolution out{sol.x[0], {sol.x[1], sol.x[2]}, {}};
  const double tight = options.tol_active * k.h().max();
  for (int j = 0; j < k.size(); ++j) {
    const double t = k.grid().node(j);
    if (out.value * l.h()[j] + out.witness.along(t) - k.h()[j] <= tight) {
      out.active_angles.push_back(t);
    }
  }
  return out;
}

PositionedPair dilation_position(const Body& k_in, const Body& l_in,
                                 const PositionOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const RadiusSolution in = inradius(k, l, options);
  const RadiusSolution out = outradius(k, l, options);
  const double r = in.value;
  const double big_r = out.value;

  // Witnesses are not unique when the extremal contacts include an
  // antipodal pair, so a pair that is already placed is kept as it is.
  if (k.h().min() > 0.0 && l.h().min() > 0.0) {
    const double current = std::max(0.0, containment_violation(k, l, r, big_r));
    if (current <= options.tol_feas) {
      const double margin = std::min(k.h().min(), l.h().min());
      DilationReport report{r, big_r, {}, {}, current, margin};
      return {std::move(k), std::move(l), report};
    }
  }

  const bool homothets = big_r - r <= 1e-9 * big_r;
  // Closed-form shifts for unique witnesses: r v + o = x_in, R v + o = x_out,
  // with o = -a the new origin. They size the LP box.
  double expected = 0.0;
  if (!homothets) {
    const Vector2 v0 = (1.0 / (big_r - r)) * (out.witness - in.witness);
    expected = v0.norm() + (in.witness - r * v0).norm();
  } else {
    expected = in.witness.norm();
  }
  const double bound = 10.0 * (expected + k.h().max() + l.h().max() + 1.0);

  // Variables (a_x, a_y, v_x, v_y, sigma); homothets drop v.
  const int dim = homothets ? 3 : 5;
  lp::LinearProgram prog(dim);
  std::vector<double> objective(static_cast<std::size_t>(dim), 0.0);
  objective.back() = -1.0;
  prog.set_objective(objective);
  std::vector<double> row(static_cast<std::size_t>(dim));
  for (int j = 0; j < k.size(); ++j) {
    const double c = std::cos(k.grid().node(j));
    const double s = std::sin(k.grid().node(j));
    // r (h_L + v.u) - (h_K + a.u) <= sigma
    row[0] = -c;
    row[1] = -s;
    if (!homothets) {
      row[2] = r * c;
      row[3] = r * s;
    }
    row.back() = -1.0;
    prog.add_constraint(row, k.h()[j] - r * l.h()[j]);
    // (h_K + a.u) - R (h_L + v.u) <= sigma
    row[0] = c;
    row[1] = s;
    if (!homothets) {
      row[2] = -big_r * c;
      row[3] = -big_r * s;
    }
    row.back() = -1.0;
    prog.add_constraint(row, big_r * l.h()[j] - k.h()[j]);
  }
  const lp::Solution sol =
      solve_or_throw(prog, {.box_bound = bound, .seed = options.seed}, "dilation position");

  const Vector2 a{sol.x[0], sol.x[1]};
  const Vector2 v = homothets ? Vector2{} : Vector2{sol.x[2], sol.x[3]};

  std::vector<double> hk(k.h().values().begin(), k.h().values().end());
  std::vector<double> hl(l.h().values().begin(), l.h().values().end());
  for (int j = 0; j < k.size(); ++j) {
    const double t = k.grid().node(j);
    hk[j] += a.along(t);
    hl[j] += v.along(t);
  }
  const double margin = std::min(*std::min_element(hk.begin(), hk.end()),
                                 *std::min_element(hl.begin(), hl.end()));
  if (margin <= 0.0) {
    throw GeometryError(ErrorKind::OriginOutside,
                        "origin not interior at the dilation position (margin " +
                            std::to_string(margin) + ")");
  }
  Body k_pos(PeriodicSamples(k.grid(), std::move(hk)), k.name());
  Body l_pos(PeriodicSamples(l.grid(), std::move(hl)), l.name());

  const double violation = std::max(0.0, containment_violation(k_pos, l_pos, r, big_r));
  if (violation > options.tol_feas) {
    throw GeometryError(ErrorKind::Infeasible,
                        "minimized containment violation " + std::to_string(violation));
  }
  DilationReport report{r, big_r, v, a, violation, margin};
  return {std::move(k_pos), std::move(l_pos), report};
}

bool is_dilation_position(const Body& k_in, const Body& l_in, double tol,
                          const PositionOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  if (k.h().min() <= 0.0 || l.h().min() <= 0.0) return false;
  const double r = inradius(k, l, options).value;
  const double big_r = outradius(k, l, options).value;
  return containment_violation(k, l, r, big_r) <= tol;
}

}  // namespace logmink
