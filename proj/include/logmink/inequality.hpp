#pragma once

#include <functional>
#include <string>
#include <utility>

#include "logmink/body.hpp"
#include "logmink/position.hpp"

namespace logmink {

// Uniform verdict for every checked inequality. slack = rhs - lhs for
// <=-type inequalities and lhs - rhs for >=-type ones, so slack >= 0 means
// the inequality holds.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool equality_case = false;
};

struct CheckOptions {
  double tol_slack = 1e-8;  // times max(1, V(K))
  double tol_eq = 1e-6;     // times max(1, V(K))
  double homothety_tol = 1e-6;
  double position_tol = 1e-8;
  // Checkers whose inequality needs a dilation position verify it first
  // unless this is cleared.
  bool require_position = true;
};

// Strictly convex F on (lo, hi), certified on a log-spaced probe grid.
class ConvexTestFunction {
 public:
  ConvexTestFunction(std::string name, std::function<double(double)> eval,
                     double lo = 0.0, double hi = std::numeric_limits<double>::infinity());

  static ConvexTestFunction neg_log();  // -log x
  static ConvexTestFunction square();   // x^2
  static ConvexTestFunction x_log_x();  // x log x
  static ConvexTestFunction inverse();  // 1/x
  // "neglog", "sq", "xlogx" or "inv".
  static ConvexTestFunction by_name(const std::string& name);

  const std::string& name() const { return name_; }
  bool in_domain(double x) const { return x > lo_ && x < hi_; }
  double operator()(double x) const { return eval_(x); }

 private:
  std::string name_;
  std::function<double(double)> eval_;
  double lo_;
  double hi_;
};

// E(K,L) = -integral of log(f_K / f_L) dV_K.
double curvature_entropy(const Body& k, const Body& l);
// integral of log(h_L / h_K) dV_K.
double log_minkowski_functional(const Body& k, const Body& l);

InequalityReport green_osher(const Body& k, const Body& l, const ConvexTestFunction& fn,
                             const CheckOptions& options = {});
InequalityReport check_entropy_inequality(const Body& k, const Body& l,
                                          const CheckOptions& options = {});
InequalityReport check_log_minkowski(const Body& k, const Body& l,
                                     const CheckOptions& options = {});
// E(K,L) <= V(K) log(V(K,L) / V(K)); needs no positioning.
InequalityReport check_entropy_nd(const Body& k, const Body& l, const CheckOptions& options = {});
InequalityReport check_ball_entropy(const Body& k, const CheckOptions& options = {});
InequalityReport check_ball_entropy_combined(const Body& k, const CheckOptions& options = {});
InequalityReport check_jensen_chain(const Body& k, const Body& l,
                                    const CheckOptions& options = {});
// m == 0 selects 4n halfplanes.
InequalityReport check_log_bm(const Body& k, const Body& l, double lambda, int m = 0,
                              const CheckOptions& options = {});

// (cone-volume distance, max |h_K - h_L|).
std::pair<double, double> check_uniqueness_diagnostic(const Body& k, const Body& l);

}  // namespace logmink
