#include "logmink/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logmink/errors.hpp"
#include "logmink/measures.hpp"

namespace logmink {

namespace {

constexpr double kPi = std::numbers::pi;

double volume_scale(const Body& k) { return std::max(1.0, volume(k)); }

InequalityReport make_report(std::string name, double lhs, double rhs, bool less_equal,
                             double scale, const CheckOptions& options, bool homothetic) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = less_equal ? rhs - lhs : lhs - rhs;
  rep.holds = rep.slack >= -options.tol_slack * scale;
  rep.equality_case = std::abs(rep.slack) <= options.tol_eq * scale && homothetic;
  return rep;
}

void require_position(const Body& k, const Body& l, const CheckOptions& options,
                      const char* check) {
  if (!options.require_position) return;
  if (!is_dilation_position(k, l, options.position_tol)) {
    throw GeometryError(ErrorKind::NotDilationPosition,
                        std::string(check) + " requires K and L at a dilation position");
  }
}

bool homothetic(const Body& k, const Body& l, const CheckOptions& options) {
  return homothety_detect(k, l, options.homothety_tol).homothetic;
}

}  // namespace

ConvexTestFunction::ConvexTestFunction(std::string name, std::function<double(double)> eval,
                                       double lo, double hi)
    : name_(std::move(name)), eval_(std::move(eval)), lo_(lo), hi_(hi) {
  // Divided second differences on a log-spaced probe grid must be positive.
  std::vector<double> probes;
  for (int i = -120; i <= 120; ++i) {
    const double x = std::pow(10.0, i / 40.0);
    if (in_domain(x)) probes.push_back(x);
  }
  if (probes.size() < 3) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "no probe points inside the domain of " + name_);
  }
  for (std::size_t i = 1; i + 1 < probes.size(); ++i) {
    const double x0 = probes[i - 1], x1 = probes[i], x2 = probes[i + 1];
    const double s0 = (eval_(x1) - eval_(x0)) / (x1 - x0);
    const double s1 = (eval_(x2) - eval_(x1)) / (x2 - x1);
    if (!(s1 - s0 > 0.0)) {
      throw GeometryError(ErrorKind::InvalidArgument,
                          name_ + " is not strictly convex near x = " + std::to_string(x1));
    }
  }
}

ConvexTestFunction ConvexTestFunction::neg_log() {
  return {"neglog", [](double x) { return -std::log(x); }};
}
ConvexTestFunction ConvexTestFunction::square() {
  return {"sq", [](double x) { return x * x; }};
}
ConvexTestFunction ConvexTestFunction::x_log_x() {
  return {"xlogx", [](double x) { return x * std::log(x); }};
}
ConvexTestFunction ConvexTestFunction::inverse() {
  return {"inv", [](double x) { return 1.0 / x; }};
}

ConvexTestFunction ConvexTestFunction::by_name(const std::string& name) {
  if (name == "neglog") return neg_log();
  if (name == "sq") return square();
  if (name == "xlogx") return x_log_x();
  if (name == "inv") return inverse();
  throw GeometryError(ErrorKind::InvalidArgument, "unknown test function '" + name + "'");
}

double curvature_entropy(const Body& k_in, const Body& l_in) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const PeriodicSamples log_ratio = k.f().zip(l.f(), [](double fk, double fl) {
    return std::log(fk / fl);
  });
  return -integrate(log_ratio * cone_volume(k).density);
}

double log_minkowski_functional(const Body& k_in, const Body& l_in) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const PeriodicSamples log_ratio = l.h().zip(k.h(), [](double hl, double hk) {
    return std::log(hl / hk);
  });
  return integrate(log_ratio * cone_volume(k).density);
}

InequalityReport green_osher(const Body& k_in, const Body& l_in, const ConvexTestFunction& fn,
                             const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  require_position(k, l, options, "green_osher");
  const PeriodicSamples rho = relative_curvature_radius(k, l);
  for (int j = 0; j < rho.size(); ++j) {
    if (!fn.in_domain(rho[j])) {
      throw GeometryError(ErrorKind::DomainError,
                          "rho = " + std::to_string(rho[j]) + " outside the domain of " + fn.name());
    }
  }
  const SteinerRoots roots = steiner_roots(k, l);
  if (!fn.in_domain(-roots.t1) || !fn.in_domain(-roots.t2)) {
    throw GeometryError(ErrorKind::DomainError, "Steiner roots outside the domain of " + fn.name());
  }
  const PeriodicSamples weight = l.h() * l.f();
  const double lhs = integrate(rho.map([&fn](double x) { return fn(x); }) * weight) / volume(l);
  const double rhs = fn(-roots.t1) + fn(-roots.t2);
  return make_report("green_osher:" + fn.name(), lhs, rhs, false, volume_scale(k), options,
                     homothetic(k, l, options));
}

InequalityReport check_entropy_inequality(const Body& k_in, const Body& l_in,
                                          const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  require_position(k, l, options, "entropy");
  const double vk = volume(k);
  const double lhs = curvature_entropy(k, l);
  const double rhs = 0.5 * vk * std::log(volume(l) / vk);
  return make_report("entropy", lhs, rhs, true, volume_scale(k), options,
                     homothetic(k, l, options));
}

InequalityReport check_log_minkowski(const Body& k_in, const Body& l_in,
                                     const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  require_position(k, l, options, "logmink");
  const double vk = volume(k);
  const double lhs = log_minkowski_functional(k, l);
  const double rhs = 0.5 * vk * std::log(volume(l) / vk);
  return make_report("logmink", lhs, rhs, false, volume_scale(k), options,
                     homothetic(k, l, options));
}

InequalityReport check_entropy_nd(const Body& k_in, const Body& l_in,
                                  const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const double vk = volume(k);
  const double lhs = curvature_entropy(k, l);
  const double rhs = vk * std::log(mixed_volume(l, k) / vk);
  return make_report("entropy_nd", lhs, rhs, true, volume_scale(k), options,
                     homothetic(k, l, options));
}

InequalityReport check_ball_entropy(const Body& k, const CheckOptions& options) {
  // kappa log kappa ds = -log f dtheta since kappa f = 1 and ds = f dtheta.
  const double lhs =
      integrate(k.f().map([](double f) { return -std::log(f); })) + kPi * std::log(volume(k) / kPi);
  const Body ball = disk(1.0, {}, k.size());
  return make_report("ball_entropy", lhs, 0.0, false, volume_scale(k), options,
                     homothetic(k, ball, options));
}

InequalityReport check_ball_entropy_combined(const Body& k, const CheckOptions& options) {
  const double root = std::sqrt(volume(k) / kPi);
  const PeriodicSamples kappa = curvature(k);
  const PeriodicSamples integrand =
      kappa.zip(k.f(), [root](double kap, double f) { return kap * std::log(kap * root) * f; });
  const double lhs = integrate(integrand);
  const Body ball = disk(1.0, {}, k.size());
  return make_report("ball_entropy_combined", lhs, 0.0, false, volume_scale(k), options,
                     homothetic(k, ball, options));
}

InequalityReport check_jensen_chain(const Body& k_in, const Body& l_in,
                                    const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const double vk = volume(k);
  const double lhs = log_minkowski_functional(k, l) + curvature_entropy(k, l);
  const double rhs = vk * std::log(volume(l) / vk);
  return make_report("jensen", lhs, rhs, true, volume_scale(k), options,
                     homothetic(k, l, options));
}

InequalityReport check_log_bm(const Body& k_in, const Body& l_in, double lambda, int m,
                              const CheckOptions& options) {
  auto [k, l] = on_common_grid(k_in, l_in);
  require_position(k, l, options, "log_bm");
  if (m == 0) m = 4 * k.size();
  const double lhs = polygon_volume(log_combination(k, l, lambda, m));
  const double rhs = std::pow(volume(k), 1.0 - lambda) * std::pow(volume(l), lambda);

  // The circumscribed m-gon exceeds the smooth Wulff body by about
  // (dtheta^2 / 24) * integral of f_w^2; equality detection allows for it.
  const PeriodicSamples w = k.h().zip(l.h(), [lambda](double a, double b) {
    return std::pow(a, 1.0 - lambda) * std::pow(b, lambda);
  });
  const PeriodicSamples fw = (w + fourier_derivatives(w).second).map([](double x) {
    return std::max(x, 0.0);
  });
  const double dtheta = kTwoPi / m;
  const double excess = dtheta * dtheta / 24.0 * integrate(fw * fw);

  InequalityReport rep = make_report("log_bm", lhs, rhs, false, volume_scale(k), options,
                                     homothetic(k, l, options));
  rep.equality_case = std::abs(rep.slack) <= options.tol_eq * volume_scale(k) + 2.0 * excess &&
                      homothetic(k, l, options);
  return rep;
}

std::pair<double, double> check_uniqueness_diagnostic(const Body& k_in, const Body& l_in) {
  auto [k, l] = on_common_grid(k_in, l_in);
  const double support = (k.h() - l.h()).map([](double x) { return std::abs(x); }).max();
  return {cone_volume_distance(k, l), support};
}

}  // namespace logmink
