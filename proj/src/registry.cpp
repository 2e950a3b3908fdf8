#include "logmink/registry.hpp"

#include <algorithm>

#include "logmink/errors.hpp"

namespace logmink {

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names{
      "entropy",        "logmink",           "green_osher:neglog",
      "green_osher:sq", "green_osher:xlogx", "green_osher:inv",
      "entropy_nd",     "jensen",            "log_bm",
      "ball_entropy",   "ball_entropy_combined"};
  return names;
}

bool is_registered_check(const std::string& name) {
  const auto& names = registered_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool check_requires_position(const std::string& name) {
  return name == "entropy" || name == "logmink" || name == "log_bm" ||
         name.starts_with("green_osher:");
}

bool check_is_unary(const std::string& name) { return name.starts_with("ball_entropy"); }

InequalityReport run_check(const std::string& name, const Body& k, const Body& l,
                           const CheckOptions& options, const CheckParams& params) {
  if (name == "entropy") return check_entropy_inequality(k, l, options);
  if (name == "logmink") return check_log_minkowski(k, l, options);
  if (name == "entropy_nd") return check_entropy_nd(k, l, options);
  if (name == "jensen") return check_jensen_chain(k, l, options);
  if (name == "log_bm") return check_log_bm(k, l, params.lambda, params.m, options);
  if (name == "ball_entropy") return check_ball_entropy(k, options);
  if (name == "ball_entropy_combined") return check_ball_entropy_combined(k, options);
  if (name.starts_with("green_osher:") && is_registered_check(name)) {
    return green_osher(k, l, ConvexTestFunction::by_name(name.substr(12)), options);
  }
  throw GeometryError(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
}

}  // namespace logmink
