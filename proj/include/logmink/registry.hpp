#pragma once

#include <string>
#include <vector>

#include "logmink/body.hpp"
#include "logmink/inequality.hpp"

namespace logmink {

// Named checkers shared by the CLI, the fuzz harness and the bindings:
//   entropy, logmink, green_osher:{neglog,sq,xlogx,inv}, entropy_nd, jensen,
//   log_bm, ball_entropy, ball_entropy_combined
const std::vector<std::string>& registered_checks();
bool is_registered_check(const std::string& name);
bool check_requires_position(const std::string& name);
// Checks of a single body ignore L.
bool check_is_unary(const std::string& name);

struct CheckParams {
  double lambda = 0.5;  // log_bm only
  int m = 0;            // log_bm halfplanes, 0 = 4n
};

InequalityReport run_check(const std::string& name, const Body& k, const Body& l,
                           const CheckOptions& options = {}, const CheckParams& params = {});

}  // namespace logmink
