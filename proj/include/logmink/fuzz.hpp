#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace logmink {

struct FuzzConfig {
  int trials = 1;
  std::int64_t seed = 0;
  int grid_n = 256;
  int harmonics = 8;
  double decay = 2.0;
  double margin = 0.2;
  std::vector<std::string> checks;
  std::optional<double> tol_override;  // replaces the relative slack tolerance
  int threads = 0;                     // 0 = hardware concurrency
};

FuzzConfig fuzz_config_from_json(const nlohmann::json& doc);

struct CsvRow {
  int trial;
  std::string check;
  double lhs;
  double rhs;
  double slack;
  bool holds;
  bool equality_case;
  double r;
  double R;
  std::int64_t seed_k;
  std::int64_t seed_l;
};

struct CheckSummary {
  double min_slack = 0.0;
  int rows = 0;
  int equality_cases = 0;
  int violations = 0;
};

struct FuzzResult {
  std::vector<CsvRow> rows;
  std::map<std::string, CheckSummary> summary;
  int trials = 0;
  int positioning_failures = 0;
  int check_errors = 0;
  // Worst containment violation of the positioned pairs on a 4x finer grid.
  double max_fine_violation = 0.0;
  std::vector<std::string> messages;  // one per failure, in trial order
};

// Trial t draws K from seed + 2t and L from seed + 2t + 1, places them at a
// dilation position and runs every configured check. Checks that need no
// positioning run on the pair as drawn. Trials run in parallel; rows come
// back in (trial, check) order. Every placement is also re-validated on a
// grid four times finer.
FuzzResult run_fuzz(const FuzzConfig& config);

inline constexpr const char* kCsvHeader =
    "trial,check,lhs,rhs,slack,holds,equality_case,r,R,seed_K,seed_L";

std::string format_number(double x);  // 12 significant digits
std::string to_csv(const std::vector<CsvRow>& rows);

// 0 ok, 4 check errors, 5 positioning failures above 1% of trials, 6 violations.
int fuzz_exit_code(const FuzzResult& result);

}  // namespace logmink
