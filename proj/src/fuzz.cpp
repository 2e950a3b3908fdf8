#include "logmink/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "logmink/body.hpp"
#include "logmink/errors.hpp"
#include "logmink/position.hpp"
#include "logmink/registry.hpp"

namespace logmink {

using nlohmann::json;

namespace {

template <typename T>
T get_or(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw GeometryError(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

struct TrialOutcome {
  std::vector<CsvRow> rows;
  bool positioning_failed = false;
  double fine_violation = 0.0;
  int check_errors = 0;
  std::vector<std::string> messages;
};

TrialOutcome run_trial(const FuzzConfig& config, int trial) {
  TrialOutcome out;
  const std::int64_t seed_k = config.seed + 2 * static_cast<std::int64_t>(trial);
  const std::int64_t seed_l = seed_k + 1;
  const RandomBodyParams params{config.harmonics, config.decay, config.margin, config.grid_n};
  const Body k = random_body(static_cast<std::uint64_t>(seed_k), params);
  const Body l = random_body(static_cast<std::uint64_t>(seed_l), params);

  CheckOptions options;
  if (config.tol_override) options.tol_slack = *config.tol_override;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  double r = nan;
  double big_r = nan;
  std::optional<PositionedPair> placed;
  try {
    placed = dilation_position(k, l);
    r = placed->report.r;
    big_r = placed->report.R;
    // Containment holds at the coarse nodes only; measure it between them.
    const int fine = 4 * config.grid_n;
    out.fine_violation = std::max(
        0.0, containment_violation(placed->k.resampled(fine), placed->l.resampled(fine), r, big_r));
  } catch (const GeometryError& e) {
    out.positioning_failed = true;
    out.messages.push_back("trial " + std::to_string(trial) + ": positioning: " + e.what());
    try {
      r = inradius(k, l).value;
      big_r = outradius(k, l).value;
    } catch (const GeometryError&) {
    }
  }

  for (const std::string& name : config.checks) {
    const bool positioned = check_requires_position(name);
    if (positioned && !placed) continue;
    const Body& kk = positioned ? placed->k : k;
    const Body& ll = positioned ? placed->l : l;
    try {
      const InequalityReport rep = run_check(name, kk, ll, options);
      out.rows.push_back({trial, name, rep.lhs, rep.rhs, rep.slack, rep.holds, rep.equality_case,
                          r, big_r, seed_k, seed_l});
    } catch (const GeometryError& e) {
      ++out.check_errors;
      out.messages.push_back("trial " + std::to_string(trial) + ": " + name + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

FuzzConfig fuzz_config_from_json(const json& doc) {
  if (!doc.is_object()) throw GeometryError(ErrorKind::ParseError, "fuzz config must be an object");
  FuzzConfig c;
  c.trials = get_or(doc, "trials", c.trials);
  c.seed = get_or(doc, "seed", c.seed);
  c.grid_n = get_or(doc, "grid_n", c.grid_n);
  c.harmonics = get_or(doc, "harmonics", get_or(doc, "K", c.harmonics));
  c.decay = get_or(doc, "decay", c.decay);
  c.margin = get_or(doc, "margin", c.margin);
  c.checks = get_or(doc, "checks", c.checks);
  c.threads = get_or(doc, "threads", c.threads);
  if (doc.contains("tol_override") && !doc.at("tol_override").is_null()) {
    c.tol_override = get_or(doc, "tol_override", 0.0);
  }
  if (c.trials < 1) throw GeometryError(ErrorKind::ParseError, "trials must be >= 1");
  if (c.checks.empty()) throw GeometryError(ErrorKind::ParseError, "checks must be non-empty");
  for (const auto& name : c.checks) {
    if (!is_registered_check(name)) {
      throw GeometryError(ErrorKind::ParseError, "unknown check '" + name + "'");
    }
  }
  if (c.grid_n < 8 || c.grid_n % 2 != 0) {
    throw GeometryError(ErrorKind::ParseError, "grid_n must be even and >= 8");
  }
  if (!(c.decay > 1.0)) throw GeometryError(ErrorKind::ParseError, "decay must exceed 1");
  if (!(c.margin > 0.0 && c.margin < 1.0)) {
    throw GeometryError(ErrorKind::ParseError, "margin must lie in (0, 1)");
  }
  return c;
}

FuzzResult run_fuzz(const FuzzConfig& config) {
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, config.trials);

  std::atomic<int> next{0};
  auto work = [&] {
    for (int t = next++; t < config.trials; t = next++) outcomes[t] = run_trial(config, t);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  FuzzResult result;
  result.trials = config.trials;
  for (const std::string& name : config.checks) result.summary[name];
  for (auto& o : outcomes) {
    result.positioning_failures += o.positioning_failed ? 1 : 0;
    result.check_errors += o.check_errors;
    result.max_fine_violation = std::max(result.max_fine_violation, o.fine_violation);
    for (auto& m : o.messages) result.messages.push_back(std::move(m));
    for (auto& row : o.rows) {
      CheckSummary& s = result.summary[row.check];
      s.min_slack = s.rows == 0 ? row.slack : std::min(s.min_slack, row.slack);
      ++s.rows;
      s.equality_cases += row.equality_case ? 1 : 0;
      s.violations += row.holds ? 0 : 1;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const CsvRow& r : rows) {
    os << r.trial << ',' << r.check << ',' << format_number(r.lhs) << ','
       << format_number(r.rhs) << ',' << format_number(r.slack) << ','
       << (r.holds ? "true" : "false") << ',' << (r.equality_case ? "true" : "false") << ','
       << format_number(r.r) << ',' << format_number(r.R) << ',' << r.seed_k << ',' << r.seed_l
       << '\n';
  }
  return os.str();
}

int fuzz_exit_code(const FuzzResult& result) {
  if (100 * result.positioning_failures > result.trials) return 5;
  if (result.check_errors > 0) return 4;
  for (const auto& [name, s] : result.summary) {
    if (s.violations > 0) return 6;
  }
  return 0;
}

}  // namespace logmink
