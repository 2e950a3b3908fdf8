#include "logmink/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "logmink/body.hpp"
#include "logmink/errors.hpp"
#include "logmink/fuzz.hpp"
#include "logmink/inequality.hpp"
#include "logmink/io.hpp"
#include "logmink/measures.hpp"
#include "logmink/position.hpp"
#include "logmink/registry.hpp"

namespace logmink::cli {

namespace {

struct Common {
  std::optional<int> grid_n;
  std::optional<double> tol;
  std::int64_t seed = 0;
  bool seed_given = false;
};

int exit_for(const GeometryError& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return kUsage;
    case ErrorKind::NotConvex:
    case ErrorKind::OriginOutside:
      return kInvalidBody;
    default:
      return kComputation;
  }
}

std::string vec(Vector2 v) {
  return "(" + format_number(v.x) + "," + format_number(v.y) + ")";
}

std::string report_row(const InequalityReport& rep) {
  return rep.name + "," + format_number(rep.lhs) + "," + format_number(rep.rhs) + "," +
         format_number(rep.slack) + "," + (rep.holds ? "true" : "false") + "," +
         (rep.equality_case ? "true" : "false");
}

Body require_second(const std::optional<Body>& l, const std::string& quantity) {
  if (!l) {
    throw GeometryError(ErrorKind::InvalidArgument, quantity + " needs a second body file");
  }
  return *l;
}

int cmd_make_body(const std::string& spec, const std::string& out_path, const Common& common,
                  std::ostream& out) {
  const Body body = io::load_body(spec, common.grid_n);
  io::save_body(out_path, body);
  out << "wrote " << out_path << " (n=" << body.size() << ")\n";
  return kOk;
}

int cmd_compute(const std::string& quantity, const std::string& k_path,
                const std::optional<std::string>& l_path, const Common& common,
                std::ostream& out) {
  const Body k = io::load_body(k_path, common.grid_n);
  std::optional<Body> l;
  if (l_path) l = io::load_body(*l_path, common.grid_n);
  PositionOptions popt;
  popt.seed = static_cast<std::uint64_t>(common.seed);

  if (quantity == "volume") {
    out << format_number(volume(k)) << '\n';
  } else if (quantity == "surface") {
    out << format_number(surface_area(k)) << '\n';
  } else if (quantity == "mixed") {
    out << format_number(mixed_volume(k, require_second(l, quantity))) << '\n';
  } else if (quantity == "entropy") {
    out << format_number(curvature_entropy(k, require_second(l, quantity))) << '\n';
  } else if (quantity == "logmink") {
    out << format_number(log_minkowski_functional(k, require_second(l, quantity))) << '\n';
  } else if (quantity == "steiner") {
    const SteinerRoots s = steiner_roots(k, require_second(l, quantity));
    out << "t1=" << format_number(s.t1) << " t2=" << format_number(s.t2)
        << " disc=" << format_number(s.discriminant) << '\n';
  } else if (quantity == "conevol") {
    if (l) {
      out << format_number(cone_volume_distance(k, *l)) << '\n';
    } else {
      out << format_number(cone_volume(k).total) << '\n';
    }
  } else if (quantity == "inradius" || quantity == "outradius") {
    const Body other = require_second(l, quantity);
    const RadiusSolution s =
        quantity == "inradius" ? inradius(k, other, popt) : outradius(k, other, popt);
    out << format_number(s.value) << " witness=" << vec(s.witness) << '\n';
  } else {
    throw GeometryError(ErrorKind::InvalidArgument, "unknown quantity '" + quantity + "'");
  }
  return kOk;
}

int cmd_position(const std::string& k_path, const std::string& l_path, const std::string& out_l,
                 const std::optional<std::string>& out_k, const Common& common,
                 std::ostream& out, std::ostream& err) {
  const Body k = io::load_body(k_path, common.grid_n);
  const Body l = io::load_body(l_path, common.grid_n);
  PositionOptions popt;
  popt.seed = static_cast<std::uint64_t>(common.seed);
  if (common.tol) popt.tol_feas = *common.tol;
  try {
    const PositionedPair placed = dilation_position(k, l, popt);
    io::save_body(out_l, placed.l);
    if (out_k) io::save_body(*out_k, placed.k);
    const DilationReport& rep = placed.report;
    out << "r=" << format_number(rep.r) << " R=" << format_number(rep.R) << " v=" << vec(rep.v)
        << " k_shift=" << vec(rep.k_shift) << " max_violation=" << format_number(rep.max_violation)
        << " origin_margin=" << format_number(rep.origin_margin) << '\n';
    if (!out_k && (rep.k_shift.x != 0.0 || rep.k_shift.y != 0.0)) {
      err << "note: K must also be shifted by k_shift; pass --out-k to write it\n";
    }
    return kOk;
  } catch (const GeometryError& e) {
    err << e.what() << '\n';
    if (e.kind() == ErrorKind::OriginOutside) return kInvalidBody;
    if (e.kind() == ErrorKind::Infeasible || e.kind() == ErrorKind::SolverFailure) {
      return kPositioning;
    }
    throw;
  }
}

int cmd_verify(const std::string& check, const std::string& k_path,
               const std::optional<std::string>& l_path, bool position, double lambda, int m,
               const Common& common, std::ostream& out, std::ostream& err) {
  if (!is_registered_check(check)) {
    err << "unknown check '" << check << "'\n";
    return kUsage;
  }
  Body k = io::load_body(k_path, common.grid_n);
  Body l = k;
  if (!check_is_unary(check)) {
    if (!l_path) {
      err << check << " needs two body files\n";
      return kUsage;
    }
    l = io::load_body(*l_path, common.grid_n);
  }
  PositionOptions popt;
  popt.seed = static_cast<std::uint64_t>(common.seed);
  if (position && !check_is_unary(check)) {
    try {
      PositionedPair placed = dilation_position(k, l, popt);
      k = std::move(placed.k);
      l = std::move(placed.l);
    } catch (const GeometryError& e) {
      err << e.what() << '\n';
      return e.kind() == ErrorKind::OriginOutside ? kInvalidBody : kPositioning;
    }
  }
  CheckOptions options;
  if (common.tol) options.tol_slack = *common.tol;
  const InequalityReport rep = run_check(check, k, l, options, {lambda, m});
  out << report_row(rep) << '\n';
  return rep.holds ? kOk : kViolated;
}

int cmd_fuzz(const std::string& config_path, const std::string& out_csv, const Common& common,
             std::optional<int> threads, std::ostream& out, std::ostream& err) {
  FuzzConfig config = fuzz_config_from_json(io::read_json_file(config_path));
  if (common.seed_given) config.seed = common.seed;
  if (common.grid_n) config.grid_n = *common.grid_n;
  if (common.tol) config.tol_override = *common.tol;
  if (threads) config.threads = *threads;

  const FuzzResult result = run_fuzz(config);
  {
    std::ofstream csv(out_csv, std::ios::binary);
    if (!csv) throw GeometryError(ErrorKind::InvalidArgument, "cannot write '" + out_csv + "'");
    csv << to_csv(result.rows);
  }
  for (const auto& msg : result.messages) err << msg << '\n';
  out << "trials=" << result.trials << " positioning_failures=" << result.positioning_failures
      << " check_errors=" << result.check_errors
      << " fine_violation=" << format_number(result.max_fine_violation) << '\n';
  for (const auto& [name, s] : result.summary) {
    out << name << ": rows=" << s.rows << " min_slack=" << format_number(s.min_slack)
        << " equality_cases=" << s.equality_cases << " violations=" << s.violations << '\n';
  }
  return fuzz_exit_code(result);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature entropy and log-Minkowski inequalities for planar convex bodies",
               "logmink"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--grid-n", common.grid_n, "Resample every body onto this grid");
    sub->add_option("--tol", common.tol, "Tolerance override");
    sub->add_option("--seed", common.seed, "Seed")->each([&common](const std::string&) {
      common.seed_given = true;
    });
  };

  std::string spec_path, out_path;
  auto* make = app.add_subcommand("make-body", "Write a body definition in sampled form");
  make->add_option("spec", spec_path, "Body definition")->required();
  make->add_option("out", out_path, "Output file")->required();
  add_common(make);

  std::string quantity, k_path;
  std::optional<std::string> l_path;
  auto* compute = app.add_subcommand("compute", "Evaluate a functional");
  compute->add_option("quantity", quantity,
                      "volume|surface|mixed|entropy|logmink|steiner|conevol|inradius|outradius")
      ->required();
  compute->add_option("body", k_path, "Body K")->required();
  compute->add_option("body2", l_path, "Body L");
  add_common(compute);

  std::string out_l;
  std::optional<std::string> out_k;
  auto* position = app.add_subcommand("position", "Place K and L at a dilation position");
  position->add_option("bodyK", k_path)->required();
  position->add_option("bodyL", l_path)->required();
  position->add_option("out_L", out_l);
  position->add_option("--out", out_l, "Translated L");
  position->add_option("--out-k", out_k, "Translated K");
  add_common(position);

  std::string check;
  bool do_position = false;
  double lambda = 0.5;
  int halfplanes = 0;
  auto* verify = app.add_subcommand("verify", "Check one inequality and print a CSV row");
  verify->add_option("check", check, "Registered check name")->required();
  verify->add_option("bodyK", k_path)->required();
  verify->add_option("bodyL", l_path);
  verify->add_flag("--position", do_position, "Run dilation_position first");
  verify->add_option("--lambda", lambda, "log_bm combination weight");
  verify->add_option("--m", halfplanes, "log_bm halfplane count (default 4n)");
  add_common(verify);

  std::string config_path, csv_path;
  std::optional<int> threads;
  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded fuzz campaign");
  fuzz->add_option("config", config_path, "Fuzz config JSON")->required();
  fuzz->add_option("out_csv", csv_path);
  fuzz->add_option("--out", csv_path, "CSV report");
  fuzz->add_option("--threads", threads, "Worker threads");
  add_common(fuzz);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*make) return cmd_make_body(spec_path, out_path, common, out);
    if (*compute) return cmd_compute(quantity, k_path, l_path, common, out);
    if (*position) {
      if (out_l.empty()) {
        err << "position needs an output path for L\n";
        return kUsage;
      }
      return cmd_position(k_path, *l_path, out_l, out_k, common, out, err);
    }
    if (*verify) {
      return cmd_verify(check, k_path, l_path, do_position, lambda, halfplanes, common, out, err);
    }
    if (*fuzz) {
      if (csv_path.empty()) {
        err << "fuzz needs an output CSV path\n";
        return kUsage;
      }
      return cmd_fuzz(config_path, csv_path, common, threads, out, err);
    }
  } catch (const GeometryError& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}

}  // namespace logmink::cli
