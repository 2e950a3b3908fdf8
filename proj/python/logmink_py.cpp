#include <pybind11/functional.h>
#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "logmink/body.hpp"
#include "logmink/errors.hpp"
#include "logmink/fuzz.hpp"
#include "logmink/inequality.hpp"
#include "logmink/io.hpp"
#include "logmink/measures.hpp"
#include "logmink/position.hpp"
#include "logmink/registry.hpp"

namespace py = pybind11;
using namespace logmink;

namespace {

std::vector<double> to_list(const PeriodicSamples& s) {
  return {s.values().begin(), s.values().end()};
}

Vector2 to_vec(const std::pair<double, double>& p) { return {p.first, p.second}; }

py::tuple from_vec(Vector2 v) { return py::make_tuple(v.x, v.y); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar convex bodies by support function, mixed volumes and entropy inequalities";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&m]() {
    return py::exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      const py::object& type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("kind") = std::string(e.name());
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Body>(m, "Body")
      .def(py::init([](std::vector<double> h, std::string name, double margin) {
             const AngleGrid grid(static_cast<int>(h.size()));
             return Body(PeriodicSamples(grid, std::move(h)), std::move(name), margin);
           }),
           py::arg("h"), py::arg("name") = "", py::arg("convexity_margin") = kDefaultConvexityMargin)
      .def_property_readonly("h", [](const Body& b) { return to_list(b.h()); })
      .def_property_readonly("f", [](const Body& b) { return to_list(b.f()); })
      .def_property_readonly("size", &Body::size)
      .def_property_readonly("name", &Body::name)
      .def("resampled", &Body::resampled, py::arg("n"))
      .def("__repr__", [](const Body& b) {
        return "<Body '" + b.name() + "' n=" + std::to_string(b.size()) + ">";
      });

  m.def("disk", [](double r, std::pair<double, double> c, int n) { return disk(r, to_vec(c), n); },
        py::arg("radius"), py::arg("center") = std::make_pair(0.0, 0.0),
        py::arg("n") = kDefaultGridSize);
  m.def("ellipse",
        [](double a, double b, std::pair<double, double> c, int n) {
          return ellipse(a, b, to_vec(c), n);
        },
        py::arg("a"), py::arg("b"), py::arg("center") = std::make_pair(0.0, 0.0),
        py::arg("n") = kDefaultGridSize);
  m.def("from_trig",
        [](double a0, std::vector<double> cos_c, std::vector<double> sin_c, int n) {
          const std::size_t k = std::max(cos_c.size(), sin_c.size());
          cos_c.resize(k, 0.0);
          sin_c.resize(k, 0.0);
          return from_trig({a0, std::move(cos_c), std::move(sin_c)}, n);
        },
        py::arg("a0"), py::arg("cos") = std::vector<double>{},
        py::arg("sin") = std::vector<double>{}, py::arg("n") = kDefaultGridSize);
  m.def("random_body",
        [](std::uint64_t seed, int harmonics, double decay, double margin, int n) {
          return random_body(seed, {harmonics, decay, margin, n});
        },
        py::arg("seed"), py::arg("harmonics") = 8, py::arg("decay") = 2.0,
        py::arg("margin") = 0.2, py::arg("n") = kDefaultGridSize);
  m.def("translate", [](const Body& b, std::pair<double, double> v) { return translate(b, to_vec(v)); },
        py::arg("body"), py::arg("v"));
  m.def("scale", &scale, py::arg("body"), py::arg("t"));
  m.def("minkowski_sum", &minkowski_sum);
  m.def("load_body", [](const std::string& path) { return io::load_body(path); });
  m.def("save_body", &io::save_body, py::arg("path"), py::arg("body"));

  m.def("volume", &volume);
  m.def("surface_area", &surface_area);
  m.def("mixed_volume", &mixed_volume);
  m.def("cone_volume", [](const Body& k) { return to_list(cone_volume(k).density); });
  m.def("steiner_roots", [](const Body& k, const Body& l) {
    const SteinerRoots s = steiner_roots(k, l);
    return py::make_tuple(s.t1, s.t2, s.discriminant);
  });
  m.def("curvature_entropy", &curvature_entropy);
  m.def("log_minkowski_functional", &log_minkowski_functional);
  m.def("homothety_detect", [](const Body& k, const Body& l, double tol) {
    const HomothetyFit fit = homothety_detect(k, l, tol);
    py::dict d;
    d["homothetic"] = fit.homothetic;
    d["t"] = fit.t;
    d["v"] = from_vec(fit.v);
    d["max_residual"] = fit.max_residual;
    return d;
  }, py::arg("k"), py::arg("l"), py::arg("tol") = 1e-6);

  m.def("inradius", [](const Body& k, const Body& l) {
    const RadiusSolution s = inradius(k, l);
    return py::make_tuple(s.value, from_vec(s.witness));
  });
  m.def("outradius", [](const Body& k, const Body& l) {
    const RadiusSolution s = outradius(k, l);
    return py::make_tuple(s.value, from_vec(s.witness));
  });
  m.def("dilation_position", [](const Body& k, const Body& l, std::uint64_t seed) {
    PositionOptions opt;
    opt.seed = seed;
    PositionedPair p = dilation_position(k, l, opt);
    py::dict report;
    report["r"] = p.report.r;
    report["R"] = p.report.R;
    report["v"] = from_vec(p.report.v);
    report["k_shift"] = from_vec(p.report.k_shift);
    report["max_violation"] = p.report.max_violation;
    report["origin_margin"] = p.report.origin_margin;
    return py::make_tuple(std::move(p.k), std::move(p.l), report);
  }, py::arg("k"), py::arg("l"), py::arg("seed") = 0);
  m.def("is_dilation_position",
        [](const Body& k, const Body& l, double tol) { return is_dilation_position(k, l, tol); },
        py::arg("k"), py::arg("l"), py::arg("tol") = 1e-8);

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("name", &InequalityReport::name)
      .def_readonly("lhs", &InequalityReport::lhs)
      .def_readonly("rhs", &InequalityReport::rhs)
      .def_readonly("slack", &InequalityReport::slack)
      .def_readonly("holds", &InequalityReport::holds)
      .def_readonly("equality_case", &InequalityReport::equality_case)
      .def("__repr__", [](const InequalityReport& r) {
        return "<InequalityReport " + r.name + " slack=" + format_number(r.slack) +
               (r.holds ? " holds" : " violated") + ">";
      });

  m.def("registered_checks", &registered_checks);
  m.def("check",
        [](const std::string& name, const Body& k, std::optional<Body> l, double lambda, int m_half,
           bool require_position, double tol_slack) {
          CheckOptions options;
          options.require_position = require_position;
          options.tol_slack = tol_slack;
          return run_check(name, k, l ? *l : k, options, {lambda, m_half});
        },
        py::arg("name"), py::arg("k"), py::arg("l") = py::none(), py::arg("lam") = 0.5,
        py::arg("m") = 0, py::arg("require_position") = true, py::arg("tol_slack") = 1e-8);
  m.def("green_osher",
        [](const Body& k, const Body& l, std::function<double(double)> fn, double lo, double hi) {
          return green_osher(k, l, ConvexTestFunction("custom", std::move(fn), lo, hi));
        },
        py::arg("k"), py::arg("l"), py::arg("fn"), py::arg("lo") = 0.0,
        py::arg("hi") = std::numeric_limits<double>::infinity());

  m.def("fuzz",
        [](const std::string& config_json) {
          const FuzzResult r = run_fuzz(fuzz_config_from_json(nlohmann::json::parse(config_json)));
          py::dict summary;
          for (const auto& [name, s] : r.summary) {
            py::dict d;
            d["rows"] = s.rows;
            d["min_slack"] = s.min_slack;
            d["equality_cases"] = s.equality_cases;
            d["violations"] = s.violations;
            summary[py::str(name)] = d;
          }
          py::dict out;
          out["csv"] = to_csv(r.rows);
          out["summary"] = summary;
          out["trials"] = r.trials;
          out["positioning_failures"] = r.positioning_failures;
          out["check_errors"] = r.check_errors;
          out["max_fine_violation"] = r.max_fine_violation;
          out["exit_code"] = fuzz_exit_code(r);
          return out;
        },
        py::arg("config_json"));
}
