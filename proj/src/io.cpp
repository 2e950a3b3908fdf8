#include "logmink/io.hpp"

#include <fstream>
#include <sstream>

#include "logmink/errors.hpp"

namespace logmink::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw GeometryError(ErrorKind::ParseError, what);
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    parse_error(std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& a = j.at(key);
  if (!a.is_array()) parse_error(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const json& v : a) {
    if (!v.is_number()) parse_error(std::string("non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

Vector2 center_field(const json& j) {
  if (!j.contains("center")) return {};
  const std::vector<double> c = number_array(j, "center");
  if (c.size() != 2) parse_error("center must have two components");
  return {c[0], c[1]};
}

}  // namespace

Body body_from_json(const json& doc, std::optional<int> grid_override) {
  if (!doc.is_object()) parse_error("body document must be a JSON object");
  if (!doc.contains("repr") || !doc.at("repr").is_object()) parse_error("missing object 'repr'");
  const json& repr = doc.at("repr");
  if (!repr.contains("type") || !repr.at("type").is_string()) parse_error("missing 'repr.type'");
  const std::string type = repr.at("type").get<std::string>();
  const std::string name = doc.contains("name") && doc.at("name").is_string()
                               ? doc.at("name").get<std::string>()
                               : type;

  int grid_n = kDefaultGridSize;
  if (doc.contains("grid_n")) {
    if (!doc.at("grid_n").is_number_integer()) parse_error("grid_n must be an integer");
    grid_n = doc.at("grid_n").get<int>();
  }
  if (grid_override) grid_n = *grid_override;

  if (type == "trig") {
    TrigSeries series{number_field(repr, "a0"), number_array(repr, "cos"),
                      number_array(repr, "sin")};
    // Missing trailing coefficients are zero.
    const std::size_t k = std::max(series.cos_coeffs.size(), series.sin_coeffs.size());
    series.cos_coeffs.resize(k, 0.0);
    series.sin_coeffs.resize(k, 0.0);
    return from_trig(series, grid_n, name);
  }
  if (type == "samples") {
    if (!repr.contains("n") || !repr.at("n").is_number_integer()) parse_error("missing 'repr.n'");
    const int n = repr.at("n").get<int>();
    std::vector<double> values = number_array(repr, "values");
    if (static_cast<int>(values.size()) != n) {
      parse_error("repr.values has " + std::to_string(values.size()) + " entries, expected " +
                  std::to_string(n));
    }
    Body body(PeriodicSamples(AngleGrid(n), std::move(values)), name);
    const bool explicit_grid = grid_override.has_value() || doc.contains("grid_n");
    return explicit_grid ? body.resampled(grid_n) : body;
  }
  if (type == "disk") {
    return disk(number_field(repr, "radius"), center_field(repr), grid_n).renamed(name);
  }
  if (type == "ellipse") {
    return ellipse(number_field(repr, "a"), number_field(repr, "b"), center_field(repr), grid_n)
        .renamed(name);
  }
  parse_error("unknown repr.type '" + type + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error("'" + path + "': " + e.what());
  }
}

Body load_body(const std::string& path, std::optional<int> grid_override) {
  return body_from_json(read_json_file(path), grid_override);
}

json body_to_json(const Body& body) {
  json values = json::array();
  for (double v : body.h().values()) values.push_back(v);
  return {{"name", body.name()},
          {"repr", {{"type", "samples"}, {"n", body.size()}, {"values", values}}},
          {"grid_n", body.size()}};
}

void save_body(const std::string& path, const Body& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << body_to_json(body).dump(2) << '\n';
}

}  // namespace logmink::io
