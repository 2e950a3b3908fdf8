#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "logmink/body.hpp"

namespace logmink::io {

// Body-definition documents:
//   {"name": str, "grid_n": int (optional, default 256),
//    "repr": {"type": "trig", "a0": x, "cos": [..], "sin": [..]}
//          | {"type": "samples", "n": int, "values": [..]}
//          | {"type": "disk", "radius": x, "center": [x, y]}
//          | {"type": "ellipse", "a": x, "b": x, "center": [x, y]}}
// grid_override, when set, takes precedence over grid_n.
Body body_from_json(const nlohmann::json& doc, std::optional<int> grid_override = std::nullopt);
Body load_body(const std::string& path, std::optional<int> grid_override = std::nullopt);

// Canonical sampled form.
nlohmann::json body_to_json(const Body& body);
void save_body(const std::string& path, const Body& body);

nlohmann::json read_json_file(const std::string& path);

}  // namespace logmink::io
