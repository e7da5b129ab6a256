#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "simion/path.hpp"
#include "simion/shape.hpp"

namespace simion {

// "2,1" -> (2,1); "" and "0" -> empty shape. Throws ParseError.
Shape parse_shape(std::string_view text);
// Inverse of parse_shape; the empty shape prints as "0".
std::string format_shape(const Shape& shape);

// "(r,c):NENE" -> Path. Throws ParseError.
Path parse_path(std::string_view text);
std::string format_path(const Path& path);

// "r,c" -> Point. Throws ParseError.
Point parse_point(std::string_view text);

// {"start": [row, col], "steps": "NENE"}
nlohmann::json path_to_json(const Path& path);
Path path_from_json(const nlohmann::json& value);

}  // namespace simion
