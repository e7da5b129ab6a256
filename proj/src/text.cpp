#include "simion/text.hpp"

#include <charconv>
#include <vector>

#include "simion/error.hpp"

namespace simion {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

long long parse_integer(std::string_view token, std::string_view what) {
  token = trim(token);
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed " + std::string(what) + " '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s.remove_prefix(at + 1);
  }
  return out;
}

}  // namespace

Shape parse_shape(std::string_view text) {
  text = trim(text);
  if (text.empty()) return Shape{};
  std::vector<long long> parts;
  for (auto token : split(text, ',')) {
    parts.push_back(parse_integer(token, "shape part"));
  }
  return make_shape(parts);
}

std::string format_shape(const Shape& shape) {
  if (shape.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape.parts()[i]);
  }
  return out;
}

Point parse_point(std::string_view text) {
  const auto fields = split(trim(text), ',');
  if (fields.size() != 2) {
    throw ParseError("malformed vertex '" + std::string(text) +
                     "', expected r,c");
  }
  const long long row = parse_integer(fields[0], "row");
  const long long col = parse_integer(fields[1], "column");
  if (row < 0 || col < 0) {
    throw ParseError("vertex '" + std::string(text) + "' is off the grid");
  }
  return {static_cast<int>(row), static_cast<int>(col)};
}

Path parse_path(std::string_view text) {
  text = trim(text);
  const auto close = text.find(')');
  if (text.empty() || text.front() != '(' || close == std::string_view::npos ||
      text.substr(close + 1, 1) != ":") {
    throw ParseError("malformed path '" + std::string(text) +
                     "', expected (r,c):STEPS");
  }
  const Point start = parse_point(text.substr(1, close - 1));
  return Path(start, trim(text.substr(close + 2)));
}

std::string format_path(const Path& path) {
  return "(" + std::to_string(path.start().row) + "," +
         std::to_string(path.start().col) + "):" + path.steps();
}

nlohmann::json path_to_json(const Path& path) {
  return {{"start", {path.start().row, path.start().col}},
          {"steps", path.steps()}};
}

Path path_from_json(const nlohmann::json& value) {
  try {
    const auto& start = value.at("start");
    if (!start.is_array() || start.size() != 2) {
      throw ParseError("path start must be [row, col]");
    }
    return Path({start[0].get<int>(), start[1].get<int>()},
                value.at("steps").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed path JSON: ") + e.what());
  }
}

}  // namespace simion
