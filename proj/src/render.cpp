#include "simion/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simion {

namespace {

constexpr const char* kPathColors[] = {"#1f4e9c", "#c0392b"};

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  if (spec.paths.empty() || spec.paths.size() > 2) {
    throw std::invalid_argument("render takes one or two paths");
  }
  if (spec.scale < 4) throw std::invalid_argument("scale must be at least 4");
  for (Point mark : spec.marks) {
    const bool on_path = std::any_of(
        spec.paths.begin(), spec.paths.end(), [&](const Path& path) {
          const auto vs = path.vertices();
          return std::find(vs.begin(), vs.end(), mark) != vs.end();
        });
    if (!on_path) {
      throw std::invalid_argument("mark (" + std::to_string(mark.row) + "," +
                                  std::to_string(mark.col) +
                                  ") is not on any path");
    }
  }

  int max_row = static_cast<int>(spec.shape.rows());
  int max_col = spec.shape.width();
  for (const Path& path : spec.paths) {
    for (Point v : path.vertices()) {
      max_row = std::max(max_row, v.row);
      max_col = std::max(max_col, v.col);
    }
  }
  max_row = std::max(max_row, 1);
  max_col = std::max(max_col, 1);

  const int s = spec.scale;
  const int pad = s / 2;
  auto x = [&](int col) { return pad + col * s; };
  auto y = [&](int row) { return pad + row * s; };
  const int width = max_col * s + 2 * pad;
  const int height = max_row * s + 2 * pad;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n"
      << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  svg << "  <g class=\"shape\" fill=\"#bbbbbb\" stroke=\"#777777\">\n";
  for (std::size_t r = 1; r <= spec.shape.rows(); ++r) {
    for (int c = 1; c <= spec.shape.part(r); ++c) {
      svg << "    <rect x=\"" << x(c - 1) << "\" y=\""
          << y(static_cast<int>(r) - 1) << "\" width=\"" << s
          << "\" height=\"" << s << "\"/>\n";
    }
  }
  svg << "  </g>\n";

  svg << "  <g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int row = 0; row <= max_row; ++row) {
    svg << "    <line x1=\"" << x(0) << "\" y1=\"" << y(row) << "\" x2=\""
        << x(max_col) << "\" y2=\"" << y(row) << "\"/>\n";
  }
  for (int col = 0; col <= max_col; ++col) {
    svg << "    <line x1=\"" << x(col) << "\" y1=\"" << y(0) << "\" x2=\""
        << x(col) << "\" y2=\"" << y(max_row) << "\"/>\n";
  }
  svg << "  </g>\n";

  for (std::size_t k = 0; k < spec.paths.size(); ++k) {
    svg << "  <polyline class=\"path\" fill=\"none\" stroke=\""
        << kPathColors[k] << "\" stroke-width=\"" << std::max(2, s / 12)
        << "\"" << (k == 1 ? " stroke-dasharray=\"6 4\"" : "")
        << " points=\"";
    bool first = true;
    for (Point v : spec.paths[k].vertices()) {
      svg << (first ? "" : " ") << x(v.col) << ',' << y(v.row);
      first = false;
    }
    svg << "\"/>\n";
  }

  for (Point mark : spec.marks) {
    svg << "  <circle class=\"cut\" cx=\"" << x(mark.col) << "\" cy=\""
        << y(mark.row) << "\" r=\"" << std::max(3, s / 8)
        << "\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace simion
