#include "simion/path.hpp"

#include <stdexcept>
#include <string>

#include "simion/error.hpp"

namespace simion {

Path::Path(Point start, std::string_view steps) : steps_(steps) {
  if (start.row < 0 || start.col < 0) {
    throw ParseError("start vertex has a negative coordinate");
  }
  vertices_.reserve(steps_.size() + 1);
  vertices_.push_back(start);
  Point at = start;
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    switch (steps_[t]) {
      case 'N':
        --at.row;
        break;
      case 'E':
        ++at.col;
        break;
      default:
        throw ParseError("illegal step '" + std::string(1, steps_[t]) +
                         "' at index " + std::to_string(t + 1));
    }
    if (at.row < 0) {
      throw ParseError("row would go negative at step " +
                       std::to_string(t + 1));
    }
    vertices_.push_back(at);
  }
}

Path Path::prefix(std::size_t t) const {
  if (t > length()) throw std::out_of_range("prefix beyond path end");
  return Path(start(), std::string_view(steps_).substr(0, t));
}

Path Path::suffix(std::size_t t) const {
  if (t > length()) throw std::out_of_range("suffix beyond path end");
  return Path(vertices_[t], std::string_view(steps_).substr(t));
}

Path concat(const Path& head, const Path& tail) {
  if (head.end() != tail.start()) {
    throw std::logic_error("concatenation junction mismatch");
  }
  return Path(head.start(), head.steps() + tail.steps());
}

Path shift(const Path& path, Direction direction, int amount) {
  Point start = path.start();
  switch (direction) {
    case Direction::North:
      start.row -= amount;
      break;
    case Direction::South:
      start.row += amount;
      break;
    case Direction::East:
      start.col += amount;
      break;
    case Direction::West:
      start.col -= amount;
      break;
  }
  if (start.row < 0 || start.col < 0) {
    throw std::out_of_range("shift moves the path off the grid");
  }
  try {
    return Path(start, path.steps());
  } catch (const ParseError&) {
    throw std::out_of_range("shift moves the path off the grid");
  }
}

bool is_valid_path(const Shape& shape, const Path& path) {
  for (Point v : path.vertices()) {
    if (!vertex_allowed(shape, v)) return false;
  }
  return true;
}

std::vector<ColumnInterval> column_intervals(const Path& path) {
  std::vector<ColumnInterval> out;
  const auto vertices = path.vertices();
  const int first_col = path.start().col;
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    const Point v = vertices[t];
    const auto c = static_cast<std::size_t>(v.col - first_col);
    if (c == out.size()) {
      out.push_back({v.row, v.row, t});
    } else {
      out[c].exit_row = v.row;
    }
  }
  return out;
}

std::vector<RowInterval> row_intervals(const Path& path) {
  std::vector<RowInterval> out;
  const auto vertices = path.vertices();
  const int first_row = path.start().row;
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    const Point v = vertices[t];
    const auto r = static_cast<std::size_t>(first_row - v.row);
    if (r == out.size()) {
      out.push_back({v.col, v.col, t});
    } else {
      out[r].leave_col = v.col;
    }
  }
  return out;
}

ColumnInterval column_interval(const Path& path, int col) {
  if (col < path.start().col || col > path.end().col) {
    throw std::out_of_range("column " + std::to_string(col) +
                            " outside path span");
  }
  return column_intervals(path)[static_cast<std::size_t>(col -
                                                         path.start().col)];
}

RowInterval row_interval(const Path& path, int row) {
  if (row > path.start().row || row < path.end().row) {
    throw std::out_of_range("row " + std::to_string(row) +
                            " outside path span");
  }
  return row_intervals(path)[static_cast<std::size_t>(path.start().row - row)];
}

std::vector<std::pair<std::size_t, std::size_t>> common_vertices(
    const Path& p, const Path& q) {
  // Both vertex lists are sorted by (col ascending, row descending), so a
  // merge finds the shared ones in traversal order.
  auto before = [](Point a, Point b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto pv = p.vertices();
  const auto qv = q.vertices();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pv.size() && j < qv.size()) {
    if (pv[i] == qv[j]) {
      out.emplace_back(i++, j++);
    } else if (before(pv[i], qv[j])) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

}  // namespace simion
