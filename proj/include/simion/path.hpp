#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simion/shape.hpp"

namespace simion {

enum class Direction { North, South, East, West };

// A northeastern lattice path: a start vertex and a string over {N, E}.
// Vertices are materialized on construction so splitting and concatenation
// are index arithmetic.
class Path {
 public:
  // Throws ParseError on a letter other than N/E or on the first step that
  // would leave the quadrant.
  Path(Point start, std::string_view steps);

  Point start() const noexcept { return vertices_.front(); }
  Point end() const noexcept { return vertices_.back(); }
  std::size_t length() const noexcept { return steps_.size(); }
  const std::string& steps() const noexcept { return steps_; }
  Point vertex(std::size_t t) const { return vertices_.at(t); }
  std::span<const Point> vertices() const noexcept { return vertices_; }

  // Vertices 0..t, and t..length(), as paths.
  Path prefix(std::size_t t) const;
  Path suffix(std::size_t t) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.start() == b.start() && a.steps_ == b.steps_;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.start() != b.start()) return a.start() < b.start();
    return a.steps_ < b.steps_;
  }

 private:
  std::string steps_;
  std::vector<Point> vertices_;
};

inline Path make_path(Point start, std::string_view steps) {
  return Path(start, steps);
}

// Joins two paths sharing a junction vertex. Throws std::logic_error if
// `head` does not end where `tail` starts.
Path concat(const Path& head, const Path& tail);

// Translates the whole path; throws std::out_of_range on coordinate underflow.
Path shift(const Path& path, Direction direction, int amount = 1);

bool is_valid_path(const Shape& shape, const Path& path);

// Rows a path occupies in one column. The path arrives at `entry_row` (its
// southmost vertex there, vertex index `entry_index`) and leaves, or ends, at
// `exit_row` (its northmost).
struct ColumnInterval {
  int exit_row;
  int entry_row;
  std::size_t entry_index;
};

// Columns a path occupies in one row: it arrives at `enter_col` (vertex index
// `enter_index`) and leaves, or ends, at `leave_col`.
struct RowInterval {
  int enter_col;
  int leave_col;
  std::size_t enter_index;
};

// Throw std::out_of_range outside the path's column (row) span.
ColumnInterval column_interval(const Path& path, int col);
RowInterval row_interval(const Path& path, int row);

// All intervals at once: element c is the interval at column
// path.start().col + c (row path.start().row - r for rows).
std::vector<ColumnInterval> column_intervals(const Path& path);
std::vector<RowInterval> row_intervals(const Path& path);

// Shared vertices as (index into p, index into q), in traversal order.
std::vector<std::pair<std::size_t, std::size_t>> common_vertices(
    const Path& p, const Path& q);

}  // namespace simion
