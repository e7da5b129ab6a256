#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace simion {

// Grid vertex. `row` counts unit steps south of the top boundary line and
// `col` counts unit steps east of the left boundary line; a north step
// decreases `row`, an east step increases `col`.
struct Point {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// Ferrers diagram of a partition in English notation, anchored in the
// northwest corner of the grid. Cell (r, c), 1-indexed, is the unit square
// with corners (r-1, c-1) and (r, c).
class Shape {
 public:
  Shape() = default;

  const std::vector<int>& parts() const noexcept { return parts_; }

  // Length of row t (1-indexed); zero for every t past the last row.
  int part(std::size_t t) const noexcept {
    return t >= 1 && t <= parts_.size() ? parts_[t - 1] : 0;
  }

  std::size_t rows() const noexcept { return parts_.size(); }
  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }
  long cell_count() const noexcept;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  friend Shape make_shape(const std::vector<long long>& parts);
  explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {}

  std::vector<int> parts_;
};

// Validates raw parts and trims trailing zeros. Throws ParseError naming the
// 1-based index of the first negative part or the first increase.
Shape make_shape(const std::vector<long long>& parts);

Shape conjugate(const Shape& shape);
bool is_self_conjugate(const Shape& shape);

// True when `v` lies weakly southeast of the staircase boundary, i.e. a path
// may visit it. Vertices strictly inside the shape and those on its north or
// west border segments are refused.
bool vertex_allowed(const Shape& shape, Point v) noexcept;

// Every shape with at most `rows` parts, each at most `cols`, ordered by
// cell count and then lexicographically by parts.
std::vector<Shape> shapes_in_box(int rows, int cols);

// Every shape with at most `max_cells` cells, ordered by cell count and then
// lexicographically by parts.
std::vector<Shape> shapes_up_to_cells(int max_cells);

}  // namespace simion
