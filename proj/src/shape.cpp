#include "simion/shape.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "simion/error.hpp"

namespace simion {

long Shape::cell_count() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Shape make_shape(const std::vector<long long>& parts) {
  std::vector<int> kept;
  kept.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const long long part = parts[i];
    if (part < 0) {
      throw ParseError("negative part at index " + std::to_string(i + 1));
    }
    if (part > std::numeric_limits<int>::max()) {
      throw ParseError("part too large at index " + std::to_string(i + 1));
    }
    if (i > 0 && part > parts[i - 1]) {
      throw ParseError("not weakly decreasing at index " +
                       std::to_string(i + 1));
    }
    kept.push_back(static_cast<int>(part));
  }
  while (!kept.empty() && kept.back() == 0) kept.pop_back();
  return Shape(std::move(kept));
}

Shape conjugate(const Shape& shape) {
  std::vector<long long> parts(static_cast<std::size_t>(shape.width()), 0);
  for (int part : shape.parts()) {
    for (int t = 0; t < part; ++t) ++parts[static_cast<std::size_t>(t)];
  }
  return make_shape(parts);
}

bool is_self_conjugate(const Shape& shape) {
  return conjugate(shape) == shape;
}

bool vertex_allowed(const Shape& shape, Point v) noexcept {
  if (v.row < 0 || v.col < 0) return false;
  return v.col >= shape.part(static_cast<std::size_t>(v.row) + 1);
}

namespace {

// Partitions of `remaining` with parts bounded by `max_part` and at most
// `max_rows` parts, appended in ascending lexicographic order.
void partitions(int remaining, int max_part, int max_rows,
                std::vector<long long>& prefix, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.push_back(make_shape(prefix));
    return;
  }
  if (max_rows == 0) return;
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    partitions(remaining - part, part, max_rows - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Shape> bounded_shapes(int max_cells, int rows, int cols) {
  std::vector<Shape> out;
  std::vector<long long> prefix;
  for (int cells = 0; cells <= max_cells; ++cells) {
    partitions(cells, cols, rows, prefix, out);
  }
  return out;
}

}  // namespace

std::vector<Shape> shapes_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) return {};
  return bounded_shapes(rows * cols, rows, cols);
}

std::vector<Shape> shapes_up_to_cells(int max_cells) {
  if (max_cells < 0) return {};
  return bounded_shapes(max_cells, max_cells, max_cells);
}

}  // namespace simion
