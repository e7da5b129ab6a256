#include "simion/count.hpp"

#include <stdexcept>
#include <string>

#include "simion/error.hpp"

namespace simion {

mpz_class CountTable::count(int m, int n) const {
  if (m < 0 || n < 0) throw std::invalid_argument("negative path endpoint");
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
  }

  // f(i, j) = number of allowed paths from (i, j) to (0, n). Sweep columns
  // from n down to 0 with rows ascending; `next` holds column j + 1.
  const auto rows = static_cast<std::size_t>(m) + 1;
  std::vector<mpz_class> next(rows, 0);
  std::vector<mpz_class> current(rows, 0);
  for (int j = n; j >= 0; --j) {
    for (int i = 0; i <= m; ++i) {
      const auto r = static_cast<std::size_t>(i);
      if (!vertex_allowed(shape_, {i, j})) {
        current[r] = 0;
      } else if (i == 0 && j == n) {
        current[r] = 1;
      } else {
        current[r] = i > 0 ? current[r - 1] : mpz_class(0);
        if (j < n) current[r] += next[r];
      }
    }
    std::swap(current, next);
  }

  // Column 0 now sits in `next`; every start (i, 0) with i <= m is solved.
  std::lock_guard lock(mutex_);
  for (int i = 0; i <= m; ++i) {
    memo_.emplace(std::pair{i, n}, next[static_cast<std::size_t>(i)]);
  }
  return next[static_cast<std::size_t>(m)];
}

namespace {

struct Enumerator {
  const Shape& shape;
  std::string steps;
  std::vector<Path> out;
  Point start;

  void descend(Point at, int north_left, int east_left) {
    if (!vertex_allowed(shape, at)) return;
    if (north_left == 0 && east_left == 0) {
      out.emplace_back(start, steps);
      return;
    }
    if (east_left > 0) {
      steps.push_back('E');
      descend({at.row, at.col + 1}, north_left, east_left - 1);
      steps.pop_back();
    }
    if (north_left > 0) {
      steps.push_back('N');
      descend({at.row - 1, at.col}, north_left - 1, east_left);
      steps.pop_back();
    }
  }
};

}  // namespace

std::vector<Path> enumerate_paths(const Shape& shape, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative path endpoint");
  if (m + n > kEnumerationLimit) {
    throw ScaleError("oracle scale exceeded: m + n = " + std::to_string(m + n) +
                     " > " + std::to_string(kEnumerationLimit));
  }
  Enumerator walk{shape, {}, {}, {m, 0}};
  if (!vertex_allowed(shape, {0, n})) return {};
  walk.descend({m, 0}, m, n);
  return std::move(walk.out);
}

}  // namespace simion
