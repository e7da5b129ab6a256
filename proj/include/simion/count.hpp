#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "simion/path.hpp"
#include "simion/shape.hpp"

namespace simion {

// Memoized N(m, n): paths from (m, 0) to (0, n) that avoid the shape.
// Lookups are safe from several threads.
class CountTable {
 public:
  explicit CountTable(Shape shape) : shape_(std::move(shape)) {}

  CountTable(const CountTable&) = delete;
  CountTable& operator=(const CountTable&) = delete;

  const Shape& shape() const noexcept { return shape_; }

  mpz_class count(int m, int n) const;

 private:
  Shape shape_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, mpz_class> memo_;
};

inline mpz_class count_paths(const CountTable& table, int m, int n) {
  return table.count(m, n);
}

// Largest m + n that enumerate_paths accepts.
inline constexpr int kEnumerationLimit = 30;

// Brute-force depth-first listing of the paths counted by N(m, n), in
// lexicographic step order. Throws ScaleError when m + n exceeds
// kEnumerationLimit.
std::vector<Path> enumerate_paths(const Shape& shape, int m, int n);

}  // namespace simion
