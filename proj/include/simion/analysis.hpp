#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "simion/count.hpp"
#include "simion/polynomial.hpp"
#include "simion/shape.hpp"

namespace simion {

// v_i = N(i, total - i) for i = 0..total.
struct CountSequence {
  Shape shape;
  int total = 0;
  std::vector<mpz_class> values;
};

CountSequence diagonal_sequence(const CountTable& table, int total);

struct LogConcavity {
  bool holds = true;
  // First interior index with v_i^2 < v_{i-1} v_{i+1}.
  std::optional<std::size_t> witness;
};

LogConcavity is_log_concave(std::span<const mpz_class> values);
bool is_unimodal(std::span<const mpz_class> values);
bool is_palindromic(std::span<const mpz_class> values);

inline LogConcavity is_log_concave(const CountSequence& c) {
  return is_log_concave(c.values);
}
inline bool is_unimodal(const CountSequence& c) { return is_unimodal(c.values); }
inline bool is_palindromic(const CountSequence& c) {
  return is_palindromic(c.values);
}

IntPolynomial sequence_polynomial(const CountSequence& c);

struct InequalityCheck {
  std::string name;
  std::string statement;
  mpz_class lhs;
  mpz_class rhs;

  bool holds() const { return lhs <= rhs; }
};

struct InequalityReport {
  int m = 0;
  int n = 0;
  std::vector<InequalityCheck> checks;

  bool all_hold() const;
};

// The tail-swap inequality, the shift inequality, the two products they
// combine into, and the log-concavity inequality itself, evaluated exactly.
// Requires m, n >= 1.
InequalityReport verify_inequalities(const CountTable& table, int m, int n);

struct RootVerdict {
  Shape shape;
  int total = 0;
  int degree = 0;
  int distinct_real_roots = 0;
  bool real_rooted = false;
  // Isolating intervals with a sign change agree with the Sturm count.
  bool sign_check_passed = false;
};

RootVerdict root_verdict(const CountSequence& c);

// Streams verdicts for every shape with at most `max_cells` cells (by cell
// count, then lexicographic parts) and every total up to `max_total`, skipping
// diagonals whose polynomial is zero. Stops early when `sink` returns false.
void for_each_root_verdict(int max_cells, int max_total,
                           const std::function<bool(const RootVerdict&)>& sink);

std::vector<RootVerdict> search_real_root_failures(int max_cells,
                                                   int max_total);

}  // namespace simion
