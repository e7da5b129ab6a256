#include "simion/analysis.hpp"

#include <stdexcept>

namespace simion {

CountSequence diagonal_sequence(const CountTable& table, int total) {
  if (total < 0) throw std::invalid_argument("negative diagonal total");
  CountSequence out{table.shape(), total, {}};
  out.values.reserve(static_cast<std::size_t>(total) + 1);
  for (int i = 0; i <= total; ++i) {
    out.values.push_back(table.count(i, total - i));
  }
  return out;
}

LogConcavity is_log_concave(std::span<const mpz_class> values) {
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] * values[i] < values[i - 1] * values[i + 1]) {
      return {false, i};
    }
  }
  return {};
}

bool is_unimodal(std::span<const mpz_class> values) {
  std::size_t i = 1;
  while (i < values.size() && values[i - 1] <= values[i]) ++i;
  while (i < values.size() && values[i - 1] >= values[i]) ++i;
  return i >= values.size();
}

bool is_palindromic(std::span<const mpz_class> values) {
  for (std::size_t i = 0, j = values.size(); i < j; ++i) {
    if (values[i] != values[--j]) return false;
  }
  return true;
}

IntPolynomial sequence_polynomial(const CountSequence& c) {
  return IntPolynomial(c.values);
}

bool InequalityReport::all_hold() const {
  for (const auto& check : checks) {
    if (!check.holds()) return false;
  }
  return true;
}

InequalityReport verify_inequalities(const CountTable& table, int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("inequalities need m, n >= 1");
  }
  auto N = [&](int i, int j) { return table.count(i, j); };
  InequalityReport report{m, n, {}};
  report.checks.push_back(
      {"tail-swap", "N(m,n+1) N(m+1,n) <= N(m,n) N(m+1,n+1)",
       N(m, n + 1) * N(m + 1, n), N(m, n) * N(m + 1, n + 1)});
  report.checks.push_back(
      {"shift", "N(m-1,n+1) N(m+1,n+1) <= N(m,n+1)^2",
       N(m - 1, n + 1) * N(m + 1, n + 1), N(m, n + 1) * N(m, n + 1)});
  report.checks.push_back(
      {"combined", "N(m-1,n+1) N(m+1,n) <= N(m,n) N(m,n+1)",
       N(m - 1, n + 1) * N(m + 1, n), N(m, n) * N(m, n + 1)});
  report.checks.push_back(
      {"combined-mirror", "N(m+1,n-1) N(m,n+1) <= N(m,n) N(m+1,n)",
       N(m + 1, n - 1) * N(m, n + 1), N(m, n) * N(m + 1, n)});
  report.checks.push_back(
      {"log-concave", "N(m-1,n+1) N(m+1,n-1) <= N(m,n)^2",
       N(m - 1, n + 1) * N(m + 1, n - 1), N(m, n) * N(m, n)});
  return report;
}

RootVerdict root_verdict(const CountSequence& c) {
  const IntPolynomial poly = sequence_polynomial(c);
  if (poly.is_zero()) {
    throw std::invalid_argument("empty diagonal has no root verdict");
  }
  RootVerdict v{c.shape, c.total, poly.degree(), 0, false, false};
  const RealRootSummary summary = summarize_real_roots(poly);
  v.distinct_real_roots = summary.distinct_real_roots;
  v.real_rooted = summary.all_real;
  v.sign_check_passed = sign_change_witnesses(poly) == v.distinct_real_roots;
  return v;
}

void for_each_root_verdict(
    int max_cells, int max_total,
    const std::function<bool(const RootVerdict&)>& sink) {
  for (const Shape& shape : shapes_up_to_cells(max_cells)) {
    CountTable table(shape);
    for (int total = 0; total <= max_total; ++total) {
      const CountSequence seq = diagonal_sequence(table, total);
      if (sequence_polynomial(seq).is_zero()) continue;
      if (!sink(root_verdict(seq))) return;
    }
  }
}

std::vector<RootVerdict> search_real_root_failures(int max_cells,
                                                   int max_total) {
  std::vector<RootVerdict> out;
  for_each_root_verdict(max_cells, max_total, [&](const RootVerdict& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace simion
