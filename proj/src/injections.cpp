#include "simion/injections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simion {

namespace {

Path subpath(const Path& path, std::size_t from, std::size_t to) {
  return path.suffix(from).prefix(to - from);
}

// Throws unless `path` runs from (m, 0) to (0, n) inside the allowed region.
void require_member(const Shape& shape, const Path& path, int m, int n,
                    const char* role) {
  if (path.start() != Point{m, 0} || path.end() != Point{0, n}) {
    throw std::invalid_argument(
        std::string(role) + " must run from (" + std::to_string(m) +
        ",0) to (0," + std::to_string(n) + ")");
  }
  if (!is_valid_path(shape, path)) {
    throw std::invalid_argument(std::string(role) + " enters the shape");
  }
}

// Endpoints of a path that starts on column 0 and ends on row 0.
struct Ends {
  int m;
  int n;
};

Ends ends_of(const Path& path, const char* role) {
  if (path.start().col != 0 || path.end().row != 0) {
    throw std::invalid_argument(std::string(role) +
                                " must start on column 0 and end on row 0");
  }
  return {path.start().row, path.end().col};
}

void require_output(const Shape& shape, const Path& path) {
  if (!is_valid_path(shape, path)) {
    throw std::logic_error("constructed path enters the shape: start (" +
                           std::to_string(path.start().row) + "," +
                           std::to_string(path.start().col) + ") steps " +
                           path.steps());
  }
}

PathPair swap_tails(const Path& p, const Path& q, std::size_t p_index,
                    std::size_t q_index) {
  return {concat(p.prefix(p_index), q.suffix(q_index)),
          concat(q.prefix(q_index), p.suffix(p_index))};
}

}  // namespace

std::optional<CutPair> first_vertical_pair(const Path& p, const Path& q,
                                           int distance) {
  const auto pc = column_intervals(p);
  const auto qc = column_intervals(q);
  const int from = std::max(p.start().col, q.start().col);
  const int to = std::min(p.end().col, q.end().col);
  for (int col = from; col <= to; ++col) {
    const auto& a = pc[static_cast<std::size_t>(col - p.start().col)];
    const auto& b = qc[static_cast<std::size_t>(col - q.start().col)];
    const int lo = std::max(a.exit_row, b.exit_row - distance);
    const int hi = std::min(a.entry_row, b.entry_row - distance);
    if (lo > hi) continue;
    const int p_row = hi;
    const int q_row = hi + distance;
    return CutPair{
        a.entry_index + static_cast<std::size_t>(a.entry_row - p_row),
        b.entry_index + static_cast<std::size_t>(b.entry_row - q_row),
        {p_row, col},
        {q_row, col},
        distance};
  }
  return std::nullopt;
}

std::optional<CutPair> last_horizontal_pair(const Path& p, const Path& q,
                                            int distance) {
  const auto pr = row_intervals(p);
  const auto qr = row_intervals(q);
  const int from = std::max(p.end().row, q.end().row);
  const int to = std::min(p.start().row, q.start().row);
  for (int row = from; row <= to; ++row) {
    const auto& a = pr[static_cast<std::size_t>(p.start().row - row)];
    const auto& b = qr[static_cast<std::size_t>(q.start().row - row)];
    const int lo = std::max(a.enter_col, b.enter_col + distance);
    const int hi = std::min(a.leave_col, b.leave_col + distance);
    if (lo > hi) continue;
    const int p_col = hi;
    const int q_col = hi - distance;
    return CutPair{
        a.enter_index + static_cast<std::size_t>(p_col - a.enter_col),
        b.enter_index + static_cast<std::size_t>(q_col - b.enter_col),
        {row, p_col},
        {row, q_col},
        distance};
  }
  return std::nullopt;
}

PathPair psi_forward(const Shape& shape, const Path& p, const Path& q) {
  const auto [m, n_plus_1] = ends_of(p, "p");
  if (n_plus_1 < 1) throw std::invalid_argument("p must end east of (0,0)");
  require_member(shape, p, m, n_plus_1, "p");
  require_member(shape, q, m + 1, n_plus_1 - 1, "q");
  const auto common = common_vertices(p, q);
  if (common.empty()) throw std::invalid_argument("disjoint pair");
  const auto [i, j] = common.front();
  return swap_tails(p, q, i, j);
}

std::optional<PathPair> psi_inverse(const Shape& shape, const PathPair& pair) {
  const auto [m, n] = ends_of(pair.first, "first");
  require_member(shape, pair.first, m, n, "first");
  require_member(shape, pair.second, m + 1, n + 1, "second");
  const auto common = common_vertices(pair.first, pair.second);
  if (common.empty()) return std::nullopt;
  const auto [i, j] = common.front();
  return swap_tails(pair.first, pair.second, i, j);
}

PathPair phi_forward(const Shape& shape, const Path& p, const Path& q) {
  const auto [a, b] = ends_of(p, "p");
  require_member(shape, p, a, b, "p");
  require_member(shape, q, a + 2, b, "q");
  const auto cut = first_vertical_pair(p, q, 1);
  if (!cut) throw std::logic_error("no cut found");

  PathPair out{
      concat(shift(p.prefix(cut->p_index), Direction::South),
             q.suffix(cut->q_index)),
      concat(shift(q.prefix(cut->q_index), Direction::North),
             p.suffix(cut->p_index))};
  require_output(shape, out.first);
  require_output(shape, out.second);
  return out;
}

std::optional<PathPair> phi_inverse(const Shape& shape, const PathPair& pair) {
  const auto [m, n] = ends_of(pair.first, "first");
  require_member(shape, pair.first, m, n, "first");
  require_member(shape, pair.second, m, n, "second");
  const auto cut = first_vertical_pair(pair.first, pair.second, -1);
  if (!cut) return std::nullopt;

  const Path& f = pair.first;
  const Path& g = pair.second;
  try {
    PathPair out{
        concat(shift(f.prefix(cut->p_index), Direction::North),
               g.suffix(cut->q_index)),
        concat(shift(g.prefix(cut->q_index), Direction::South),
               f.suffix(cut->p_index))};
    if (!is_valid_path(shape, out.first) ||
        !is_valid_path(shape, out.second)) {
      return std::nullopt;
    }
    return out;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

PathPair phibar_forward(const Shape& shape, const Path& p, const Path& q) {
  const auto [m_minus_1, n_plus_1] = ends_of(p, "p");
  const int m = m_minus_1 + 1;
  const int n = n_plus_1 - 1;
  if (n < 1) throw std::invalid_argument("p must end at (0,n+1) with n >= 1");
  require_member(shape, p, m - 1, n + 1, "p");
  require_member(shape, q, m + 1, n - 1, "q");

  const auto first = first_vertical_pair(p, q, 1);
  const auto last = last_horizontal_pair(p, q, 1);
  if (!first || !last) throw std::logic_error("no cut found");
  if (first->p_index > last->p_index || first->q_index > last->q_index) {
    throw std::logic_error("cut ordering violated");
  }

  const Path p1 = p.prefix(first->p_index);
  const Path p2 = subpath(p, first->p_index, last->p_index);
  const Path p3 = p.suffix(last->p_index);
  const Path q1 = q.prefix(first->q_index);
  const Path q2 = subpath(q, first->q_index, last->q_index);
  const Path q3 = q.suffix(last->q_index);

  PathPair out{
      concat(concat(shift(p1, Direction::South), q2),
             shift(p3, Direction::West)),
      concat(concat(shift(q1, Direction::North), p2),
             shift(q3, Direction::East))};
  require_output(shape, out.first);
  require_output(shape, out.second);
  return out;
}

std::optional<PathPair> phibar_inverse(const Shape& shape,
                                       const PathPair& pair) {
  const auto [m, n] = ends_of(pair.first, "first");
  require_member(shape, pair.first, m, n, "first");
  require_member(shape, pair.second, m, n, "second");

  const Path& f = pair.first;
  const Path& g = pair.second;
  const auto first = first_vertical_pair(f, g, -1);
  const auto last = last_horizontal_pair(f, g, -1);
  if (!first || !last) return std::nullopt;
  if (first->p_index > last->p_index || first->q_index > last->q_index) {
    return std::nullopt;
  }

  const Path f1 = f.prefix(first->p_index);
  const Path f2 = subpath(f, first->p_index, last->p_index);
  const Path f3 = f.suffix(last->p_index);
  const Path g1 = g.prefix(first->q_index);
  const Path g2 = subpath(g, first->q_index, last->q_index);
  const Path g3 = g.suffix(last->q_index);
  try {
    PathPair out{
        concat(concat(shift(f1, Direction::North), g2),
               shift(f3, Direction::East)),
        concat(concat(shift(g1, Direction::South), f2),
               shift(g3, Direction::West))};
    if (!is_valid_path(shape, out.first) ||
        !is_valid_path(shape, out.second)) {
      return std::nullopt;
    }
    return out;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

}  // namespace simion
