#pragma once

#include <cstddef>
#include <optional>

#include "simion/path.hpp"
#include "simion/shape.hpp"

namespace simion {

// A matched vertex pair found by a distance scan. For a vertical cut both
// vertices share a column and q_vertex.row - p_vertex.row == distance; for a
// horizontal cut they share a row and p_vertex.col - q_vertex.col ==
// distance. A shared vertex is the distance-0 vertical cut.
struct CutPair {
  std::size_t p_index;
  std::size_t q_index;
  Point p_vertex;
  Point q_vertex;
  int distance;
};

struct PathPair {
  Path first;
  Path second;

  friend bool operator==(const PathPair&, const PathPair&) = default;
};

// Least column holding a same-column pair at vertical distance `distance`;
// within it, the southmost such pair.
std::optional<CutPair> first_vertical_pair(const Path& p, const Path& q,
                                           int distance);

// Least row holding a same-row pair at horizontal distance `distance`; within
// it, the eastmost such pair. This is the last such pair in traversal order.
std::optional<CutPair> last_horizontal_pair(const Path& p, const Path& q,
                                            int distance);

// Tail swap at the first common vertex:
//   N(m, n+1) x N(m+1, n) -> N(m, n) x N(m+1, n+1).
// Throws std::invalid_argument on inputs outside that domain, including a
// pair with no common vertex.
PathPair psi_forward(const Shape& shape, const Path& p, const Path& q);

// The same tail swap applied to N(m, n) x N(m+1, n+1). Absent when the pair
// does not intersect, i.e. is not in the image of psi_forward. Throws
// std::invalid_argument when the pair is outside N(m, n) x N(m+1, n+1).
std::optional<PathPair> psi_inverse(const Shape& shape, const PathPair& pair);

// N(a, b) x N(a+2, b) -> N(a+1, b)^2. Cuts at the first vertical-distance-1
// pair (P on p, Q on q), moves the prefix of p one unit south and the prefix
// of q one unit north, and swaps the suffixes.
PathPair phi_forward(const Shape& shape, const Path& p, const Path& q);

// Cuts a pair in N(a+1, b)^2 at its first vertical-distance -1 pair and
// undoes the shifts. Absent when there is no such pair or the reconstructed
// paths would enter the shape.
std::optional<PathPair> phi_inverse(const Shape& shape, const PathPair& pair);

// N(m-1, n+1) x N(m+1, n-1) -> N(m, n)^2. Cuts p and q at the first
// vertical-distance-1 pair and at the last horizontal-distance-1 pair; the
// first output is p1 moved south, q2, p3 moved west, the second is q1 moved
// north, p2, q3 moved east.
PathPair phibar_forward(const Shape& shape, const Path& p, const Path& q);

// Inverse of phibar_forward using the distance -1 cuts. Absent when either
// cut is missing, the cuts are out of order, or the reconstructed paths
// would enter the shape.
std::optional<PathPair> phibar_inverse(const Shape& shape,
                                       const PathPair& pair);

}  // namespace simion
