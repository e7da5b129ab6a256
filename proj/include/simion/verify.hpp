#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simion/injections.hpp"
#include "simion/shape.hpp"

namespace simion {

enum class Injection { Psi, Phi, PhiBar };

std::string_view injection_name(Injection which);
// "psi" | "phi" | "phibar"; throws ParseError otherwise.
Injection parse_injection(std::string_view name);

// The (m, n) cells an exhaustive sweep visits, indexed as in the maps'
// signatures:
//   Psi:    N(m, n+1) x N(m+1, n) -> N(m, n) x N(m+1, n+1),  m, n >= 0
//   Phi:    N(m-1, n) x N(m+1, n) -> N(m, n)^2,              m >= 1, n >= 0
//   PhiBar: N(m-1, n+1) x N(m+1, n-1) -> N(m, n)^2,          m, n >= 1
// with m + n <= max_total.
struct Violation {
  Injection which;
  Shape shape;
  int m;
  int n;
  std::optional<PathPair> input;
  std::optional<PathPair> output;
  std::string violation;
};

struct CellStats {
  Injection which;
  int m;
  int n;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::size_t image_size = 0;
  // Domain pairs whose vertical cut P sits at the start of p, so p has no
  // entry step into P.
  std::size_t start_cuts = 0;
  // Domain pairs with P past the start where p does not enter P with an east
  // step or q does not enter Q with a north step. Recorded, never a
  // violation.
  std::size_t entry_step_exceptions = 0;
  // Codomain pairs that carry a distance -1 cut (two, for PhiBar) yet are
  // not in the image because undoing the shifts would enter the shape.
  std::size_t cut_without_preimage = 0;
};

struct VerificationReport {
  Shape shape;
  int max_total = 0;
  std::vector<CellStats> cells;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Exhaustive check of one injection on every cell: forward outputs lie in
// the codomain and avoid the shape, inverse(forward(x)) == x, no two inputs
// collide, and the image is exactly the set of codomain pairs the inverse
// accepts (for Psi: exactly the intersecting pairs). Throws ScaleError when
// the paths involved exceed the enumeration limit.
VerificationReport verify_injection(const Shape& shape, Injection which,
                                    int max_total);

nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace simion
