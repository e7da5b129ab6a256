#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace simion {

// Polynomial with arbitrary-precision integer coefficients, constant term
// first. Trailing zero coefficients are dropped, so the zero polynomial has
// no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  const std::vector<mpz_class>& coefficients() const noexcept {
    return coefficients_;
  }
  int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const mpz_class& leading() const { return coefficients_.back(); }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  IntPolynomial derivative() const;

  // "3x^3+5x^2+3x"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<mpz_class> coefficients_;
};

// Greatest common divisor over the rationals, scaled to a primitive integer
// polynomial with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive with the sign of p's leading coefficient.
// Throws std::invalid_argument on the zero polynomial.
IntPolynomial square_free_part(const IntPolynomial& p);

// p, p', then negated remainders, each rescaled by a positive constant.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

struct RealRootSummary {
  IntPolynomial square_free;
  int distinct_real_roots = 0;
  bool all_real = true;
};

// Square-free part, its Sturm root count and the all-real verdict, computed
// once. Throws std::invalid_argument on the zero polynomial.
RealRootSummary summarize_real_roots(const IntPolynomial& p);

// Number of distinct real roots. Throws std::invalid_argument on zero.
int count_real_roots(const IntPolynomial& p);

// True when every complex root is real. Throws std::invalid_argument on zero.
bool all_roots_real(const IntPolynomial& p);

// Half-open rational interval (lo, hi] holding exactly one root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
};

// Isolating intervals for the distinct real roots, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

// Independent recheck of a root count: the number of isolating intervals
// across which the square-free part changes sign or vanishes at the right
// endpoint.
int sign_change_witnesses(const IntPolynomial& p);

}  // namespace simion
