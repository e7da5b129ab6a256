#include "simion/polynomial.hpp"

#include <stdexcept>

namespace simion {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides out the content, keeping the sign.
IntPolynomial primitive(ZPoly p) {
  mpz_class content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (content > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
  return IntPolynomial(std::move(p));
}

struct PseudoDivision {
  ZPoly quotient;
  ZPoly remainder;
};

// Integer pseudo-division: returns q, r with c * a = q * b + r for some
// positive integer c, and deg r < deg b. b is nonzero.
PseudoDivision pseudo_divide(const ZPoly& a, const ZPoly& b) {
  PseudoDivision out{{}, a};
  trim(out.remainder);
  if (out.remainder.size() < b.size()) return out;
  const std::size_t steps = out.remainder.size() - b.size() + 1;
  out.quotient.assign(steps, 0);
  const mpz_class& lead = b.back();
  bool negated = false;
  for (std::size_t k = steps; k-- > 0;) {
    const mpz_class top = out.remainder[k + b.size() - 1];
    if (lead != 1) {
      for (auto& c : out.remainder) c *= lead;
      for (auto& c : out.quotient) c *= lead;
      if (lead < 0) negated = !negated;
    }
    if (top == 0) continue;
    out.quotient[k] += top;
    for (std::size_t i = 0; i < b.size(); ++i) {
      out.remainder[k + i] -= top * b[i];
    }
  }
  if (negated) {
    for (auto& c : out.remainder) c = -c;
    for (auto& c : out.quotient) c = -c;
  }
  trim(out.remainder);
  trim(out.quotient);
  return out;
}

int sign_of(const mpz_class& v) { return sgn(v); }

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

int variations_at(const std::vector<IntPolynomial>& seq, const mpq_class& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sgn(p.evaluate(x)));
  return sign_variations(signs);
}

int variations_at_infinity(const std::vector<IntPolynomial>& seq,
                           bool negative) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) {
    int s = sign_of(p.leading());
    if (negative && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_variations(signs);
}

// Roots of the square-free polynomial behind `seq` in (lo, hi].
int roots_between(const std::vector<IntPolynomial>& seq, const mpq_class& lo,
                  const mpq_class& hi) {
  return variations_at(seq, lo) - variations_at(seq, hi);
}

void require_nonzero(const IntPolynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("zero polynomial has no root count");
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<mpz_class> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coefficients_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const mpz_class magnitude = abs(c);
    if (magnitude != 1 || d == 0) out += magnitude.get_str();
    if (d >= 1) out += 'x';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  ZPoly x = primitive(a.coefficients()).coefficients();
  ZPoly y = primitive(b.coefficients()).coefficients();
  while (!y.empty()) {
    ZPoly r = primitive(pseudo_divide(x, y).remainder).coefficients();
    x = std::move(y);
    y = std::move(r);
  }
  IntPolynomial g = primitive(std::move(x));
  if (!g.is_zero() && g.leading() < 0) {
    std::vector<mpz_class> flipped = g.coefficients();
    for (auto& c : flipped) c = -c;
    g = IntPolynomial(std::move(flipped));
  }
  return g;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  require_nonzero(p);
  const IntPolynomial g = polynomial_gcd(p, p.derivative());
  if (g.is_zero()) return primitive(p.coefficients());
  return primitive(pseudo_divide(p.coefficients(), g.coefficients()).quotient);
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  IntPolynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    ZPoly r = pseudo_divide(seq[seq.size() - 2].coefficients(),
                            seq.back().coefficients())
                  .remainder;
    for (auto& c : r) c = -c;
    next = primitive(std::move(r));
  }
  return seq;
}

RealRootSummary summarize_real_roots(const IntPolynomial& p) {
  require_nonzero(p);
  RealRootSummary out{square_free_part(p), 0, true};
  if (out.square_free.degree() > 0) {
    const auto seq = sturm_sequence(out.square_free);
    out.distinct_real_roots =
        variations_at_infinity(seq, true) - variations_at_infinity(seq, false);
  }
  out.all_real = out.distinct_real_roots == out.square_free.degree();
  return out;
}

int count_real_roots(const IntPolynomial& p) {
  return summarize_real_roots(p).distinct_real_roots;
}

bool all_roots_real(const IntPolynomial& p) {
  return summarize_real_roots(p).all_real;
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  require_nonzero(p);
  const IntPolynomial sf = square_free_part(p);
  std::vector<RootInterval> out;
  if (sf.degree() == 0) return out;
  const auto seq = sturm_sequence(sf);

  // Cauchy bound: every root satisfies |r| < 1 + max |c_i / c_n|.
  mpq_class bound = 0;
  for (const auto& c : sf.coefficients()) {
    mpq_class ratio(abs(c), abs(sf.leading()));
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  // Depth-first, left half first, so intervals come out ascending.
  std::vector<RootInterval> pending{{-bound, bound}};
  while (!pending.empty()) {
    RootInterval iv = pending.back();
    pending.pop_back();
    const int roots = roots_between(seq, iv.lo, iv.hi);
    if (roots == 0) continue;
    if (roots == 1) {
      out.push_back(iv);
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    pending.push_back({mid, iv.hi});
    pending.push_back({iv.lo, mid});
  }
  return out;
}

int sign_change_witnesses(const IntPolynomial& p) {
  const IntPolynomial sf = square_free_part(p);
  if (sf.degree() == 0) return 0;
  const auto seq = sturm_sequence(sf);
  int witnesses = 0;
  for (RootInterval iv : isolate_real_roots(sf)) {
    for (;;) {
      const mpq_class at_hi = sf.evaluate(iv.hi);
      if (at_hi == 0) {
        ++witnesses;
        break;
      }
      const mpq_class at_lo = sf.evaluate(iv.lo);
      if (at_lo != 0) {
        if (sgn(at_lo) != sgn(at_hi)) ++witnesses;
        break;
      }
      // The left end is a neighbouring root; shrink towards ours.
      mpq_class mid = (iv.lo + iv.hi) / 2;
      if (roots_between(seq, mid, iv.hi) == 1) {
        iv.lo = mid;
      } else {
        iv.hi = mid;
      }
    }
  }
  return witnesses;
}

}  // namespace simion
