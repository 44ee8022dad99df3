#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over the rationals, coefficients[k] multiplying
// x^k. The zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  static RationalPoly from_integers(const std::vector<BigInt>& coefficients);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  Rational operator()(const Rational& x) const;
  RationalPoly derivative() const;
  RationalPoly operator-() const;
  // Scaled by 1/|leading|, so signs everywhere are unchanged.
  RationalPoly normalized() const;
  RationalPoly monic() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  RationalPoly quotient;
  RationalPoly remainder;
};

PolyDivision divide(const RationalPoly& num, const RationalPoly& den);
RationalPoly gcd(RationalPoly a, RationalPoly b);

// Sturm sequence of the square-free part of p (p must be nonzero).
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p);

  // Sign changes at x, zeros skipped.
  int sign_changes(const Rational& x) const;

  // Distinct real roots in the half-open interval (lo, hi].
  int roots_in(const Rational& lo, const Rational& hi) const;

  std::size_t length() const noexcept { return chain_.size(); }

 private:
  std::vector<RationalPoly> chain_;
};

// Cauchy bound: every real root has |x| < bound.
Rational root_bound(const RationalPoly& p);

}  // namespace quiverkit
