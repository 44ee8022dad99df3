#include "quiverkit/polynomial.hpp"

#include <utility>

#include "quiverkit/error.hpp"

namespace quiverkit {

RationalPoly::RationalPoly(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

RationalPoly RationalPoly::from_integers(const std::vector<BigInt>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (const auto& v : coefficients) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> d(c_);
  for (auto& v : d) v = -v;
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::normalized() const {
  if (is_zero()) return {};
  Rational scale = boost::multiprecision::abs(leading());
  std::vector<Rational> d(c_);
  for (auto& v : d) v /= scale;
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> d(c_);
  for (auto& v : d) v /= lc;
  return RationalPoly(std::move(d));
}

PolyDivision divide(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const long dd = den.degree();
  std::vector<Rational> quo(num.degree() >= dd ? num.degree() - dd + 1 : 0);
  for (long k = num.degree(); k >= dd; --k) {
    const Rational f = rem[k] / d.back();
    quo[k - dd] = f;
    if (f == 0) continue;
    for (long t = 0; t <= dd; ++t) rem[k - dd + t] -= f * d[t];
  }
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = r.normalized();
  }
  return a.monic();
}

SturmSequence::SturmSequence(const RationalPoly& p) {
  if (p.is_zero()) throw Error("Sturm sequence of the zero polynomial");
  const RationalPoly dp = p.derivative();
  RationalPoly sf = dp.is_zero() ? p : divide(p, gcd(p, dp)).quotient;
  chain_.push_back(sf.normalized());
  RationalPoly next = sf.derivative().normalized();
  while (!next.is_zero()) {
    chain_.push_back(next);
    next = (-divide(chain_[chain_.size() - 2], chain_.back()).remainder).normalized();
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& poly : chain_) {
    const Rational v = poly(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::roots_in(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

Rational root_bound(const RationalPoly& p) {
  if (p.is_zero()) throw Error("root bound of the zero polynomial");
  Rational m = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational r = boost::multiprecision::abs(c[k] / c.back());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace quiverkit
