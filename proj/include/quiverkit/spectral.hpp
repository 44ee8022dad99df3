#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverkit/polynomial.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// det(x I - adj) with exact integer coefficients; coefficients[k] multiplies
// x^k, so the last entry is always 1.
struct CharPoly {
  std::vector<BigInt> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  BigInt operator()(const BigInt& x) const;
  RationalPoly as_rational() const { return RationalPoly::from_integers(coefficients); }
  // Leading coefficient first, as printed by the CLI.
  std::vector<BigInt> descending() const;
};

// Faddeev-LeVerrier recurrence in exact integers.
CharPoly char_poly(const Quiver& q);

struct SturmEvaluation {
  Rational point;
  int sign_changes = 0;
};

struct PerronEstimate {
  double rho = 0.0;
  std::vector<double> vector;  // normalized to max entry 1
  std::size_t iterations = 0;
};

struct SpectralCertificate {
  double rho_float = 0.0;
  bool is_exactly_two = false;
  CharPoly char_poly;
  bool two_is_root = false;
  SturmEvaluation at_two;
  SturmEvaluation at_bound;  // bound = n * max entry
  std::optional<std::vector<double>> perron_vector;  // strongly connected only
};

// Power iteration on (A + I) from the all-ones vector for an irreducible
// nonnegative matrix. Stops once the Collatz-Wielandt bracket
// [min (Av)_i/v_i, max (Av)_i/v_i] is narrower than 1e-12 (relative), or
// after 10,000 iterations. Throws Error unless q is strongly connected.
PerronEstimate perron_root(const Quiver& q);

// The float estimate takes the maximum of perron_root over strong components.
// "rho == 2" is decided exactly: 2 is a root of the characteristic polynomial
// and there is no real root in (2, n * max entry].
SpectralCertificate spectral_radius(const Quiver& q);

// Exact test for rho(q) > 2 (a real root in (2, n * max entry]).
bool exceeds_two(const Quiver& q);

// Largest real root by Sturm bisection, to within `tol`. nullopt when p has
// no real roots.
std::optional<double> largest_real_root(const RationalPoly& p, double tol = 1e-10);

}  // namespace quiverkit
