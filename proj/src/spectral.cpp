#include "quiverkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quiverkit/error.hpp"

namespace quiverkit {

namespace {

constexpr std::size_t kMaxIterations = 10000;
constexpr double kBracketTolerance = 1e-12;

}  // namespace

BigInt CharPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> CharPoly::descending() const {
  return {coefficients.rbegin(), coefficients.rend()};
}

CharPoly char_poly(const Quiver& q) {
  const std::size_t n = q.size();
  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j);

  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    if (trace % k != 0) throw InternalError("characteristic polynomial recurrence is not integral");
    c[n - k] = -trace / k;
  }
  return CharPoly{std::move(c)};
}

PerronEstimate perron_root(const Quiver& q) {
  if (!is_strongly_connected(q)) throw Error("perron_root needs a strongly connected quiver");
  const std::size_t n = q.size();
  PerronEstimate out;
  if (n == 1) {
    out.rho = static_cast<double>(q(0, 0));
    out.vector = {1.0};
    return out;
  }
  std::vector<double> v(n, 1.0), w(n);
  double lo = 0.0, hi = 0.0;
  for (std::size_t it = 1; it <= kMaxIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];  // shift by the identity: aperiodic, same eigenvector
      for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(q(i, j)) * v[j];
      w[i] = s;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
    out.iterations = it;
    if (hi - lo <= kBracketTolerance * std::max(1.0, hi)) break;
  }
  out.rho = 0.5 * (lo + hi) - 1.0;
  out.vector = std::move(v);
  return out;
}

bool exceeds_two(const Quiver& q) {
  const Rational bound = static_cast<long long>(q.size()) * q.max_entry();
  if (bound <= 2) return false;
  SturmSequence seq(char_poly(q).as_rational());
  return seq.roots_in(Rational(2), bound) > 0;
}

SpectralCertificate spectral_radius(const Quiver& q) {
  SpectralCertificate cert;
  cert.char_poly = char_poly(q);

  for (const auto& comp : strong_components(q)) {
    const Quiver sub = induced(q, comp);
    cert.rho_float = std::max(cert.rho_float, perron_root(sub).rho);
  }
  if (is_strongly_connected(q)) cert.perron_vector = perron_root(q).vector;

  const Rational bound = static_cast<long long>(q.size()) * q.max_entry();
  SturmSequence seq(cert.char_poly.as_rational());
  cert.two_is_root = cert.char_poly(BigInt(2)) == 0;
  cert.at_two = {Rational(2), seq.sign_changes(Rational(2))};
  cert.at_bound = {bound, seq.sign_changes(bound)};
  // Every real eigenvalue is at most rho, and rho is itself an eigenvalue.
  const bool root_above = bound > 2 && cert.at_two.sign_changes - cert.at_bound.sign_changes > 0;
  cert.is_exactly_two = cert.two_is_root && !root_above;

  if (cert.is_exactly_two && std::abs(cert.rho_float - 2.0) >= 1e-6)
    throw InternalError("exact and floating-point spectral radius disagree");
  return cert;
}

std::optional<double> largest_real_root(const RationalPoly& p, double tol) {
  SturmSequence seq(p);
  const Rational bound = root_bound(p);
  Rational lo = -bound, hi = bound;
  if (seq.roots_in(lo, hi) == 0) return std::nullopt;
  // Invariant: the largest root lies in (lo, hi].
  const Rational width = Rational(tol);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    if (seq.roots_in(mid, hi) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace quiverkit
