#include "quiverkit/mckay.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quiverkit/error.hpp"

namespace quiverkit {

namespace {

constexpr double kOrthogonalityTol = 1e-9;
constexpr double kIntegralityTol = 1e-6;

Complex inner(const CharacterTable& t, const std::vector<Complex>& a,
              const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
    s += static_cast<double>(t.class_sizes[c]) * a[c] * std::conj(b[c]);
  return s / static_cast<double>(t.order());
}

long long round_multiplicity(Complex z, const std::string& what) {
  const double r = std::round(z.real());
  if (std::abs(z - Complex(r, 0.0)) > kIntegralityTol || r < 0)
    throw Error("not a valid character decomposition (" + what + " = " +
                std::to_string(z.real()) + (z.imag() >= 0 ? "+" : "") +
                std::to_string(z.imag()) + "i)");
  return static_cast<long long>(r);
}

}  // namespace

long long CharacterTable::order() const {
  long long s = 0;
  for (auto c : class_sizes) s += c;
  return s;
}

void validate(const CharacterTable& t) {
  const std::size_t k = t.class_sizes.size();
  if (k == 0) throw Error("character table has no classes");
  for (auto c : t.class_sizes)
    if (c <= 0) throw Error("class sizes must be positive");
  if (t.chars.size() != k)
    throw Error("expected " + std::to_string(k) + " irreducible characters, got " +
                std::to_string(t.chars.size()));
  for (const auto& row : t.chars)
    if (row.size() != k) throw Error("character row has the wrong length");
  if (t.v_char.size() != k) throw Error("V has the wrong length");
  if (std::abs(t.v_char[0] - Complex(2.0, 0.0)) > kIntegralityTol)
    throw Error("V must have degree 2 (value 2 on the identity class)");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Complex expect = i == j ? 1.0 : 0.0;
      if (std::abs(inner(t, t.chars[i], t.chars[j]) - expect) > kOrthogonalityTol)
        throw Error("characters " + std::to_string(i) + " and " + std::to_string(j) +
                    " violate orthogonality");
    }
  }
  (void)decompose_v(t);
}

std::vector<long long> decompose_v(const CharacterTable& t) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < t.chars.size(); ++i)
    out.push_back(round_multiplicity(inner(t, t.v_char, t.chars[i]),
                                     "<V, chi_" + std::to_string(i) + ">"));
  return out;
}

Quiver mckay_quiver(const CharacterTable& t) {
  validate(t);
  const std::size_t k = t.chars.size();
  QuiverBuilder b(k);
  std::vector<Complex> product(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) product[c] = t.v_char[c] * t.chars[i][c];
    for (std::size_t j = 0; j < k; ++j)
      b.at(i, j) = round_multiplicity(
          inner(t, product, t.chars[j]),
          "mult(chi_" + std::to_string(j) + ", V x chi_" + std::to_string(i) + ")");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("chi" + std::to_string(i));
  b.set_labels(std::move(labels));
  return b.build();
}

CharacterTable builtin_cyclic_table(int n, int w1, int w2) {
  if (n < 1) throw Error("cyclic group order must be positive");
  auto root = [n](long long e) {
    const long long r = ((e % n) + n) % n;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return Complex(std::cos(theta), std::sin(theta));
  };
  CharacterTable t;
  const auto un = static_cast<std::size_t>(n);
  t.class_sizes.assign(un, 1);
  t.chars.assign(un, std::vector<Complex>(un));
  t.v_char.resize(un);
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t j = 0; j < un; ++j)
      t.chars[k][j] = root(static_cast<long long>(j * k));
  for (std::size_t j = 0; j < un; ++j)
    t.v_char[j] = root(static_cast<long long>(j) * w1) + root(static_cast<long long>(j) * w2);
  return t;
}

}  // namespace quiverkit
