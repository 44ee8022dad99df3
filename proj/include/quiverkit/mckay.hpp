#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

using Complex = std::complex<double>;

// Irreducible characters of a finite group, evaluated on its conjugacy
// classes, together with a distinguished character V of degree 2. Class 0 is
// the identity class.
struct CharacterTable {
  std::vector<long long> class_sizes;
  std::vector<std::vector<Complex>> chars;  // one row per irreducible
  std::vector<Complex> v_char;

  long long order() const;
};

// Checks class sizes, shapes, V(identity) == 2, row orthogonality to 1e-9 and
// that V has nonnegative integral multiplicities to 1e-6. Throws Error.
void validate(const CharacterTable& t);

// Multiplicities <V, chi_i>.
std::vector<long long> decompose_v(const CharacterTable& t);

// Entry (i, j) is the multiplicity of chi_j in V (x) chi_i:
//   (1/|G|) sum_c size_c V(c) chi_i(c) conj(chi_j(c)),
// rounded. Throws Error("not a valid character decomposition") when a value
// is further than 1e-6 from a nonnegative integer.
Quiver mckay_quiver(const CharacterTable& t);

// Z/n with chi_k(g^j) = w^(jk) and V(g^j) = w^(j w1) + w^(j w2),
// w = exp(2 pi i / n).
CharacterTable builtin_cyclic_table(int n, int w1, int w2);

}  // namespace quiverkit
