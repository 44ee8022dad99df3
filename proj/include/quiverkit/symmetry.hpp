#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "quiverkit/permutation.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// True iff q(s(i), s(j)) == q(i, j) for all i, j.
bool is_automorphism(const Quiver& q, const VertexPermutation& s);

// Every automorphism of q in lexicographic order of image arrays. The identity
// comes first. Backtracking with (in-degree, out-degree, loops) pruning; meant
// for quivers of a dozen vertices or so.
std::vector<VertexPermutation> automorphisms(const Quiver& q);

// Calls `visit` on each automorphism in lexicographic order until it returns
// false.
void for_each_automorphism(const Quiver& q,
                           const std::function<bool(const VertexPermutation&)>& visit);

// Matrix P_s Q: entry (i, j) is q(s(i), j). No precondition on s; twist()
// is the checked entry point.
Quiver permute_rows(const Quiver& q, const VertexPermutation& s);

// Twist of q by an automorphism s. Entry (i, j) is q(s(i), j), cross-checked
// against q(i, s^-1(j)). Throws Error("not an automorphism") when s is not
// an automorphism of q and Error on a size mismatch.
Quiver twist(const Quiver& q, const VertexPermutation& s);

// Lexicographically least automorphism m with twist(q, m) == opposite(q), or
// nullopt.
std::optional<VertexPermutation> find_nakayama(const Quiver& q);

// Lexicographically least bijection f with a(i, j) == b(f(i), f(j)), or
// nullopt.
std::optional<VertexPermutation> find_isomorphism(const Quiver& a, const Quiver& b);
bool are_isomorphic(const Quiver& a, const Quiver& b);

// Apply a vertex bijection: result(f(i), f(j)) == q(i, j).
Quiver relabel(const Quiver& q, const VertexPermutation& f);

// Lexicographically least flattened adjacency over all vertex orderings.
// Exhaustive over n! orderings; throws Error for n > 8.
Quiver canonical_form(const Quiver& q);

}  // namespace quiverkit
