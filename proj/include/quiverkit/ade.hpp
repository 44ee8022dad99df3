#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// The connected graphs of spectral radius exactly 2.
enum class AdeFamily { ATilde, DTilde, LTilde, DLTilde, E6Tilde, E7Tilde, E8Tilde, NotADE };

struct AdeClassification {
  AdeFamily family = AdeFamily::NotADE;
  std::optional<int> index;  // absent for the E types and NotADE

  bool is_ade() const noexcept { return family != AdeFamily::NotADE; }
  // "A-tilde_3", "E6-tilde", "NotADE".
  std::string to_string() const;

  friend bool operator==(const AdeClassification&, const AdeClassification&) = default;
};

std::string_view family_name(AdeFamily f);

// Accepts "A", "D", "L", "DL", "E6", "E7", "E8", each optionally with a
// "-tilde" suffix, case-insensitively. Throws Error otherwise.
AdeFamily parse_family(std::string_view name);

// Smallest valid index: A 1, D 4, L 0, DL 2. The E types take no index.
int min_index(AdeFamily f);

// Symmetric adjacency of the named graph. An edge {i, j} sets both (i, j) and
// (j, i) to 1 and a loop sets (i, i) to 1, with two exceptions: A-tilde_1 is
// the double edge [[0,2],[2,0]] and L-tilde_0 is one vertex with (0, 0) = 2.
//
// Vertex numbering:
//   A_n   cycle 0-1-...-n-0
//   D_n   0,1 -> 2;  path 2..n-2;  n-1,n -> n-2   (D_4: 0,1,3,4 -> 2)
//   L_n   path 0..n with loops at 0 and n
//   DL_n  0,1 -> 2;  path 2..n;  loop at n
//   E_k   centre 0 with arms (2,2,2), (1,3,3), (1,2,5)
//
// Throws Error naming the valid range when the index is out of range.
Quiver make_ade(AdeFamily f, std::optional<int> index = std::nullopt);

// Structural recognition (degree sequence, loops, branch vertices), then
// cross-checked against the exact spectral test; a disagreement throws
// InternalError. Throws Error("not a graph") on non-symmetric input and
// Error("classify components separately") on disconnected input.
AdeClassification classify_ade(const Quiver& g);

// Structural recognition only, without the spectral cross-check.
AdeClassification classify_ade_structural(const Quiver& g);

}  // namespace quiverkit
