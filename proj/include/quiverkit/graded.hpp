#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverkit/polynomial.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 1;
};

// A path is a sequence of arrow indices read left to right: the first arrow
// is traversed first, so ["a", "b"] with a: i -> j and b: j -> k runs i -> k.
struct Term {
  Rational coef;
  std::vector<std::size_t> path;
};

using Relation = std::vector<Term>;

// Weighted path algebra of a quiver modulo homogeneous relations. Arrow
// degrees are positive, so the degree-0 piece is spanned by the vertex
// idempotents.
class GradedPresentation {
 public:
  // Combines repeated paths, drops zero terms and relations that become
  // empty. Throws Error on unknown vertices, non-positive degrees,
  // non-composable paths, empty paths, or relations that are not
  // homogeneous or mix sources and targets.
  GradedPresentation(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                     std::vector<Relation> relations);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  std::optional<std::size_t> arrow_index(const std::string& name) const;
  int path_degree(const std::vector<std::size_t>& path) const;
  std::size_t relation_source(std::size_t r) const;
  std::size_t relation_target(std::size_t r) const;
  int relation_degree(std::size_t r) const;

  // Same quiver and relations with new arrow degrees.
  GradedPresentation with_degrees(const std::vector<int>& degrees) const;
  GradedPresentation without_relation(std::size_t r) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

struct HilbertTruncation {
  std::vector<long long> dims;  // dims[m] = dim of the degree-m piece
  // per_pair[i][j][m]: paths i -> j in degree m, modulo relations.
  std::optional<std::vector<std::vector<std::vector<long long>>>> per_pair;

  std::size_t max_degree() const noexcept { return dims.empty() ? 0 : dims.size() - 1; }
};

// Abort threshold for the number of spanning vectors at a single degree.
inline constexpr std::size_t kMaxSpanningPaths = 1'000'000;

// Dimension of the degree-m piece. Throws Error if m < 0 or the spanning set
// at some degree exceeds kMaxSpanningPaths.
long long dim_piece(const GradedPresentation& p, int m);

// dims for 0..max_degree, with per-pair counts.
HilbertTruncation hilbert(const GradedPresentation& p, int max_degree);

// (i, j) entry: dimension of the i -> j part of the degree-1 piece. Throws
// Error("non-standard presentation") if some arrow has degree > 1.
Quiver gabriel_quiver(const GradedPresentation& p);

// Every arrow has degree 1.
bool is_standard(const GradedPresentation& p);

struct GkEstimate {
  double value = 0.0;
  bool degenerate = false;  // all dims zero; value is 0 by convention
};

// log_N(sum_{j <= N} d_j) at N = max_degree. Throws Error unless N >= 4.
GkEstimate gk_estimate(const HilbertTruncation& h);

// log_n(sum_{j <= n} d_j) for n = 2..N; entry k belongs to n = k + 2.
std::vector<double> gk_estimate_sequence(const HilbertTruncation& h);

// No relations.
GradedPresentation free_path_algebra(const Quiver& q, int degree = 1);

// Doubled quiver of a graph: each edge {i, j} (i < j) gives a: i -> j and
// a*: j -> i, each loop at i gives loops a, a* at i, all of degree 1. One
// relation per vertex v, written with left-to-right paths:
//   sum_{a into v} a* a  -  sum_{a out of v} a a*
// where a runs over the edges oriented from the smaller vertex (loops count
// as both). Throws Error("not a graph") on non-symmetric input.
GradedPresentation preprojective(const Quiver& g);

}  // namespace quiverkit
