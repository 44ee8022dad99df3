#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "quiverkit/ade.hpp"
#include "quiverkit/permutation.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Which quiver was written as a twist of copies of the base: Q itself, or
// the disjoint union Q u Q.
enum class FactorLevel { Single, Doubled };

// Witness that target == relabel(twist(base^{u copies}, sigma), relabeling),
// where target is Q (Single) or disjoint_union(Q, Q) (Doubled).
struct PretzelFactorization {
  FactorLevel level = FactorLevel::Doubled;
  Quiver base;
  std::size_t copies = 1;
  VertexPermutation sigma;       // automorphism of disjoint_power(base, copies)
  VertexPermutation relabeling;  // union vertex -> target vertex
  bool base_connected = true;
};

// relabel(twist(disjoint_power(f.base, f.copies), f.sigma), f.relabeling)
Quiver reconstruct(const PretzelFactorization& f);

enum class SearchStatus { Found, NotFound, SearchExhausted };

struct LevelResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<PretzelFactorization> factorization;
};

struct PretzelOutcome {
  LevelResult single;
  LevelResult doubled;

  // Single level first, then doubled.
  const PretzelFactorization* best() const;
  bool found() const { return best() != nullptr; }
  bool exhausted() const;
};

struct SearchLimits {
  std::uint64_t max_nodes = 20'000'000;  // per level and pass
  bool search_doubled_when_single_found = true;
};

// Nakayama automorphism of q, if any: the pretzelization criterion.
std::optional<VertexPermutation> is_pretzelization(const Quiver& q);

// Searches for the lexicographically least permutation p of the vertices of
// the target T (q, then q u q) such that H, defined by twist(H, p) == T, is
// symmetric with p in Aut(H), and splits H into copies of a base graph.
//
// Single level: H's components must be pairwise isomorphic (connected base).
// Doubled level: connected bases are preferred; failing that, the least p
// with H symmetric and p in Aut(H) is used and H is split into gcd-many
// copies of a possibly disconnected base.
PretzelOutcome pretzel_factor(const Quiver& q, const SearchLimits& limits = {});

// twist(disjoint_power(g, copies), sigma). Throws Error("not a graph") when g
// is not symmetric; twist errors propagate.
Quiver pretzelize(const Quiver& g, std::size_t copies, const VertexPermutation& sigma);

// ADE type of the base when q has a Nakayama automorphism, rho(q) == 2 exactly
// and a factorization with connected base is found; nullopt otherwise.
std::optional<AdeClassification> pretzel_ade_check(const Quiver& q,
                                                   const SearchLimits& limits = {});

}  // namespace quiverkit
