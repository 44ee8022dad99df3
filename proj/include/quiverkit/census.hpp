#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quiverkit/ade.hpp"
#include "quiverkit/pretzel.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

struct CensusRow {
  Quiver graph;  // canonical form
  AdeClassification classification;
};

struct CensusReport {
  std::size_t max_vertices = 0;
  Quiver::Entry max_entry = 0;
  std::vector<CensusRow> rows;  // sorted by (size, adjacency)
  std::vector<Quiver> anomalies;  // rho = 2 but NotADE
  std::uint64_t visited = 0;      // symmetric matrices examined
};

// Connected symmetric quivers up to isomorphism with spectral radius exactly
// 2. Entries are raised one at a time and abandoned once the partial matrix
// already exceeds 2. Throws Error if max_vertices > 5 or max_entry > 3.
CensusReport census(std::size_t max_vertices, Quiver::Entry max_entry);

// Unpruned variant of the same enumeration (every matrix is visited). Same
// guard; meant for cross-checks at small sizes.
CensusReport census_exhaustive(std::size_t max_vertices, Quiver::Entry max_entry);

struct PretzelCensusReport {
  std::size_t max_vertices = 0;
  Quiver::Entry max_entry = 0;
  std::uint64_t checked = 0;
  std::uint64_t with_nakayama = 0;
  std::uint64_t factored = 0;
  std::uint64_t exhausted = 0;
  std::vector<Quiver> disagreements;
};

// Every quiver (not only graphs) with 1..max_vertices vertices and entries
// <= max_entry, one per isomorphism class: compares is_pretzelization with
// pretzel_factor. Throws Error if max_vertices > 4 or max_entry > 1.
PretzelCensusReport pretzel_census(std::size_t max_vertices, Quiver::Entry max_entry,
                                   const SearchLimits& limits = {});

}  // namespace quiverkit
