#include "quiverkit/census.hpp"

#include <set>
#include <utility>

#include "quiverkit/error.hpp"
#include "quiverkit/spectral.hpp"
#include "quiverkit/symmetry.hpp"

namespace quiverkit {

namespace {

bool matrix_less(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.matrix() < b.matrix();
}

struct QuiverLess {
  bool operator()(const Quiver& a, const Quiver& b) const { return matrix_less(a, b); }
};

bool rho_exactly_two(const Quiver& q) {
  return char_poly(q)(BigInt(2)) == 0 && !exceeds_two(q);
}

void check_census_budget(std::size_t max_vertices, Quiver::Entry max_entry) {
  if (max_vertices > 5 || max_entry > 3)
    throw Error("census budget exceeded: need max_vertices <= 5 and max_entry <= 3");
}

class SymmetricEnumerator {
 public:
  SymmetricEnumerator(std::size_t n, Quiver::Entry max_entry, bool prune)
      : n_(n), max_entry_(max_entry), prune_(prune), builder_(n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) cells_.emplace_back(i, j);
  }

  template <typename Leaf>
  void run(Leaf&& leaf) { descend(0, leaf); }

  std::uint64_t visited() const noexcept { return visited_; }

 private:
  void set(std::size_t c, Quiver::Entry v) {
    const auto [i, j] = cells_[c];
    builder_.at(i, j) = v;
    builder_.at(j, i) = v;
  }

  template <typename Leaf>
  void descend(std::size_t c, Leaf& leaf) {
    if (c == cells_.size()) {
      ++visited_;
      leaf(builder_.build());
      return;
    }
    for (Quiver::Entry v = 0; v <= max_entry_; ++v) {
      set(c, v);
      // rho is monotone in every entry, so larger values only make it worse.
      if (prune_ && v > 0 && exceeds_two(builder_.build())) break;
      descend(c + 1, leaf);
    }
    set(c, 0);
  }

  std::size_t n_;
  Quiver::Entry max_entry_;
  bool prune_;
  QuiverBuilder builder_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::uint64_t visited_ = 0;
};

CensusReport run_census(std::size_t max_vertices, Quiver::Entry max_entry, bool prune) {
  check_census_budget(max_vertices, max_entry);
  CensusReport report;
  report.max_vertices = max_vertices;
  report.max_entry = max_entry;
  std::set<Quiver, QuiverLess> found;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    SymmetricEnumerator e(n, max_entry, prune);
    e.run([&](const Quiver& q) {
      if (!is_connected(q) || !rho_exactly_two(q)) return;
      found.insert(canonical_form(q));
    });
    report.visited += e.visited();
  }
  for (const Quiver& g : found) {
    AdeClassification c = classify_ade_structural(g);
    if (!c.is_ade()) report.anomalies.push_back(g);
    report.rows.push_back({g, c});
  }
  return report;
}

}  // namespace

CensusReport census(std::size_t max_vertices, Quiver::Entry max_entry) {
  return run_census(max_vertices, max_entry, true);
}

CensusReport census_exhaustive(std::size_t max_vertices, Quiver::Entry max_entry) {
  return run_census(max_vertices, max_entry, false);
}

PretzelCensusReport pretzel_census(std::size_t max_vertices, Quiver::Entry max_entry,
                                   const SearchLimits& limits) {
  if (max_vertices > 4 || max_entry > 1)
    throw Error("pretzel census budget exceeded: need max_vertices <= 4 and max_entry <= 1");
  PretzelCensusReport report;
  report.max_vertices = max_vertices;
  report.max_entry = max_entry;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t cells = n * n;
    const auto base = static_cast<std::uint64_t>(max_entry + 1);
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) total *= base;

    std::set<Quiver, QuiverLess> classes;
    for (std::uint64_t code = 0; code < total; ++code) {
      QuiverBuilder b(n);
      std::uint64_t rest = code;
      for (std::size_t c = 0; c < cells; ++c) {
        b.at(c / n, c % n) = static_cast<Quiver::Entry>(rest % base);
        rest /= base;
      }
      classes.insert(canonical_form(b.build()));
    }

    for (const Quiver& q : classes) {
      ++report.checked;
      const bool nakayama = is_pretzelization(q).has_value();
      const PretzelOutcome outcome = pretzel_factor(q, limits);
      if (nakayama) ++report.with_nakayama;
      if (outcome.found()) ++report.factored;
      if (outcome.exhausted()) ++report.exhausted;
      if (nakayama != outcome.found()) report.disagreements.push_back(q);
    }
  }
  return report;
}

}  // namespace quiverkit
