#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "quiverkit/graded.hpp"
#include "quiverkit/permutation.hpp"
#include "quiverkit/polynomial.hpp"
#include "quiverkit/quiver.hpp"

namespace testkit {

using quiverkit::BigInt;
using quiverkit::Quiver;
using quiverkit::Rational;
using quiverkit::VertexPermutation;

using Rng = std::mt19937_64;

inline Quiver random_quiver(Rng& rng, std::size_t n, Quiver::Entry max_entry) {
  std::uniform_int_distribution<Quiver::Entry> entry(0, max_entry);
  quiverkit::QuiverBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = entry(rng);
  return b.build();
}

inline Quiver random_graph(Rng& rng, std::size_t n, Quiver::Entry max_entry) {
  std::uniform_int_distribution<Quiver::Entry> entry(0, max_entry);
  quiverkit::QuiverBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b.at(i, j) = b.at(j, i) = entry(rng);
  return b.build();
}

inline VertexPermutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return VertexPermutation(image);
}

struct GraphWithAutomorphism {
  Quiver graph;
  VertexPermutation sigma;
};

// Picks a non-identity sigma first, then a graph constant on the sigma-orbits
// of vertex pairs, so sigma is an automorphism by construction.
inline GraphWithAutomorphism random_graph_with_automorphism(Rng& rng, std::size_t n,
                                                            Quiver::Entry max_entry) {
  VertexPermutation sigma = random_permutation(rng, n);
  while (sigma.is_identity()) sigma = random_permutation(rng, n);
  std::uniform_int_distribution<Quiver::Entry> entry(0, max_entry);
  std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
  quiverkit::QuiverBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (seen[i][j]) continue;
      const Quiver::Entry v = entry(rng);
      std::size_t a = i, c = j;
      while (!seen[a][c]) {
        seen[a][c] = seen[c][a] = 1;
        b.at(a, c) = b.at(c, a) = v;
        a = sigma(a);
        c = sigma(c);
      }
    }
  }
  return {b.build(), sigma};
}

// Every permutation of n points, in lexicographic order.
inline std::vector<VertexPermutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<VertexPermutation> out;
  do out.emplace_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline std::vector<VertexPermutation> brute_automorphisms(const Quiver& q) {
  std::vector<VertexPermutation> out;
  for (const auto& s : all_permutations(q.size())) {
    bool ok = true;
    for (std::size_t i = 0; i < q.size() && ok; ++i)
      for (std::size_t j = 0; j < q.size() && ok; ++j) ok = q(s(i), s(j)) == q(i, j);
    if (ok) out.push_back(s);
  }
  return out;
}

// All matrices with entries in [0, max_entry] on n vertices.
inline std::vector<Quiver> all_quivers(std::size_t n, Quiver::Entry max_entry) {
  std::vector<Quiver> out;
  const std::size_t cells = n * n;
  std::vector<Quiver::Entry> digits(cells, 0);
  while (true) {
    quiverkit::QuiverBuilder b(n);
    for (std::size_t c = 0; c < cells; ++c) b.at(c / n, c % n) = digits[c];
    out.push_back(b.build());
    std::size_t c = 0;
    while (c < cells && digits[c] == max_entry) digits[c++] = 0;
    if (c == cells) break;
    ++digits[c];
  }
  return out;
}

// Bareiss fraction-free determinant.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(x I - adj) evaluated directly.
inline BigInt char_poly_at(const Quiver& q, long long x) {
  const std::size_t n = q.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? BigInt(x) : BigInt(0)) - q(i, j);
  return bareiss_det(std::move(m));
}

// Rank of rational vectors by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

using Path = std::vector<std::size_t>;

// Paths of total degree m from vertex `from`; m = 0 gives the empty path.
inline void paths_from(const quiverkit::GradedPresentation& p, std::size_t from, int m,
                       Path& prefix, std::vector<std::pair<Path, std::size_t>>& out) {
  if (m == 0) {
    out.emplace_back(prefix, from);
    return;
  }
  for (std::size_t a = 0; a < p.arrows().size(); ++a) {
    const auto& arr = p.arrows()[a];
    if (arr.source != from || arr.degree > m) continue;
    prefix.push_back(a);
    paths_from(p, arr.target, m - arr.degree, prefix, out);
    prefix.pop_back();
  }
}

// (path, end vertex) for every path of degree m starting at `from`.
inline std::vector<std::pair<Path, std::size_t>> paths_of_degree(
    const quiverkit::GradedPresentation& p, std::size_t from, int m) {
  std::vector<std::pair<Path, std::size_t>> out;
  Path prefix;
  paths_from(p, from, m, prefix, out);
  return out;
}

// dim of the degree-m piece: paths modulo the span of every p * r * q.
inline long long brute_dim(const quiverkit::GradedPresentation& p, int m) {
  const std::size_t n = p.vertex_count();
  if (m == 0) return static_cast<long long>(n);
  long long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, std::map<Path, std::size_t>> index;  // by end vertex
    for (auto& [path, end] : paths_of_degree(p, i, m)) {
      auto& idx = index[end];
      idx.emplace(path, idx.size());
    }
    for (const auto& [j, idx] : index) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = 0; r < p.relations().size(); ++r) {
        const int dr = p.relation_degree(r);
        const std::size_t rs = p.relation_source(r), rt = p.relation_target(r);
        for (int left = 0; left + dr <= m; ++left) {
          for (const auto& [lp, lend] : paths_of_degree(p, i, left)) {
            if (lend != rs) continue;
            for (const auto& [rp, rend] : paths_of_degree(p, rt, m - left - dr)) {
              if (rend != j) continue;
              std::vector<Rational> row(idx.size(), Rational(0));
              for (const auto& term : p.relations()[r]) {
                Path full = lp;
                full.insert(full.end(), term.path.begin(), term.path.end());
                full.insert(full.end(), rp.begin(), rp.end());
                row[idx.at(full)] += term.coef;
              }
              rows.push_back(std::move(row));
            }
          }
        }
      }
      total += static_cast<long long>(idx.size() - rational_rank(std::move(rows)));
    }
  }
  return total;
}

}  // namespace testkit
