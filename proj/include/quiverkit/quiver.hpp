#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace quiverkit {

// A finite quiver identified with its adjacency matrix: entry (i, j) is the
// number of arrows i -> j. A loop at i contributes 1 to (i, i).
//
// Vertices are 0-indexed. Labels are carried along for I/O only; two quivers
// compare equal when their adjacency matrices are equal.
class Quiver {
 public:
  using Entry = std::int64_t;
  using Matrix = std::vector<std::vector<Entry>>;

  // Labels default to "v0", "v1", ...
  explicit Quiver(const Matrix& adj);
  explicit Quiver(std::initializer_list<std::initializer_list<Entry>> rows)
      : Quiver(Matrix(rows.begin(), rows.end())) {}
  Quiver(std::vector<std::string> labels, const Matrix& adj);

  static Quiver zero(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Entry operator()(std::size_t i, std::size_t j) const noexcept {
    return adj_[i * n_ + j];
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Matrix matrix() const;
  std::span<const Entry> row(std::size_t i) const noexcept {
    return {adj_.data() + i * n_, n_};
  }

  Entry max_entry() const noexcept;
  Entry arrow_count() const noexcept;
  Entry out_degree(std::size_t i) const noexcept;
  Entry in_degree(std::size_t i) const noexcept;

  // Same adjacency, new labels.
  Quiver relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const Quiver& a, const Quiver& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Quiver(std::size_t n, std::vector<Entry> flat,
         std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Entry> adj_;
  std::vector<std::string> labels_;

  friend class QuiverBuilder;
};

// Mutable staging area for constructing a quiver entry by entry.
class QuiverBuilder {
 public:
  explicit QuiverBuilder(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Quiver::Entry& at(std::size_t i, std::size_t j) { return adj_[i * n_ + j]; }
  Quiver::Entry at(std::size_t i, std::size_t j) const {
    return adj_[i * n_ + j];
  }
  void add_edge(std::size_t i, std::size_t j, Quiver::Entry mult = 1);
  void set_labels(std::vector<std::string> labels) {
    labels_ = std::move(labels);
  }

  Quiver build() const;

 private:
  std::size_t n_;
  std::vector<Quiver::Entry> adj_;
  std::vector<std::string> labels_;
};

// Transposed adjacency, same labels.
Quiver opposite(const Quiver& q);

// Block-diagonal union. Labels get a "#copy" suffix to stay distinct.
// Throws Error("empty union") on an empty list.
Quiver disjoint_union(std::span<const Quiver> parts);
Quiver disjoint_union(std::initializer_list<Quiver> parts);
Quiver disjoint_power(const Quiver& q, std::size_t copies);

bool is_graph(const Quiver& q) noexcept;

// Weakly connected components, each sorted ascending, listed in order of
// their smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const Quiver& q);
bool is_connected(const Quiver& q);

bool is_strongly_connected(const Quiver& q);

// Strongly connected components in order of their smallest vertex.
std::vector<std::vector<std::size_t>> strong_components(const Quiver& q);

// Full subquiver on the given vertices, in the given order.
Quiver induced(const Quiver& q, std::span<const std::size_t> vertices);

// One node per label and adj[i][j] parallel edges, ordered by
// (source, target, copy index).
std::string to_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace quiverkit
