#include "quiverkit/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "quiverkit/error.hpp"

namespace quiverkit {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n)
    throw Error("label count " + std::to_string(labels.size()) +
                " does not match vertex count " + std::to_string(n));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error("vertex labels must be distinct");
}

std::vector<Quiver::Entry> flatten(const Quiver::Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) throw Error("a quiver needs at least one vertex");
  std::vector<Quiver::Entry> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() != n)
      throw Error("adjacency matrix is not square (row " + std::to_string(i) +
                  " has " + std::to_string(adj[i].size()) + " entries, expected " +
                  std::to_string(n) + ")");
    for (auto e : adj[i]) {
      if (e < 0) throw Error("adjacency entries must be nonnegative");
      flat.push_back(e);
    }
  }
  return flat;
}

}  // namespace

Quiver::Quiver(const Matrix& adj)
    : Quiver(adj.size(), flatten(adj), default_labels(adj.size())) {}

Quiver::Quiver(std::vector<std::string> labels, const Matrix& adj)
    : Quiver(adj.size(), flatten(adj), std::move(labels)) {}

Quiver::Quiver(std::size_t n, std::vector<Entry> flat,
               std::vector<std::string> labels)
    : n_(n), adj_(std::move(flat)), labels_(std::move(labels)) {
  if (n_ == 0) throw Error("a quiver needs at least one vertex");
  check_labels(labels_, n_);
}

Quiver Quiver::zero(std::size_t n) { return QuiverBuilder(n).build(); }

Quiver::Matrix Quiver::matrix() const {
  Matrix m(n_, std::vector<Entry>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  return m;
}

Quiver::Entry Quiver::max_entry() const noexcept {
  return *std::max_element(adj_.begin(), adj_.end());
}

Quiver::Entry Quiver::arrow_count() const noexcept {
  return std::accumulate(adj_.begin(), adj_.end(), Entry{0});
}

Quiver::Entry Quiver::out_degree(std::size_t i) const noexcept {
  auto r = row(i);
  return std::accumulate(r.begin(), r.end(), Entry{0});
}

Quiver::Entry Quiver::in_degree(std::size_t i) const noexcept {
  Entry s = 0;
  for (std::size_t k = 0; k < n_; ++k) s += (*this)(k, i);
  return s;
}

Quiver Quiver::relabeled(std::vector<std::string> labels) const {
  return Quiver(n_, adj_, std::move(labels));
}

QuiverBuilder::QuiverBuilder(std::size_t n) : n_(n), adj_(n * n, 0) {
  if (n == 0) throw Error("a quiver needs at least one vertex");
}

void QuiverBuilder::add_edge(std::size_t i, std::size_t j, Quiver::Entry mult) {
  if (i == j) {
    at(i, i) += mult;
  } else {
    at(i, j) += mult;
    at(j, i) += mult;
  }
}

Quiver QuiverBuilder::build() const {
  for (auto e : adj_)
    if (e < 0) throw Error("adjacency entries must be nonnegative");
  return Quiver(n_, adj_, labels_.empty() ? default_labels(n_) : labels_);
}

Quiver opposite(const Quiver& q) {
  QuiverBuilder b(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) b.at(j, i) = q(i, j);
  b.set_labels(q.labels());
  return b.build();
}

Quiver disjoint_union(std::span<const Quiver> parts) {
  if (parts.empty()) throw Error("empty union");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  QuiverBuilder b(total);
  std::vector<std::string> labels;
  labels.reserve(total);
  std::size_t offset = 0;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& p = parts[c];
    for (std::size_t i = 0; i < p.size(); ++i) {
      labels.push_back(p.labels()[i] + "#" + std::to_string(c));
      for (std::size_t j = 0; j < p.size(); ++j)
        b.at(offset + i, offset + j) = p(i, j);
    }
    offset += p.size();
  }
  b.set_labels(std::move(labels));
  return b.build();
}

Quiver disjoint_union(std::initializer_list<Quiver> parts) {
  return disjoint_union(std::span<const Quiver>(parts.begin(), parts.size()));
}

Quiver disjoint_power(const Quiver& q, std::size_t copies) {
  std::vector<Quiver> parts(copies, q);
  return disjoint_union(parts);
}

bool is_graph(const Quiver& q) noexcept {
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (q(i, j) != q(j, i)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    const std::size_t id = out.size();
    std::vector<std::size_t> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t u = members[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] == n && (q(u, v) > 0 || q(v, u) > 0)) {
          comp[v] = id;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Quiver& q) { return connected_components(q).size() == 1; }

namespace {

// reach[i][j]: a directed path of length >= 0 runs from i to j.
std::vector<std::vector<bool>> reachability(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (q(u, v) > 0 && !reach[s][v]) {
          reach[s][v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

}  // namespace

bool is_strongly_connected(const Quiver& q) {
  const auto reach = reachability(q);
  for (const auto& r : reach)
    for (bool b : r)
      if (!b) return false;
  return true;
}

std::vector<std::vector<std::size_t>> strong_components(const Quiver& q) {
  const std::size_t n = q.size();
  const auto reach = reachability(q);
  std::vector<bool> placed(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::vector<std::size_t> members;
    for (std::size_t v = s; v < n; ++v) {
      if (reach[s][v] && reach[v][s]) {
        placed[v] = true;
        members.push_back(v);
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

Quiver induced(const Quiver& q, std::span<const std::size_t> vertices) {
  QuiverBuilder b(vertices.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    labels.push_back(q.labels()[vertices[a]]);
    for (std::size_t c = 0; c < vertices.size(); ++c)
      b.at(a, c) = q(vertices[a], vertices[c]);
  }
  b.set_labels(std::move(labels));
  return b.build();
}

std::string to_dot(const Quiver& q, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (const auto& l : q.labels()) os << "  " << quote(l) << ";\n";
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (Quiver::Entry c = 0; c < q(i, j); ++c)
        os << "  " << quote(q.labels()[i]) << " -> " << quote(q.labels()[j])
           << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace quiverkit
