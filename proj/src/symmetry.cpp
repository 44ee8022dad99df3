#include "quiverkit/symmetry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "quiverkit/error.hpp"

namespace quiverkit {

namespace {

using Signature = std::tuple<Quiver::Entry, Quiver::Entry, Quiver::Entry,
                             std::vector<Quiver::Entry>, std::vector<Quiver::Entry>>;

// Isomorphism-invariant per-vertex data: in-degree, out-degree, loops and
// the sorted multisets of the row and column.
std::vector<Signature> signatures(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<Signature> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Quiver::Entry> r(q.row(i).begin(), q.row(i).end());
    std::vector<Quiver::Entry> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = q(k, i);
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    out.emplace_back(q.in_degree(i), q.out_degree(i), q(i, i), std::move(r),
                     std::move(c));
  }
  return out;
}

// Depth-first search over bijections f: a -> b, vertex 0 first, images in
// ascending order. Stops when `visit` returns false.
class IsoSearch {
 public:
  IsoSearch(const Quiver& a, const Quiver& b,
            const std::function<bool(const VertexPermutation&)>& visit)
      : a_(a), b_(b), visit_(visit), n_(a.size()),
        sig_a_(signatures(a)), sig_b_(signatures(b)),
        image_(n_, 0), used_(n_, false) {}

  void run() {
    if (a_.size() != b_.size()) return;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
    descend(0);
  }

 private:
  bool descend(std::size_t i) {
    if (i == n_) return visit_(VertexPermutation(image_));
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || sig_a_[i] != sig_b_[t]) continue;
      if (!consistent(i, t)) continue;
      image_[i] = t;
      used_[t] = true;
      const bool keep_going = descend(i + 1);
      used_[t] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  bool consistent(std::size_t i, std::size_t t) const {
    if (a_(i, i) != b_(t, t)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t u = image_[j];
      if (a_(i, j) != b_(t, u) || a_(j, i) != b_(u, t)) return false;
    }
    return true;
  }

  const Quiver& a_;
  const Quiver& b_;
  const std::function<bool(const VertexPermutation&)>& visit_;
  std::size_t n_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_automorphism(const Quiver& q, const VertexPermutation& s) {
  if (s.size() != q.size()) return false;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q(s(i), s(j)) != q(i, j)) return false;
  return true;
}

void for_each_automorphism(const Quiver& q,
                           const std::function<bool(const VertexPermutation&)>& visit) {
  IsoSearch(q, q, visit).run();
}

std::vector<VertexPermutation> automorphisms(const Quiver& q) {
  std::vector<VertexPermutation> out;
  for_each_automorphism(q, [&](const VertexPermutation& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Quiver permute_rows(const Quiver& q, const VertexPermutation& s) {
  if (s.size() != q.size())
    throw Error("permutation acts on " + std::to_string(s.size()) +
                " vertices but the quiver has " + std::to_string(q.size()));
  QuiverBuilder b(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) b.at(i, j) = q(s(i), j);
  b.set_labels(q.labels());
  return b.build();
}

Quiver twist(const Quiver& q, const VertexPermutation& s) {
  if (s.size() != q.size())
    throw Error("permutation acts on " + std::to_string(s.size()) +
                " vertices but the quiver has " + std::to_string(q.size()));
  if (!is_automorphism(q, s)) throw Error("not an automorphism");
  Quiver by_rows = permute_rows(q, s);
  const VertexPermutation inv = s.inverse();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (by_rows(i, j) != q(i, inv(j)))
        throw InternalError("row and column forms of the twist disagree");
  return by_rows;
}

std::optional<VertexPermutation> find_nakayama(const Quiver& q) {
  const Quiver op = opposite(q);
  std::optional<VertexPermutation> found;
  for_each_automorphism(q, [&](const VertexPermutation& s) {
    if (permute_rows(q, s) == op) {
      found = s;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<VertexPermutation> find_isomorphism(const Quiver& a, const Quiver& b) {
  std::optional<VertexPermutation> found;
  IsoSearch(a, b, [&](const VertexPermutation& f) {
    found = f;
    return false;
  }).run();
  return found;
}

bool are_isomorphic(const Quiver& a, const Quiver& b) {
  return find_isomorphism(a, b).has_value();
}

Quiver relabel(const Quiver& q, const VertexPermutation& f) {
  if (f.size() != q.size()) throw Error("relabeling has the wrong size");
  QuiverBuilder b(q.size());
  std::vector<std::string> labels(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    labels[f(i)] = q.labels()[i];
    for (std::size_t j = 0; j < q.size(); ++j) b.at(f(i), f(j)) = q(i, j);
  }
  b.set_labels(std::move(labels));
  return b.build();
}

Quiver canonical_form(const Quiver& q) {
  const std::size_t n = q.size();
  if (n > 8) throw Error("canonical_form is exhaustive and limited to 8 vertices");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Quiver::Entry> best, cur(n * n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = q(order[i], order[j]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(order.begin(), order.end()));
  QuiverBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = best[i * n + j];
  return b.build();
}

}  // namespace quiverkit
