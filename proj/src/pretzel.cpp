#include "quiverkit/pretzel.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "quiverkit/error.hpp"
#include "quiverkit/spectral.hpp"
#include "quiverkit/symmetry.hpp"

namespace quiverkit {

namespace {

enum class Requirement { ConnectedBase, AnyBase };

struct InverseTwist {
  VertexPermutation p;
  Quiver h;
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<InverseTwist> hit;
};

bool components_pairwise_isomorphic(const Quiver& h) {
  const auto comps = connected_components(h);
  const Quiver first = induced(h, comps.front());
  for (std::size_t c = 1; c < comps.size(); ++c)
    if (!are_isomorphic(first, induced(h, comps[c]))) return false;
  return true;
}

// Lexicographic DFS over p with H(p(i), .) = M(i, .), i.e. twist(H, p) == M.
class InverseTwistSearch {
 public:
  InverseTwistSearch(const Quiver& m, Requirement req, std::uint64_t max_nodes)
      : m_(m), req_(req), max_nodes_(max_nodes), n_(m.size()),
        p_(n_, kUnset), pinv_(n_, kUnset), compatible_(n_ * n_, false) {
    // Row i of M becomes row p(i) of H, which for symmetric H equals column
    // p(i) of H, itself a rearrangement of column p(i) of M.
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<Quiver::Entry> row(m.row(i).begin(), m.row(i).end());
      std::sort(row.begin(), row.end());
      for (std::size_t k = 0; k < n_; ++k) {
        std::vector<Quiver::Entry> col(n_);
        for (std::size_t r = 0; r < n_; ++r) col[r] = m(r, k);
        std::sort(col.begin(), col.end());
        compatible_[i * n_ + k] = row == col;
      }
    }
  }

  SearchResult run() {
    SearchResult out;
    const bool complete = descend(0);
    if (hit_) {
      out.status = SearchStatus::Found;
      out.hit = std::move(hit_);
    } else {
      out.status = complete ? SearchStatus::NotFound : SearchStatus::SearchExhausted;
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Returns false to abort (solution found or budget spent).
  bool descend(std::size_t i) {
    if (++nodes_ > max_nodes_) return false;
    if (i == n_) return !accept_leaf();
    for (std::size_t k = 0; k < n_; ++k) {
      if (pinv_[k] != kUnset || !compatible_[i * n_ + k]) continue;
      p_[i] = k;
      pinv_[k] = i;
      const bool ok = consistent(i, k);
      bool keep_going = true;
      if (ok) keep_going = descend(i + 1);
      p_[i] = kUnset;
      pinv_[k] = kUnset;
      if (!keep_going) return false;
    }
    return true;
  }

  // H(a, b) = M(pinv(a), b). Symmetry: H(p(i), p(j)) == H(p(j), p(i)), i.e.
  // M(i, p(j)) == M(j, p(i)). Automorphism: H(p(a), p(b)) == H(a, b), i.e.
  // M(a, p(b)) == M(pinv(a), b).
  bool consistent(std::size_t i, std::size_t k) const {
    for (std::size_t j = 0; j < i; ++j)
      if (m_(i, p_[j]) != m_(j, k)) return false;
    auto aut_ok = [&](std::size_t a, std::size_t b) {
      if (p_[a] == kUnset || p_[b] == kUnset || pinv_[a] == kUnset) return true;
      return m_(a, p_[b]) == m_(pinv_[a], b);
    };
    for (std::size_t b = 0; b < n_; ++b) {
      if (!aut_ok(i, b) || !aut_ok(b, i) || !aut_ok(k, b)) return false;
    }
    return true;
  }

  // True when the leaf is a solution.
  bool accept_leaf() {
    VertexPermutation p(p_);
    Quiver h = permute_rows(m_, p.inverse());
    if (!is_graph(h) || !is_automorphism(h, p))
      throw InternalError("inverse-twist search accepted an invalid leaf");
    if (req_ == Requirement::ConnectedBase && !components_pairwise_isomorphic(h)) return false;
    hit_ = InverseTwist{std::move(p), std::move(h)};
    return true;
  }

  const Quiver& m_;
  Requirement req_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::size_t n_;
  std::vector<std::size_t> p_, pinv_;
  std::vector<bool> compatible_;
  std::optional<InverseTwist> hit_;
};

// Splits H into gcd-many copies of a base and expresses the twist on the
// disjoint union of those copies.
PretzelFactorization factor_from(const Quiver& target, const InverseTwist& it,
                                 FactorLevel level) {
  const Quiver& h = it.h;
  const auto comps = connected_components(h);

  // Isomorphism classes of components, in order of first appearance.
  std::vector<std::vector<std::size_t>> classes;  // indices into comps
  std::vector<Quiver> reps;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Quiver sub = induced(h, comps[c]);
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      if (are_isomorphic(reps[k], sub)) {
        classes[k].push_back(c);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({c});
      reps.push_back(sub);
    }
  }
  std::size_t copies = 0;
  for (const auto& cl : classes) copies = std::gcd(copies, cl.size());

  // Copy 0 supplies the base: the first share of each class.
  std::vector<std::size_t> base_vertices;
  for (const auto& cl : classes)
    for (std::size_t t = 0; t < cl.size() / copies; ++t)
      for (std::size_t v : comps[cl[t]]) base_vertices.push_back(v);
  const std::size_t nb = base_vertices.size();
  Quiver base = induced(h, base_vertices);

  std::vector<std::size_t> r(nb * copies);
  for (std::size_t b = 0; b < copies; ++b) {
    std::size_t offset = 0;
    for (const auto& cl : classes) {
      const std::size_t share = cl.size() / copies;
      for (std::size_t t = 0; t < share; ++t) {
        const auto& from = comps[cl[t]];
        const auto& to = comps[cl[b * share + t]];
        const auto f = find_isomorphism(induced(h, from), induced(h, to));
        if (!f) throw InternalError("components in one class are not isomorphic");
        for (std::size_t x = 0; x < from.size(); ++x) r[b * nb + offset + x] = to[(*f)(x)];
        offset += from.size();
      }
    }
  }
  VertexPermutation relabeling(std::move(r));
  VertexPermutation sigma =
      compose(relabeling.inverse(), compose(it.p, relabeling));

  PretzelFactorization out{level, std::move(base), copies, std::move(sigma),
                           std::move(relabeling), classes.size() == 1};
  if (!(reconstruct(out) == target))
    throw InternalError("pretzel factorization does not reconstruct its target");
  return out;
}

LevelResult search_level(const Quiver& target, FactorLevel level,
                         const SearchLimits& limits) {
  LevelResult out;
  SearchResult r = InverseTwistSearch(target, Requirement::ConnectedBase, limits.max_nodes).run();
  if (r.status == SearchStatus::NotFound && level == FactorLevel::Doubled)
    r = InverseTwistSearch(target, Requirement::AnyBase, limits.max_nodes).run();
  out.status = r.status;
  if (r.hit) out.factorization = factor_from(target, *r.hit, level);
  return out;
}

}  // namespace

Quiver reconstruct(const PretzelFactorization& f) {
  return relabel(twist(disjoint_power(f.base, f.copies), f.sigma), f.relabeling);
}

const PretzelFactorization* PretzelOutcome::best() const {
  if (single.factorization) return &*single.factorization;
  if (doubled.factorization) return &*doubled.factorization;
  return nullptr;
}

bool PretzelOutcome::exhausted() const {
  return single.status == SearchStatus::SearchExhausted ||
         doubled.status == SearchStatus::SearchExhausted;
}

std::optional<VertexPermutation> is_pretzelization(const Quiver& q) {
  return find_nakayama(q);
}

PretzelOutcome pretzel_factor(const Quiver& q, const SearchLimits& limits) {
  PretzelOutcome out;
  out.single = search_level(q, FactorLevel::Single, limits);
  if (out.single.factorization && !limits.search_doubled_when_single_found) return out;
  out.doubled = search_level(disjoint_union({q, q}), FactorLevel::Doubled, limits);
  return out;
}

Quiver pretzelize(const Quiver& g, std::size_t copies, const VertexPermutation& sigma) {
  if (!is_graph(g)) throw Error("not a graph");
  if (copies == 0) throw Error("copies must be positive");
  return twist(disjoint_power(g, copies), sigma);
}

std::optional<AdeClassification> pretzel_ade_check(const Quiver& q,
                                                   const SearchLimits& limits) {
  if (!is_pretzelization(q)) return std::nullopt;
  if (!spectral_radius(q).is_exactly_two) return std::nullopt;
  SearchLimits first_only = limits;
  first_only.search_doubled_when_single_found = false;
  const PretzelOutcome outcome = pretzel_factor(q, first_only);
  const PretzelFactorization* f = outcome.best();
  if (!f || !f->base_connected) return std::nullopt;
  return classify_ade(f->base);
}

}  // namespace quiverkit
