#include "quiverkit/graded.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "quiverkit/error.hpp"

namespace quiverkit {

GradedPresentation::GradedPresentation(std::vector<std::string> vertices,
                                       std::vector<Arrow> arrows,
                                       std::vector<Relation> relations)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw Error("a presentation needs at least one vertex");
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size())
    throw Error("vertex labels must be distinct");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (!names.insert(a.name).second) throw Error("duplicate arrow name \"" + a.name + "\"");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw Error("arrow \"" + a.name + "\" has an unknown endpoint");
    if (a.degree < 1) throw Error("arrow \"" + a.name + "\" must have positive degree");
  }

  for (std::size_t r = 0; r < relations.size(); ++r) {
    std::map<std::vector<std::size_t>, Rational> combined;
    std::optional<std::size_t> src, tgt;
    std::optional<int> deg;
    const std::string where = "relation " + std::to_string(r);
    for (const auto& term : relations[r]) {
      if (term.path.empty()) throw Error(where + " has an empty path");
      for (std::size_t a : term.path)
        if (a >= arrows_.size()) throw Error(where + " uses an unknown arrow");
      for (std::size_t k = 1; k < term.path.size(); ++k)
        if (arrows_[term.path[k - 1]].target != arrows_[term.path[k]].source)
          throw Error(where + " has a path that is not composable (" +
                      arrows_[term.path[k - 1]].name + " then " +
                      arrows_[term.path[k]].name + ")");
      const std::size_t s = arrows_[term.path.front()].source;
      const std::size_t t = arrows_[term.path.back()].target;
      const int d = path_degree(term.path);
      if (src && (*src != s || *tgt != t))
        throw Error(where + " mixes paths with different endpoints");
      if (deg && *deg != d) throw Error(where + " is not homogeneous");
      src = s;
      tgt = t;
      deg = d;
      combined[term.path] += term.coef;
    }
    Relation clean;
    for (auto& [path, coef] : combined)
      if (coef != 0) clean.push_back(Term{coef, path});
    if (!clean.empty()) relations_.push_back(std::move(clean));
  }
}

std::optional<std::size_t> GradedPresentation::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

int GradedPresentation::path_degree(const std::vector<std::size_t>& path) const {
  int d = 0;
  for (std::size_t a : path) d += arrows_[a].degree;
  return d;
}

std::size_t GradedPresentation::relation_source(std::size_t r) const {
  return arrows_[relations_[r].front().path.front()].source;
}

std::size_t GradedPresentation::relation_target(std::size_t r) const {
  return arrows_[relations_[r].front().path.back()].target;
}

int GradedPresentation::relation_degree(std::size_t r) const {
  return path_degree(relations_[r].front().path);
}

GradedPresentation GradedPresentation::with_degrees(const std::vector<int>& degrees) const {
  if (degrees.size() != arrows_.size()) throw Error("one degree per arrow expected");
  auto arrows = arrows_;
  for (std::size_t a = 0; a < arrows.size(); ++a) arrows[a].degree = degrees[a];
  return GradedPresentation(vertices_, std::move(arrows), relations_);
}

GradedPresentation GradedPresentation::without_relation(std::size_t r) const {
  auto rels = relations_;
  rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(r));
  return GradedPresentation(vertices_, arrows_, std::move(rels));
}

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

void axpy(std::map<std::size_t, Rational>& acc, const Rational& c, const SparseVec& v) {
  for (const auto& [i, x] : v) acc[i] += c * x;
}

SparseVec to_sparse(const std::map<std::size_t, Rational>& m) {
  SparseVec out;
  for (const auto& [i, x] : m)
    if (x != 0) out.emplace_back(i, x);
  return out;
}

// A_k for one degree k: a basis with endpoints, plus right multiplication by
// each arrow a as a map A_k -> A_{k + deg a}, filled in once that degree is
// built.
struct Piece {
  std::vector<std::size_t> source, target;
  std::vector<std::vector<SparseVec>> right_mult;  // [arrow][basis index]
};

// Builds A_0, A_1, ... one degree at a time. The degree-m piece is
//   (sum_a A_{m - deg a} (x) a) / span{ b * r : r a relation, b in A_{m - deg r} }
// which equals the span of degree-m paths modulo the two-sided ideal: any
// p r q with q nonempty already vanishes in A_{m - deg(last arrow of q)}.
class QuotientTower {
 public:
  explicit QuotientTower(const GradedPresentation& p) : p_(p) {
    Piece zero;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
      zero.source.push_back(v);
      zero.target.push_back(v);
    }
    zero.right_mult.assign(p.arrows().size(), {});
    pieces_.push_back(std::move(zero));
    dims_.push_back(static_cast<long long>(p.vertex_count()));
    const std::size_t n = p.vertex_count();
    per_pair_.assign(n, std::vector<std::vector<long long>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) per_pair_[i][j].push_back(i == j ? 1 : 0);
  }

  void extend_to(int m) {
    while (static_cast<int>(pieces_.size()) <= m) build_next();
  }

  const std::vector<long long>& dims() const { return dims_; }
  const std::vector<std::vector<std::vector<long long>>>& per_pair() const { return per_pair_; }

 private:
  struct Coord {
    std::size_t arrow;
    std::size_t basis;  // index in A_{m - deg arrow}
  };

  SparseVec multiply(int k, const SparseVec& v, std::size_t arrow) const {
    std::map<std::size_t, Rational> acc;
    const auto& images = pieces_[static_cast<std::size_t>(k)].right_mult[arrow];
    for (const auto& [b, x] : v)
      if (b < images.size()) axpy(acc, x, images[b]);
    return to_sparse(acc);
  }

  void build_next() {
    const int m = static_cast<int>(pieces_.size());
    const std::size_t n = p_.vertex_count();
    const auto& arrows = p_.arrows();

    // Spanning coordinates, grouped by (source, target) block.
    std::vector<std::vector<Coord>> block_coords(n * n);
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> where;
    std::size_t total = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const int k = m - arrows[a].degree;
      if (k < 0) continue;
      const Piece& prev = pieces_[static_cast<std::size_t>(k)];
      for (std::size_t b = 0; b < prev.target.size(); ++b) {
        if (prev.target[b] != arrows[a].source) continue;
        const std::size_t blk = prev.source[b] * n + arrows[a].target;
        where[{a, b}] = {blk, block_coords[blk].size()};
        block_coords[blk].push_back({a, b});
        if (++total > kMaxSpanningPaths)
          throw Error("degree " + std::to_string(m) + " needs more than " +
                      std::to_string(kMaxSpanningPaths) + " spanning paths");
      }
    }

    // Left multiples b * r of the relations, as rows in their block.
    std::vector<std::vector<std::map<std::size_t, Rational>>> block_rows(n * n);
    for (std::size_t r = 0; r < p_.relations().size(); ++r) {
      const int k = m - p_.relation_degree(r);
      if (k < 0) continue;
      const Piece& prev = pieces_[static_cast<std::size_t>(k)];
      const std::size_t rs = p_.relation_source(r), rt = p_.relation_target(r);
      for (std::size_t b = 0; b < prev.target.size(); ++b) {
        if (prev.target[b] != rs) continue;
        const std::size_t blk = prev.source[b] * n + rt;
        std::map<std::size_t, Rational> row;
        for (const auto& term : p_.relations()[r]) {
          SparseVec v{{b, Rational(1)}};
          int deg = k;
          for (std::size_t s = 0; s + 1 < term.path.size() && !v.empty(); ++s) {
            v = multiply(deg, v, term.path[s]);
            deg += arrows[term.path[s]].degree;
          }
          const std::size_t last = term.path.back();
          for (const auto& [idx, x] : v) row[where.at({last, idx}).second] += term.coef * x;
        }
        block_rows[blk].push_back(std::move(row));
      }
    }

    Piece piece;
    piece.right_mult.assign(arrows.size(), {});
    std::vector<std::vector<SparseVec>> normal_form(n * n);  // per block coordinate
    for (std::size_t blk = 0; blk < n * n; ++blk) {
      const std::size_t cols = block_coords[blk].size();
      auto reduced = reduce(block_rows[blk], cols);
      std::vector<std::size_t> new_index(cols, static_cast<std::size_t>(-1));
      for (std::size_t c = 0; c < cols; ++c) {
        if (reduced.pivot_row[c] != static_cast<std::size_t>(-1)) continue;
        new_index[c] = piece.source.size();
        piece.source.push_back(blk / n);
        piece.target.push_back(blk % n);
      }
      auto& nf = normal_form[blk];
      nf.resize(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        if (new_index[c] != static_cast<std::size_t>(-1)) {
          nf[c] = {{new_index[c], Rational(1)}};
          continue;
        }
        // Pivot column: e_c = -sum over free columns of row entries.
        const auto& row = reduced.rows[reduced.pivot_row[c]];
        SparseVec v;
        for (std::size_t j = 0; j < cols; ++j)
          if (j != c && row[j] != 0) v.emplace_back(new_index[j], -row[j]);
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        nf[c] = std::move(v);
      }
      const long long free_cols = static_cast<long long>(cols) - static_cast<long long>(reduced.rank);
      per_pair_[blk / n][blk % n].push_back(free_cols);
    }

    // Right multiplication maps into this degree.
    for (const auto& [key, loc] : where) {
      const auto [a, b] = key;
      Piece& prev = pieces_[static_cast<std::size_t>(m - arrows[a].degree)];
      auto& images = prev.right_mult[a];
      if (images.size() < prev.target.size()) images.resize(prev.target.size());
      images[b] = normal_form[loc.first][loc.second];
    }

    dims_.push_back(static_cast<long long>(piece.source.size()));
    pieces_.push_back(std::move(piece));
  }

  struct Reduced {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivot_row;  // per column, -1 if free
    std::size_t rank = 0;
  };

  // Reduced row echelon form over the rationals.
  static Reduced reduce(const std::vector<std::map<std::size_t, Rational>>& sparse_rows,
                        std::size_t cols) {
    Reduced out;
    out.pivot_row.assign(cols, static_cast<std::size_t>(-1));
    std::vector<std::vector<Rational>> rows;
    rows.reserve(sparse_rows.size());
    for (const auto& sr : sparse_rows) {
      std::vector<Rational> dense(cols);
      bool nonzero = false;
      for (const auto& [j, x] : sr) {
        dense[j] = x;
        nonzero = nonzero || x != 0;
      }
      if (nonzero) rows.push_back(std::move(dense));
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      const Rational inv = 1 / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const Rational f = rows[i][c];
        for (std::size_t j = c; j < cols; ++j)
          if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
      out.pivot_row[c] = r;
      ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    out.rank = r;
    return out;
  }

  const GradedPresentation& p_;
  std::vector<Piece> pieces_;
  std::vector<long long> dims_;
  std::vector<std::vector<std::vector<long long>>> per_pair_;
};

}  // namespace

HilbertTruncation hilbert(const GradedPresentation& p, int max_degree) {
  if (max_degree < 0) throw Error("degree must be nonnegative");
  QuotientTower tower(p);
  tower.extend_to(max_degree);
  return HilbertTruncation{tower.dims(), tower.per_pair()};
}

long long dim_piece(const GradedPresentation& p, int m) {
  return hilbert(p, m).dims.back();
}

bool is_standard(const GradedPresentation& p) {
  return std::all_of(p.arrows().begin(), p.arrows().end(),
                     [](const Arrow& a) { return a.degree == 1; });
}

Quiver gabriel_quiver(const GradedPresentation& p) {
  if (!is_standard(p)) throw Error("non-standard presentation");
  const HilbertTruncation h = hilbert(p, 1);
  const std::size_t n = p.vertex_count();
  QuiverBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = (*h.per_pair)[i][j][1];
  b.set_labels(p.vertices());
  return b.build();
}

namespace {

double log_base(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

GkEstimate gk_estimate(const HilbertTruncation& h) {
  if (h.dims.size() < 5) throw Error("growth estimate needs dims up to degree 4 or more");
  long double total = 0;
  for (auto d : h.dims) total += static_cast<long double>(d);
  if (total == 0) return {0.0, true};
  return {log_base(static_cast<double>(total), static_cast<double>(h.max_degree())), false};
}

std::vector<double> gk_estimate_sequence(const HilbertTruncation& h) {
  std::vector<double> out;
  long double total = 0;
  for (std::size_t n = 0; n < h.dims.size(); ++n) {
    total += static_cast<long double>(h.dims[n]);
    if (n < 2) continue;
    out.push_back(total == 0 ? 0.0 : log_base(static_cast<double>(total), static_cast<double>(n)));
  }
  return out;
}

GradedPresentation free_path_algebra(const Quiver& q, int degree) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (Quiver::Entry c = 0; c < q(i, j); ++c)
        arrows.push_back({"x" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                              std::to_string(c),
                          i, j, degree});
  return GradedPresentation(q.labels(), std::move(arrows), {});
}

GradedPresentation preprojective(const Quiver& g) {
  if (!is_graph(g)) throw Error("not a graph");
  const std::size_t n = g.size();
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (a, a*) indices
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (Quiver::Entry e = 0; e < g(i, j); ++e) {
        const std::string base = "a" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                 std::to_string(e);
        pairs.emplace_back(arrows.size(), arrows.size() + 1);
        arrows.push_back({base, i, j, 1});
        arrows.push_back({base + "*", j, i, 1});
      }
    }
  }
  std::vector<Relation> relations(n);
  for (const auto& [a, star] : pairs) {
    const Arrow& arr = arrows[a];
    relations[arr.target].push_back(Term{Rational(1), {star, a}});
    relations[arr.source].push_back(Term{Rational(-1), {a, star}});
  }
  return GradedPresentation(g.labels(), std::move(arrows), std::move(relations));
}

}  // namespace quiverkit
