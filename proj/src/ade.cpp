#include "quiverkit/ade.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "quiverkit/error.hpp"
#include "quiverkit/spectral.hpp"

namespace quiverkit {

std::string_view family_name(AdeFamily f) {
  switch (f) {
    case AdeFamily::ATilde: return "A-tilde";
    case AdeFamily::DTilde: return "D-tilde";
    case AdeFamily::LTilde: return "L-tilde";
    case AdeFamily::DLTilde: return "DL-tilde";
    case AdeFamily::E6Tilde: return "E6-tilde";
    case AdeFamily::E7Tilde: return "E7-tilde";
    case AdeFamily::E8Tilde: return "E8-tilde";
    case AdeFamily::NotADE: return "NotADE";
  }
  return "NotADE";
}

std::string AdeClassification::to_string() const {
  std::string s(family_name(family));
  if (index) s += "_" + std::to_string(*index);
  return s;
}

AdeFamily parse_family(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s.size() > 6 && s.ends_with("-TILDE")) s.resize(s.size() - 6);
  if (s == "A") return AdeFamily::ATilde;
  if (s == "D") return AdeFamily::DTilde;
  if (s == "L") return AdeFamily::LTilde;
  if (s == "DL") return AdeFamily::DLTilde;
  if (s == "E6") return AdeFamily::E6Tilde;
  if (s == "E7") return AdeFamily::E7Tilde;
  if (s == "E8") return AdeFamily::E8Tilde;
  throw Error("unknown family \"" + std::string(name) +
              "\" (expected A, D, L, DL, E6, E7 or E8)");
}

int min_index(AdeFamily f) {
  switch (f) {
    case AdeFamily::ATilde: return 1;
    case AdeFamily::DTilde: return 4;
    case AdeFamily::LTilde: return 0;
    case AdeFamily::DLTilde: return 2;
    default: return 0;
  }
}

namespace {

bool indexed(AdeFamily f) {
  return f == AdeFamily::ATilde || f == AdeFamily::DTilde ||
         f == AdeFamily::LTilde || f == AdeFamily::DLTilde;
}

// Centre 0, then each arm numbered outward.
Quiver star_with_arms(std::initializer_list<int> arms) {
  int n = 1;
  for (int a : arms) n += a;
  QuiverBuilder b(static_cast<std::size_t>(n));
  std::size_t next = 1;
  for (int a : arms) {
    std::size_t prev = 0;
    for (int k = 0; k < a; ++k) {
      b.add_edge(prev, next);
      prev = next++;
    }
  }
  return b.build();
}

}  // namespace

Quiver make_ade(AdeFamily f, std::optional<int> index) {
  if (f == AdeFamily::NotADE) throw Error("NotADE names no graph");
  if (!indexed(f)) {
    if (index) throw Error(std::string(family_name(f)) + " takes no index");
    switch (f) {
      case AdeFamily::E6Tilde: return star_with_arms({2, 2, 2});
      case AdeFamily::E7Tilde: return star_with_arms({1, 3, 3});
      default: return star_with_arms({1, 2, 5});
    }
  }
  if (!index || *index < min_index(f))
    throw Error(std::string(family_name(f)) + " index must be an integer >= " +
                std::to_string(min_index(f)));
  const int n = *index;
  const auto un = static_cast<std::size_t>(n);
  switch (f) {
    case AdeFamily::ATilde: {
      QuiverBuilder b(un + 1);
      if (n == 1) {
        b.add_edge(0, 1, 2);
      } else {
        for (std::size_t i = 0; i <= un; ++i) b.add_edge(i, (i + 1) % (un + 1));
      }
      return b.build();
    }
    case AdeFamily::DTilde: {
      QuiverBuilder b(un + 1);
      if (n == 4) {
        for (std::size_t leaf : {0u, 1u, 3u, 4u}) b.add_edge(leaf, 2);
      } else {
        b.add_edge(0, 2);
        b.add_edge(1, 2);
        for (std::size_t i = 2; i + 2 < un; ++i) b.add_edge(i, i + 1);
        b.add_edge(un - 1, un - 2);
        b.add_edge(un, un - 2);
      }
      return b.build();
    }
    case AdeFamily::LTilde: {
      QuiverBuilder b(un + 1);
      if (n == 0) {
        b.at(0, 0) = 2;
      } else {
        for (std::size_t i = 0; i < un; ++i) b.add_edge(i, i + 1);
        b.add_edge(0, 0);
        b.add_edge(un, un);
      }
      return b.build();
    }
    default: {  // DL-tilde
      QuiverBuilder b(un + 1);
      b.add_edge(0, 2);
      b.add_edge(1, 2);
      for (std::size_t i = 2; i < un; ++i) b.add_edge(i, i + 1);
      b.add_edge(un, un);
      return b.build();
    }
  }
}

namespace {

struct Shape {
  std::size_t n;
  std::vector<Quiver::Entry> loops;
  std::vector<Quiver::Entry> degree;  // off-diagonal
  std::vector<std::vector<std::size_t>> nbrs;
};

Shape shape_of(const Quiver& g) {
  Shape s{g.size(), {}, {}, {}};
  s.loops.resize(s.n);
  s.degree.resize(s.n);
  s.nbrs.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.loops[i] = g(i, i);
    for (std::size_t j = 0; j < s.n; ++j) {
      if (i == j || g(i, j) == 0) continue;
      s.degree[i] += g(i, j);
      s.nbrs[i].push_back(j);
    }
  }
  return s;
}

// Vertices on the arm leaving `centre` through `start`. Assumes every vertex
// other than the centre has degree <= 2 and the graph is a tree.
int arm_length(const Shape& s, std::size_t centre, std::size_t start) {
  int len = 1;
  std::size_t prev = centre, cur = start;
  for (;;) {
    std::size_t next = s.n;
    for (std::size_t v : s.nbrs[cur])
      if (v != prev) next = v;
    if (next == s.n) return len;
    prev = cur;
    cur = next;
    ++len;
  }
}

// Far end of the arm from `centre` through `start`.
std::size_t arm_end(const Shape& s, std::size_t centre, std::size_t start) {
  std::size_t prev = centre, cur = start;
  for (;;) {
    std::size_t next = s.n;
    for (std::size_t v : s.nbrs[cur])
      if (v != prev) next = v;
    if (next == s.n) return cur;
    prev = cur;
    cur = next;
  }
}

// Sorted ascending.
std::vector<int> arm_lengths(const Shape& s, std::size_t centre) {
  std::vector<int> out;
  for (std::size_t start : s.nbrs[centre]) out.push_back(arm_length(s, centre, start));
  std::sort(out.begin(), out.end());
  return out;
}

AdeClassification make(AdeFamily f, std::optional<int> idx = std::nullopt) {
  return {f, idx};
}

}  // namespace

AdeClassification classify_ade_structural(const Quiver& g) {
  if (!is_graph(g)) throw Error("not a graph");
  if (!is_connected(g)) throw Error("classify components separately");
  const AdeClassification none{};
  const Shape s = shape_of(g);
  const std::size_t n = s.n;
  const int last = static_cast<int>(n) - 1;

  if (n == 1) return g(0, 0) == 2 ? make(AdeFamily::LTilde, 0) : none;
  if (n == 2 && g(0, 1) == 2 && s.loops[0] == 0 && s.loops[1] == 0)
    return make(AdeFamily::ATilde, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.loops[i] > 1) return none;
    for (std::size_t j : s.nbrs[i])
      if (g(i, j) > 1) return none;
  }

  Quiver::Entry degree_sum = 0;
  std::size_t loop_count = 0;
  std::vector<std::size_t> branch;  // degree >= 3
  for (std::size_t i = 0; i < n; ++i) {
    degree_sum += s.degree[i];
    if (s.loops[i] > 0) ++loop_count;
    if (s.degree[i] >= 3) branch.push_back(i);
  }
  const auto edges = static_cast<std::size_t>(degree_sum / 2);

  if (edges == n) {
    const bool cycle = loop_count == 0 &&
        std::all_of(s.degree.begin(), s.degree.end(), [](auto d) { return d == 2; });
    return cycle ? make(AdeFamily::ATilde, last) : none;
  }
  if (edges != n - 1) return none;

  // Trees from here on.
  if (loop_count == 2) {
    if (!branch.empty()) return none;
    for (std::size_t i = 0; i < n; ++i)
      if (s.loops[i] > 0 && s.degree[i] != 1) return none;
    return make(AdeFamily::LTilde, last);
  }

  if (loop_count == 1) {
    const auto loop_at = static_cast<std::size_t>(
        std::find_if(s.loops.begin(), s.loops.end(), [](auto l) { return l > 0; }) -
        s.loops.begin());
    if (n == 3)
      return s.degree[loop_at] == 2 ? make(AdeFamily::DLTilde, 2) : none;
    if (branch.size() != 1 || s.degree[branch[0]] != 3 || s.degree[loop_at] != 1)
      return none;
    // Two single-vertex arms, and a long arm of n - 3 vertices ending in the loop.
    const std::size_t b = branch[0];
    std::vector<int> short_arms;
    bool long_arm_ok = false;
    for (std::size_t start : s.nbrs[b]) {
      if (arm_end(s, b, start) == loop_at)
        long_arm_ok = arm_length(s, b, start) == static_cast<int>(n) - 3;
      else
        short_arms.push_back(arm_length(s, b, start));
    }
    if (long_arm_ok && short_arms == std::vector<int>{1, 1})
      return make(AdeFamily::DLTilde, last);
    return none;
  }

  if (loop_count != 0) return none;

  if (branch.size() == 1 && s.degree[branch[0]] == 4)
    return n == 5 ? make(AdeFamily::DTilde, 4) : none;
  if (branch.size() == 1 && s.degree[branch[0]] == 3) {
    const auto arms = arm_lengths(s, branch[0]);
    if (arms == std::vector<int>{2, 2, 2}) return make(AdeFamily::E6Tilde);
    if (arms == std::vector<int>{1, 3, 3}) return make(AdeFamily::E7Tilde);
    if (arms == std::vector<int>{1, 2, 5}) return make(AdeFamily::E8Tilde);
    return none;
  }
  if (branch.size() == 2 && s.degree[branch[0]] == 3 && s.degree[branch[1]] == 3) {
    for (std::size_t b : branch) {
      std::size_t leaves = 0;
      for (std::size_t v : s.nbrs[b])
        if (s.degree[v] == 1) ++leaves;
      if (leaves != 2) return none;
    }
    return make(AdeFamily::DTilde, last);
  }
  return none;
}

AdeClassification classify_ade(const Quiver& g) {
  const AdeClassification c = classify_ade_structural(g);
  const bool two = spectral_radius(g).is_exactly_two;
  if (c.is_ade() != two)
    throw InternalError("structural classification " + c.to_string() +
                        " disagrees with the exact spectral test (rho == 2 is " +
                        (two ? "true" : "false") + ")");
  return c;
}

}  // namespace quiverkit
