#include "quiverkit/permutation.hpp"

#include <cctype>
#include <utility>

#include "quiverkit/error.hpp"

namespace quiverkit {

VertexPermutation::VertexPermutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v])
      throw Error("image array is not a permutation of 0.." +
                  std::to_string(image_.size() == 0 ? 0 : image_.size() - 1));
    hit[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  return VertexPermutation(std::move(img));
}

VertexPermutation VertexPermutation::parse_cycles(std::string_view text,
                                                  std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::vector<bool> used(n, false);

  auto fail = [&](const std::string& why) -> Error {
    return Error("bad cycle notation \"" + std::string(text) + "\": " + why);
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw fail("unexpected character '" + std::string(1, text[pos]) + "'");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > n) throw fail("vertex out of range");
        ++pos;
      }
      if (v >= n) throw fail("vertex " + std::to_string(v) + " out of range");
      if (used[v]) throw fail("vertex " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return VertexPermutation(std::move(img));
}

bool VertexPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::pow(long long k) const {
  VertexPermutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  VertexPermutation acc = identity(size());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::string VertexPermutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (seen[s] || image_[s] == s) continue;
    out += '(';
    std::size_t v = s;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = image_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

VertexPermutation compose(const VertexPermutation& s, const VertexPermutation& t) {
  if (s.size() != t.size()) throw Error("cannot compose permutations of different sizes");
  std::vector<std::size_t> img(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) img[i] = s(t(i));
  return VertexPermutation(std::move(img));
}

}  // namespace quiverkit
