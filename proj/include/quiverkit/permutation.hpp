#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace quiverkit {

// A bijection on {0, ..., n-1}, stored as its image array.
//
// Composition convention, used everywhere in this library:
//   compose(s, t)(i) == s(t(i))
class VertexPermutation {
 public:
  // Throws Error unless `image` is a bijection on {0, ..., image.size()-1}.
  explicit VertexPermutation(std::vector<std::size_t> image);

  static VertexPermutation identity(std::size_t n);

  // Cycle notation such as "(0 1 2)(3 4)". "()" and "" denote the identity.
  // Fixed points may be omitted. Throws Error on malformed input.
  static VertexPermutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  VertexPermutation inverse() const;
  VertexPermutation pow(long long k) const;

  // Cycles of length >= 2 ordered by smallest element, each starting at its
  // smallest element. The identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const VertexPermutation&,
                         const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation& a,
                          const VertexPermutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<std::size_t> image_;
};

// (s o t)(i) = s(t(i)). Sizes must agree.
VertexPermutation compose(const VertexPermutation& s, const VertexPermutation& t);

}  // namespace quiverkit
