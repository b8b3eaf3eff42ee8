#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nisub {

/// Permutation of {0, ..., degree-1}; image[i] is where point i goes.
/// Products compose right to left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(size_t degree);
  explicit Permutation(std::vector<uint16_t> images);

  size_t degree() const { return image_.size(); }
  const std::vector<uint16_t>& images() const { return image_; }
  uint16_t operator()(size_t point) const { return image_[point]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle notation on 1-based points, "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<uint16_t> image_;
};

/// Parses a word such as "(1 2)(3 4 5)" or "(1, 2, 3)" on points 1..degree.
/// Cycles are composed right to left. Throws ParseError (column relative to
/// the word) on malformed input, repeated points inside a cycle, or points
/// outside 1..degree.
Permutation parse_permutation(std::string_view word, size_t degree);

/// Splits a generator list "(1 2), (1 2 3 4 5)" at top-level commas or
/// semicolons and parses each word. An empty list yields no generators.
std::vector<Permutation> parse_generator_list(std::string_view text, size_t degree);

struct PermutationHash {
  size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace nisub
