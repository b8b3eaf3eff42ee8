#include "nisub/permutation.hpp"

#include "nisub/error.hpp"

#include <cctype>
#include <numeric>

namespace nisub {

Permutation::Permutation(size_t degree) : image_(degree) { std::iota(image_.begin(), image_.end(), uint16_t{0}); }

Permutation::Permutation(std::vector<uint16_t> images) : image_(std::move(images)) {
  std::vector<bool> seen(image_.size(), false);
  for (uint16_t v : image_) {
    if (v >= image_.size() || seen[v]) throw PreconditionError("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw PreconditionError("Permutation product: degree mismatch");
  Permutation r;
  r.image_.resize(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) r.image_[i] = image_[rhs.image_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) r.image_[image_[i]] = static_cast<uint16_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(image_.size(), false);
  for (size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    out += "(";
    size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = image_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  size_t h = 1469598103934665603ull;
  for (uint16_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_permutation(std::string_view word, size_t degree) {
  if (degree == 0 || degree > 65535) throw ParseError("permutation degree out of range", 1, 1);
  Permutation result(degree);
  size_t i = 0;
  auto skip_space = [&] {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
  };
  skip_space();
  if (i == word.size()) throw ParseError("empty permutation word", 1, 1);
  while (i < word.size()) {
    if (word[i] != '(') throw ParseError(std::string("expected '(' but found '") + word[i] + "'", 1, i + 1);
    ++i;
    std::vector<uint16_t> cycle;
    std::vector<bool> in_cycle(degree, false);
    while (true) {
      skip_space();
      if (i < word.size() && word[i] == ',') {
        ++i;
        skip_space();
      }
      if (i == word.size()) throw ParseError("unterminated cycle", 1, i + 1);
      if (word[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(word[i]))) {
        throw ParseError(std::string("unexpected character '") + word[i] + "' in cycle", 1, i + 1);
      }
      size_t col = i + 1;
      size_t value = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
        value = value * 10 + static_cast<size_t>(word[i] - '0');
        if (value > 65536) break;
        ++i;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree), 1, col);
      }
      if (in_cycle[value - 1]) throw ParseError("point " + std::to_string(value) + " repeated in cycle", 1, col);
      in_cycle[value - 1] = true;
      cycle.push_back(static_cast<uint16_t>(value - 1));
    }
    std::vector<uint16_t> img(degree);
    std::iota(img.begin(), img.end(), uint16_t{0});
    for (size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    // The word reads left to right but composes right to left.
    result = result * Permutation(std::move(img));
    skip_space();
  }
  return result;
}

std::vector<Permutation> parse_generator_list(std::string_view text, size_t degree) {
  std::vector<Permutation> gens;
  size_t depth = 0;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string_view piece = text.substr(start, end - start);
    size_t a = piece.find_first_not_of(" \t");
    if (a == std::string_view::npos) {
      // Empty piece: allowed only for an entirely empty list.
      if (end != text.size() || !gens.empty()) throw ParseError("empty generator in list", 1, start + 1);
      return;
    }
    try {
      gens.push_back(parse_permutation(piece, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 1, start + e.column());
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) throw ParseError("unbalanced ')'", 1, i + 1);
      --depth;
    }
    if ((c == ',' || c == ';') && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", 1, text.size());
  flush(text.size());
  return gens;
}

}  // namespace nisub
