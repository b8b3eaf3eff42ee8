#pragma once

#include "nisub/hopf.hpp"

#include <algorithm>

namespace nisub::detail {

/// Dense scratch accumulator that remembers touched indices, so repeated
/// sparse sums avoid map allocations.
class Accumulator {
 public:
  explicit Accumulator(size_t dim) : values_(dim), used_(dim, false) {}

  void add(uint32_t i, const Rational& c) {
    if (!used_[i]) {
      used_[i] = true;
      touched_.push_back(i);
    }
    values_[i] += c;
  }
  void add(const SparseVector& v, const Rational& scale) {
    for (const auto& [i, c] : v) add(i, c * scale);
  }
  void add(const SparseVector& v) {
    for (const auto& [i, c] : v) add(i, c);
  }

  /// Returns the sparse sum and resets the accumulator.
  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    for (uint32_t i : touched_) {
      if (sgn(values_[i]) != 0) out.emplace_back(i, values_[i]);
      values_[i] = 0;
      used_[i] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Rational> values_;
  std::vector<bool> used_;
  std::vector<uint32_t> touched_;
};

inline void add_to(Tensor2& t, uint32_t a, uint32_t b, const Rational& c) {
  auto [it, inserted] = t.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

inline void prune(Tensor2& t) {
  for (auto it = t.begin(); it != t.end();) {
    if (sgn(it->second) == 0) {
      it = t.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace nisub::detail
