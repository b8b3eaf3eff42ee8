#pragma once

#include "nisub/hopf.hpp"
#include "nisub/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace nisub {

/// Center of the underlying algebra of h, in canonical echelon form.
Subspace algebra_center(const HopfAlgebra& h);

/// Minimal polynomial (monic) of x in the algebra of h.
Polynomial minimal_polynomial(const HopfAlgebra& h, const Vector& x);

/// Polynomial p evaluated at x in the algebra of h.
Vector evaluate_in(const HopfAlgebra& h, const Polynomial& p, const Vector& x);

struct CentralBlocks {
  /// Primitive central idempotents of the center over Q, in a canonical order
  /// (by their coordinate vectors).
  std::vector<Vector> idempotents;
  /// Dimension over Q of the block Z e_i (the degree of its field).
  std::vector<size_t> degrees;
  /// How many random center elements were drawn before one split fully.
  size_t attempts = 0;
};

/// Splits the center of a semisimple algebra into rational blocks by factoring
/// the minimal polynomial of seeded random central elements. Throws
/// InvariantError if the center is not reduced (not semisimple) and
/// CapExceeded after 64 unsuccessful draws.
CentralBlocks split_center(const HopfAlgebra& h, uint64_t seed);

}  // namespace nisub
