#pragma once

#include "nisub/group.hpp"
#include "nisub/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nisub {

/// Sparse vector: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<uint32_t, Rational>>;
/// Sparse element of H (x) H keyed by (left index, right index).
using Tensor2 = std::map<std::pair<uint32_t, uint32_t>, Rational>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, size_t dim);

/// Finite-dimensional Hopf *-algebra over Q given by structure tensors in a
/// fixed basis e_0..e_{n-1}. Immutable.
class HopfAlgebra {
 public:
  struct Data {
    size_t dim = 0;
    /// mult[i * dim + j] = e_i e_j.
    std::vector<SparseVector> mult;
    /// comult[i] = Delta(e_i); entry ((j, k), c) means c e_j (x) e_k.
    std::vector<Tensor2> comult;
    Vector unit;
    Vector counit;
    /// antipode[i] = S(e_i), star[i] = (e_i)*.
    std::vector<SparseVector> antipode;
    std::vector<SparseVector> star;
    std::vector<std::string> labels;
    std::string name;
  };

  /// Checks that every tensor has consistent dimensions and indices in range;
  /// throws PreconditionError otherwise. Axioms are not checked here.
  explicit HopfAlgebra(Data data);

  size_t dim() const { return d_.dim; }
  const std::string& name() const { return d_.name; }
  const std::string& label(size_t i) const { return d_.labels[i]; }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const Data& data() const { return d_; }

  const SparseVector& product(size_t i, size_t j) const { return d_.mult[i * d_.dim + j]; }
  const Tensor2& coproduct(size_t i) const { return d_.comult[i]; }
  const Vector& unit() const { return d_.unit; }
  const Vector& counit() const { return d_.counit; }
  const SparseVector& antipode_of(size_t i) const { return d_.antipode[i]; }
  const SparseVector& star_of(size_t i) const { return d_.star[i]; }

  /// Column i holds S(e_i) (resp. e_i*).
  Matrix antipode_matrix() const;
  Matrix star_matrix() const;

  Vector basis_vector(size_t i) const { return unit_vector(dim(), i); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Tensor2 comultiply(const Vector& x) const;
  Vector antipode(const Vector& x) const;
  Vector star(const Vector& x) const;
  Rational counit(const Vector& x) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

 private:
  Data d_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomResult {
  std::string name;
  bool passed = true;
  /// Basis indices exhibiting the failure (one to three of them).
  std::vector<size_t> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
  const AxiomResult* failure() const;
  std::string summary() const;
};

/// Exact check of every Hopf *-algebra axiom by tensor contraction.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h);

/// C G with basis u_g in element order.
HopfAlgebra group_algebra(const Group& g);

/// Bilinear form (f, h) = f^T form h between `left` and `right`.
struct DualPairing {
  HopfPtr left;
  HopfPtr right;
  Matrix form;
  Rational operator()(const Vector& f, const Vector& h) const;
};

struct DualResult {
  HopfPtr dual;
  DualPairing pairing;
};

/// Dual Hopf algebra in the dual basis; the pairing form is the identity.
DualResult dual_hopf(const HopfPtr& h);

/// Hopf algebra on the basis delta_a # b (a in A, b in B), index
/// a_position(a) * |B| + b_position(b). Writing a b = (a > b)(a < b) with
/// a > b in B and a < b in A:
///   (d_a # b)(d_a' # b') = [a = a' < b^-1] d_a # b b'
///   Delta(d_a # b) = sum over a1 a2 = a of (d_a1 # (a2 > b)) (x) (d_a2 # b)
///   S(d_a # b) = d_{a^-1 < (a > b)} # (a > b)^-1
///   (d_a # b)* = d_{a < b} # b^-1
/// with unit sum_a d_a # e and counit [a = e].
HopfAlgebra bicrossed_product(const MatchedPair& mp);

/// True iff `phi` (column i = image of e_i of `from`) is a bijective
/// morphism of Hopf *-algebras.
bool is_hopf_isomorphism(const HopfAlgebra& from, const HopfAlgebra& to, const Matrix& phi);

bool is_central(const Vector& x, const HopfAlgebra& h);

struct AdjointPair {
  Vector left;   // sum h1 k S(h2)
  Vector right;  // sum S(h1) k h2
};
AdjointPair adjoint_actions(const Vector& h, const Vector& k, const HopfAlgebra& alg);

/// Unital *-subalgebra with S(K) in K and Delta(K) in K (x) K.
bool is_subhopf(const Subspace& k, const HopfAlgebra& h);

/// K^perp inside pairing.left for K inside pairing.right. Throws
/// InvariantError when K^perp is not a two-sided ideal.
Subspace annihilator(const Subspace& k, const DualPairing& pairing);

/// e_K = 1 - p where p is the identity of the ideal K^perp. Throws
/// InvariantError if no identity exists or e_K is not a central idempotent.
Vector support_projection(const Subspace& k, const DualPairing& pairing);

struct ReducedDual {
  HopfPtr algebra;       // on e_K H^*, basis = reduced echelon basis of e_K H^*
  Subspace embedding;    // e_K H^* inside pairing.left
  Vector support;        // e_K
  DualPairing pairing;   // between `algebra` and restrict_to_subhopf(K)
};

/// e_K H^* with comultiplication Delta(y)(e_K (x) e_K). Throws InvariantError
/// unless dim equals dim K and the pairing with K is nondegenerate.
ReducedDual reduced_dual(const Subspace& k, const DualPairing& pairing);

/// K as a Hopf algebra in its reduced echelon basis.
HopfAlgebra restrict_to_subhopf(const Subspace& k, const HopfAlgebra& h);

struct NormalityCriteria {
  bool ad_invariant = false;
  bool augmentation_criterion = false;
};

/// Both normality tests for a subHopf K. Throws PreconditionError if K is
/// not subHopf and InvariantError if the two tests disagree.
NormalityCriteria is_normal_subhopf(const Subspace& k, const HopfAlgebra& h);

/// Span of u_h, h in `members`, inside C G.
Subspace group_subspace(const Group& g, const ElementSet& members);

struct SubhopfOptions {
  uint64_t seed = 1;
  /// Cross-check against the exhaustive subset search when the dual's center
  /// has at most this many rational blocks (0 disables).
  size_t brute_force_blocks = 0;
};

/// All subHopf algebras of H, found through central idempotents of H^*.
/// Sorted by (dim, basis). Throws CapExceeded if the candidate search grows
/// past 2^20 sets.
std::vector<Subspace> enumerate_subhopf(const HopfPtr& h, const SubhopfOptions& options = {});

/// Same result by trying every union of rational blocks. Test oracle.
std::vector<Subspace> enumerate_subhopf_exhaustive(const HopfPtr& h, uint64_t seed = 1);

// Group-model operations on C G and its dual C^G.

/// (1/|H0|) sum u_h.
Vector jones_projection_of_subgroup(const Subgroup& h0);
/// F(sum c_g u_g) = sum c_{g^-1} delta_g, in the dual basis of C G.
Vector fourier_transform(const Group& g, const Vector& x);

struct BischResult {
  bool absorbs_e_n = false;       // p e_N = e_N
  bool two_valued = false;        // coefficients of F(p) lie in {0, lambda}
  std::optional<Rational> lambda;
  bool passed() const { return absorbs_e_n && two_valued; }
};

/// Throws PreconditionError unless p is a self-adjoint idempotent of C G.
BischResult bisch_projection_test(const Group& g, const Vector& p);

}  // namespace nisub
