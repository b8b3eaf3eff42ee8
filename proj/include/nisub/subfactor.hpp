#pragma once

#include "nisub/fusion.hpp"
#include "nisub/group.hpp"
#include "nisub/hopf.hpp"
#include "nisub/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nisub {

enum class ScenarioKind { CrossedProduct, FixedPoint, IntermediateCrossed, IntermediateFixed, GroupType };

std::string to_string(ScenarioKind k);
/// Accepts the snake_case names produced by to_string.
std::optional<ScenarioKind> parse_scenario_kind(const std::string& s);

/// One of the five finite inclusion models:
///   crossed_product(G)          N in N x| G
///   fixed_point(G)              M^G in M
///   intermediate_crossed(H, G)  P x| H in P x| G
///   intermediate_fixed(H, G)    P^G in P^H
///   group_type(A, B)            P^A in P x| B, G = <A, B>, A cap B = {e}
class InclusionScenario {
 public:
  static InclusionScenario crossed_product(const GroupPtr& g);
  static InclusionScenario fixed_point(const GroupPtr& g);
  static InclusionScenario intermediate_crossed(const Subgroup& h);
  static InclusionScenario intermediate_fixed(const Subgroup& h);
  /// Throws PreconditionError unless A cap B = {e} and A, B generate the group.
  static InclusionScenario group_type(const Subgroup& a, const Subgroup& b);

  ScenarioKind kind() const { return kind_; }
  const GroupPtr& group() const { return group_; }
  /// H for the intermediate kinds.
  const Subgroup& h() const { return h_; }
  const Subgroup& a() const { return a_; }
  const Subgroup& b() const { return b_; }
  /// group_type only: G = AB.
  bool exact_factorization() const { return exact_; }
  std::string describe() const;

 private:
  ScenarioKind kind_ = ScenarioKind::CrossedProduct;
  GroupPtr group_;
  Subgroup h_, a_, b_;
  bool exact_ = false;
};

enum class Family { CrossedBy, FixedBy };

std::string to_string(Family f);

struct IntermediateObject {
  Family family = Family::CrossedBy;
  Subgroup subgroup;
  std::string name;
  bool is_bottom = false;  // K = N
  bool is_top = false;     // K = M
};

/// Canonical order: crossed and fixed kinds follow subgroup enumeration order;
/// group_type lists FixedBy(A0) for A0 != {e} from N upward, then P, then
/// CrossedBy(H) for H != {e}.
std::vector<IntermediateObject> intermediate_catalog(const InclusionScenario& s);

/// K <= L as intermediate subfactors.
bool intermediate_leq(const InclusionScenario& s, const IntermediateObject& k, const IntermediateObject& l);

enum class NormalVerdict { Normal, NotNormal, NotCovered };
std::string to_string(NormalVerdict v);

struct NormalResult {
  NormalVerdict verdict = NormalVerdict::NotCovered;
  /// Name of the criterion applied.
  std::string criterion;
  /// Human-readable evaluation steps, including witnesses.
  std::vector<std::string> trace;
  /// Group element witnessing a failed identity, when one exists.
  std::optional<Element> witness;
  bool is_normal() const { return verdict == NormalVerdict::Normal; }
};

/// Throws PreconditionError if k is not in the catalog of s.
NormalResult is_normal_intermediate(const InclusionScenario& s, const IntermediateObject& k);

enum class QuasiVerdict { QuasiNormal, NotQuasiNormal, Unsupported };
std::string to_string(QuasiVerdict v);

struct QuasiResult {
  QuasiVerdict verdict = QuasiVerdict::Unsupported;
  /// Name of a catalogued intermediate whose subgroup does not permute.
  std::optional<std::string> obstruction;
};

/// Product-set permutability of the defining subgroup against every
/// catalogued intermediate. Unsupported for group_type.
QuasiResult is_quasi_normal(const InclusionScenario& s, const IntermediateObject& k);
/// is_quasi_normal for every entry of a precomputed catalog.
std::vector<QuasiResult> quasi_normal_table(const InclusionScenario& s, const std::vector<IntermediateObject>& catalog);

struct NormalSublatticeReport {
  std::vector<IntermediateObject> catalog;
  std::vector<NormalResult> verdicts;
  FiniteLattice lattice;             // the catalog ordered by inclusion
  std::vector<bool> normal_flags;    // per catalog entry
  std::vector<Node> normal_nodes;
  bool is_sublattice = false;
  bool modular = false;
  std::optional<std::array<Node, 3>> modularity_witness;  // in normal-sublattice ids
  std::map<size_t, uint64_t> chain_lengths;               // of the normal sublattice
  bool catalog_complete = true;
  /// Length of the normal sublattice when every maximal chain agrees.
  std::optional<size_t> length() const;
};

NormalSublatticeReport normal_sublattice_report(const InclusionScenario& s);

enum class Depth2Verdict { Depth2, NotDepth2, Unknown };
std::string to_string(Depth2Verdict v);
Depth2Verdict depth2_status(const InclusionScenario& s);

struct CrosscheckRow {
  std::string name;
  bool normal_intermediate = false;  // (i)
  bool central_projection = false;   // (ii)
  bool normal_subhopf = false;       // (iii)
  bool bisch_test = false;           // (iv)
  bool agrees() const {
    return normal_intermediate == central_projection && central_projection == normal_subhopf && bisch_test;
  }
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool all_agree() const;
};

/// Four-way agreement per subgroup; crossed_product and fixed_point only.
CrosscheckReport hopf_crosscheck(const InclusionScenario& s);

/// crossed_product(G1 x G2). Throws InvariantError unless G1 x {e} and
/// {e} x G2 are flagged normal.
InclusionScenario tensor_scenario(const InclusionScenario& s1, const InclusionScenario& s2);

/// A0 B == B A0 for the FixedBy family of a group_type scenario.
bool fixed_family_permutes(const InclusionScenario& s, const Subgroup& a0);

}  // namespace nisub
