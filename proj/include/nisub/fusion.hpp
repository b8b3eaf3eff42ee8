#pragma once

#include "nisub/group.hpp"
#include "nisub/rational.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nisub {

/// Based ring with nonnegative integer structure constants
/// x_i x_j = sum_k N(i, j, k) x_k.
class FusionRing {
 public:
  struct Data {
    std::vector<std::string> labels;
    /// rules[i * rank + j] = (k, N(i, j, k)) with N > 0, any order.
    std::vector<std::vector<std::pair<size_t, uint64_t>>> rules;
    size_t unit = 0;
    std::vector<size_t> dual;
    std::string name;
  };

  /// Validates associativity, unit laws, that dual is an involution and
  /// rigidity N(i, j, unit) = [j = dual(i)]. Throws PreconditionError naming
  /// the failing labels.
  explicit FusionRing(Data data);

  size_t rank() const { return d_.labels.size(); }
  const std::string& label(size_t i) const { return d_.labels[i]; }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const std::string& name() const { return d_.name; }
  size_t unit() const { return d_.unit; }
  size_t dual(size_t i) const { return d_.dual[i]; }
  uint64_t coefficient(size_t i, size_t j, size_t k) const;
  const std::vector<std::pair<size_t, uint64_t>>& rule(size_t i, size_t j) const { return d_.rules[i * rank() + j]; }
  std::optional<size_t> find(const std::string& label) const;

 private:
  Data d_;
};

using FusionPtr = std::shared_ptr<const FusionRing>;

/// Formal nonnegative combination of basis labels of a ring.
struct FObject {
  FusionPtr ring;
  std::vector<uint64_t> mult;

  static FObject zero(const FusionPtr& ring);
  static FObject basis(const FusionPtr& ring, size_t label, uint64_t count = 1);
  FObject operator+(const FObject& o) const;
  bool operator==(const FObject& o) const { return ring == o.ring && mult == o.mult; }
};

/// Throws PreconditionError when the rings differ.
FObject ring_multiply(const FObject& x, const FObject& y);
uint64_t hom_dim(const FObject& x, const FObject& y);
FObject conjugate(const FObject& x);

/// Pointed ring of a group: N(g, h, gh) = 1, dual = inverse.
FusionPtr group_fusion_ring(const Group& g);

/// First triple (x, y, z) of labels violating one of the two Frobenius
/// identities <xy, z> = <x, z y*> = <y, x* z>, if any.
std::optional<std::array<size_t, 3>> frobenius_violation(const FusionRing& r);

/// Pointed bipartite graph; adjacency is even x odd with multiplicities.
class PrincipalGraph {
 public:
  /// Checks shapes, distinct names and that the star vertex has an edge.
  /// Connectedness is not required (see is_connected).
  PrincipalGraph(std::vector<std::string> even, std::vector<std::string> odd,
                 std::vector<std::vector<uint64_t>> adjacency, size_t star, std::string name = {});

  const std::vector<std::string>& even() const { return even_; }
  const std::vector<std::string>& odd() const { return odd_; }
  const std::vector<std::vector<uint64_t>>& adjacency() const { return adj_; }
  size_t star() const { return star_; }
  const std::string& name() const { return name_; }
  std::optional<size_t> find_even(const std::string& v) const;
  bool is_connected() const;
  /// Graph distances from the star; even vertices first, then odd ones.
  /// Unreachable vertices get nullopt.
  std::vector<std::optional<size_t>> distances_from_star() const;

 private:
  std::vector<std::string> even_, odd_;
  std::vector<std::vector<uint64_t>> adj_;
  size_t star_;
  std::string name_;
};

/// Star graph of N in a crossed product by G: one odd vertex joined once to
/// one even vertex per element, star = the identity.
PrincipalGraph crossed_product_graph(const Group& g);

/// even {*, b, theta}, odd {a, c, d}, edges *-a, a-b, b-c, c-theta, b-d.
PrincipalGraph e6_graph();

/// Entry (star, v) of (L L^T)^k for the adjacency matrix L.
Integer multiplicity_in_power(const PrincipalGraph& g, size_t v, size_t k);

/// Eccentricity of the star vertex. Throws PreconditionError when the graph
/// is disconnected.
size_t depth_from_star(const PrincipalGraph& g);

struct ScreenVerdict {
  /// true: v occurs in (rho rho-bar)^k for the reported k.
  bool appears = false;
  size_t k = 0;
  size_t kmax = 0;
  std::string verdict() const { return appears ? "appears_at_k" : "never_appears_up_to_kmax"; }
};

/// First k in 1..kmax with multiplicity_in_power > 0. Reaching the end is
/// only a sufficient condition for strong outerness.
ScreenVerdict strongly_outer_screen(const PrincipalGraph& g, size_t v, size_t kmax);
/// Number of even vertices, enough for reachability to stabilize.
size_t default_screen_bound(const PrincipalGraph& g);

struct GroupTypeCounts {
  size_t ah_ba = 0;  // |AH cap BA|
  size_t ah_ha = 0;  // |AH cap HA|
};

/// Requires H <= B and A cap B = {e}; throws PreconditionError otherwise.
GroupTypeCounts group_type_counts(const Subgroup& a, const Subgroup& b, const Subgroup& h);

/// Line formats:
///   nisub-graph 1 / name <text> / even <v>... / odd <v>... / star <v> /
///   edge <even> <odd> [multiplicity] / end
///   nisub-fusion 1 / name <text> / labels <l>... / unit <l> / dual <l> <l> /
///   rule <l> <l> <l> <count> / end
/// Vertex names and labels containing spaces are written in double quotes.
void write_graph(std::ostream& out, const PrincipalGraph& g);
PrincipalGraph read_graph(std::istream& in);
void write_fusion_ring(std::ostream& out, const FusionRing& r);
FusionRing read_fusion_ring(std::istream& in);

}  // namespace nisub
