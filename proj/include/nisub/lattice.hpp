#pragma once

#include "nisub/group.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nisub {

using Node = size_t;

/// Finite lattice with precomputed order, meet and join tables. Immutable.
class FiniteLattice {
 public:
  /// Builds the lattice of a partial order given as an n x n relation
  /// (leq[a][b] == a <= b). Throws PreconditionError when the relation is not
  /// a partial order or some pair lacks a unique meet or join.
  static FiniteLattice from_order(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

  size_t size() const { return names_.size(); }
  const std::string& name(Node a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  bool leq(Node a, Node b) const { return leq_[a][b]; }
  Node meet(Node a, Node b) const { return meet_[a * size() + b]; }
  Node join(Node a, Node b) const { return join_[a * size() + b]; }
  Node top() const { return top_; }
  Node bottom() const { return bottom_; }

  /// Nodes b with a < b and nothing strictly between.
  std::vector<Node> upper_covers(Node a) const;

  /// Order-reversed lattice (meet and join exchanged, same node ids).
  FiniteLattice dual() const;
  /// Induced lattice on a meet/join-closed node subset; node i of the result
  /// is nodes[i]. Throws PreconditionError if the subset is not a sublattice.
  FiniteLattice sublattice(const std::vector<Node>& nodes) const;

  /// Exhaustive lattice axiom check (idempotent, commutative, associative,
  /// absorption, bounds). Throws InvariantError with the failing tuple.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<Node> meet_, join_;
  Node top_ = 0, bottom_ = 0;
};

/// Family of sets ordered by inclusion; meet is the intersection (which must
/// be a member) and join the least member containing both. Throws
/// PreconditionError naming the offending pair otherwise.
FiniteLattice lattice_from_sets(const std::vector<ElementSet>& family, std::vector<std::string> names);

struct ModularityResult {
  bool modular = true;
  /// (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c.
  std::optional<std::array<Node, 3>> witness;
  explicit operator bool() const { return modular; }
};

ModularityResult is_modular(const FiniteLattice& l);

/// Finds five nodes 0 < a < c < 1, b forming a pentagon N5 (b incomparable to
/// a and c, a v b = c v b, a ^ b = c ^ b), used to explain a modularity failure.
/// Returned as (a ^ b, a, c, b, a v b).
std::optional<std::array<Node, 5>> find_pentagon(const FiniteLattice& l);

/// Length (number of covering edges) of every maximal chain from bottom to
/// top, as length -> number of chains with that length.
std::map<size_t, uint64_t> maximal_chain_lengths(const FiniteLattice& l);

bool is_sublattice(const std::vector<Node>& nodes, const FiniteLattice& l);

/// Graphviz rendering, bottom at the base. Nodes flagged in `highlight` are
/// drawn filled. Node and edge order follow node ids.
std::string to_dot(const FiniteLattice& l, const std::vector<bool>& highlight = {},
                   const std::string& graph_name = "lattice");

}  // namespace nisub
