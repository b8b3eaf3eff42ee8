#pragma once

#include "nisub/permutation.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nisub {

using Element = uint32_t;

/// Subset of the elements of a fixed group, stored as a bit mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  static ElementSet of(size_t universe, const std::vector<Element>& elements);

  size_t universe() const { return universe_; }
  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
  size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Element> elements() const;

  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator|(const ElementSet& o) const;
  bool is_subset_of(const ElementSet& o) const;

  bool operator==(const ElementSet& o) const = default;
  /// Canonical order: by size, then lexicographically by sorted member list.
  std::strong_ordering operator<=>(const ElementSet& o) const;

  size_t hash() const;

 private:
  size_t universe_ = 0;
  std::vector<uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

struct DirectProduct;
class Group;
Group read_group(std::istream& in);

/// Finite group held as a Cayley table. Immutable after construction.
class Group {
 public:
  static constexpr size_t kDefaultOrderCap = 10080;

  /// Closure of permutation generators on `degree` points. Elements are
  /// numbered breadth first from the identity (layer by layer, each layer
  /// sorted lexicographically by image arrays). Throws CapExceeded when the
  /// closure exceeds `cap`.
  static Group from_permutations(size_t degree, const std::vector<Permutation>& generators,
                                 size_t cap = kDefaultOrderCap, std::string name = {});

  /// Group given directly by its table. Validates every invariant.
  static Group from_table(std::vector<Element> table, size_t order, std::vector<std::string> labels,
                          std::string name = {});

  size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_[e]; }
  const std::string& name() const { return name_; }

  /// Permutation realization; empty for table-defined groups.
  const std::vector<Permutation>& permutations() const { return perms_; }
  size_t degree() const { return perms_.empty() ? 0 : perms_.front().degree(); }
  /// Element indices of the defining generators (empty for table groups).
  const std::vector<Element>& generators() const { return generators_; }
  std::optional<Element> find(const Permutation& p) const;

  ElementSet all() const;
  ElementSet trivial() const;
  bool is_abelian() const;
  /// Least common multiple of element orders.
  size_t exponent() const;
  size_t element_order(Element e) const;

  /// Checks table range, identity, inverses and associativity (full for order
  /// <= 256, otherwise generator triples plus seeded random triples).
  /// Throws InvariantError naming the violation.
  void validate(uint64_t seed = 0x5eed) const;

  bool same_table(const Group& other) const { return order_ == other.order_ && table_ == other.table_; }

 private:
  size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
  std::vector<Element> generators_;
  std::string name_;

  void finish_from_table();
  friend struct DirectProduct;
  friend DirectProduct direct_product(const Group&, const Group&);
  friend Group read_group(std::istream&);
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(Group g);

/// Subgroup of a parent group, as a membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  /// Throws PreconditionError if `members` is not a subgroup of `parent`.
  Subgroup(GroupPtr parent, ElementSet members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// The subgroup generated by `generators`.
  static Subgroup generated(GroupPtr parent, const std::vector<Element>& generators);

  const GroupPtr& parent() const { return parent_; }
  const Group& group() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  size_t size() const { return members_.size(); }
  size_t index() const { return parent_->order() / size(); }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_subgroup_of(const Subgroup& o) const { return members_.is_subset_of(o.members_); }
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == parent_->order(); }

  /// A small generating set chosen greedily in element order.
  std::vector<Element> generating_set() const;
  /// "1" or "<(1 2), (1 2 3)>" built from generating_set().
  std::string label() const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  auto operator<=>(const Subgroup& o) const { return members_ <=> o.members_; }

 private:
  GroupPtr parent_;
  ElementSet members_;
};

/// Closure of `seeds` under multiplication (always contains the identity).
ElementSet generated_set(const Group& g, const std::vector<Element>& seeds);
bool is_subgroup_set(const Group& g, const ElementSet& s);

struct DirectProduct {
  Group group;
  /// Element (i, j) of G1 x G2 has index i * |G2| + j.
  ElementSet left;   // G1 x {e}
  ElementSet right;  // {e} x G2
};

/// Componentwise product; permutation groups are realized on the disjoint
/// union of their point sets. Throws CapExceeded above the default cap.
DirectProduct direct_product(const Group& g1, const Group& g2);

/// All subgroups of g contained in `ambient` (a subgroup), duplicate free,
/// sorted by (size, member mask).
std::vector<ElementSet> enumerate_subgroup_sets(const Group& g, const ElementSet& ambient);
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g);
std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& ambient);

/// All A with H <= A <= G, in enumeration order. Throws PreconditionError if
/// H does not belong to G.
std::vector<Subgroup> subgroups_between(const Subgroup& h, const GroupPtr& g);

/// {ab : a in A, b in B}.
ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b);
/// Subgroup form; asserts |AB| |A cap B| = |A||B| and throws
/// PreconditionError on different parents.
ElementSet product_set(const Subgroup& a, const Subgroup& b);

/// g H g^-1 as a set.
ElementSet conjugate_set(const Group& g, const ElementSet& h, Element by);

/// Witness-carrying result for predicates over group elements.
struct GroupCheck {
  bool holds = true;
  std::optional<Element> witness;
  explicit operator bool() const { return holds; }
};

GroupCheck is_normal_subgroup(const Subgroup& h, const Subgroup& in);
GroupCheck is_normal_subgroup(const Subgroup& h);

/// AgH == HgA for every g in `over` (the whole parent group by default).
GroupCheck double_coset_condition(const Subgroup& a, const Subgroup& h);
GroupCheck double_coset_condition(const Subgroup& a, const Subgroup& h, const Subgroup& over);

/// |A||B| = |G| and A cap B = {e}.
bool exact_factorization_check(const Group& g, const Subgroup& a, const Subgroup& b);

/// Exact factorization G = AB with mutual actions read off the unique
/// decomposition a b = alpha_a(b) beta(b, a) with alpha_a(b) in B and
/// beta(b, a) in A. alpha is a left action of A on B, beta a right action of B
/// on A.
class MatchedPair {
 public:
  const GroupPtr& group() const { return group_; }
  const Subgroup& a() const { return a_; }
  const Subgroup& b() const { return b_; }
  const std::vector<Element>& a_elements() const { return a_elems_; }
  const std::vector<Element>& b_elements() const { return b_elems_; }

  /// Position of an element of A (resp. B) in a_elements() (resp. b_elements()).
  size_t a_position(Element a) const { return a_pos_[a]; }
  size_t b_position(Element b) const { return b_pos_[b]; }

  /// alpha_a(b) in B.
  Element alpha(Element a, Element b) const { return alpha_[a_pos_[a] * b_elems_.size() + b_pos_[b]]; }
  /// beta(b, a) in A, the A-part of ab.
  Element beta(Element b, Element a) const { return beta_[b_pos_[b] * a_elems_.size() + a_pos_[a]]; }
  /// The action written beta_b(a) in the decomposition
  /// ab = alpha_a(b) beta_{b^-1}(a^-1)^-1, i.e. beta_b(a) = beta(b^-1, a^-1)^-1.
  Element inverse_beta(Element b, Element a) const;

 private:
  friend MatchedPair matched_pair_from_factorization(const Subgroup&, const Subgroup&);
  GroupPtr group_;
  Subgroup a_, b_;
  std::vector<Element> a_elems_, b_elems_;
  std::vector<size_t> a_pos_, b_pos_;
  std::vector<Element> alpha_, beta_;
};

/// Throws PreconditionError when G != AB or A cap B != {e}.
MatchedPair matched_pair_from_factorization(const Subgroup& a, const Subgroup& b);

/// Versioned line-oriented table format:
///   nisub-group 1
///   name <text>
///   order <n>
///   degree <d>            (0 when no permutation realization)
///   element <index> <label>      (one per element, in index order)
///   row <index> <n entries>      (one per element)
///   end
void write_group(std::ostream& out, const Group& g);
Group read_group(std::istream& in);

}  // namespace nisub
