#include "nisub/group.hpp"

#include "nisub/error.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nisub {

// ---------------------------------------------------------------- ElementSet

ElementSet ElementSet::of(size_t universe, const std::vector<Element>& elements) {
  ElementSet s(universe);
  for (Element e : elements) s.insert(e);
  return s;
}

size_t ElementSet::size() const {
  size_t n = 0;
  for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
  return n;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<Element>(w * 64 + static_cast<size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  ElementSet r = *this;
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  ElementSet r = *this;
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t diff = words_[i] ^ o.words_[i];
    if (diff == 0) continue;
    uint64_t low = diff & (~diff + 1);
    // The set holding the lowest differing element sorts first.
    return (words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

size_t ElementSet::hash() const {
  size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (uint64_t w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

// --------------------------------------------------------------------- Group

Group Group::from_permutations(size_t degree, const std::vector<Permutation>& generators, size_t cap,
                               std::string name) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
  }
  Group G;
  G.name_ = std::move(name);
  std::unordered_map<Permutation, Element, PermutationHash> index;
  std::vector<Permutation> layer{Permutation(degree)};
  index.emplace(layer.front(), 0);
  G.perms_.push_back(layer.front());
  while (!layer.empty()) {
    std::vector<Permutation> next;
    std::unordered_set<Permutation, PermutationHash> fresh;
    for (const auto& x : layer) {
      for (const auto& g : generators) {
        Permutation y = x * g;
        if (!index.count(y) && fresh.insert(y).second) next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& y : next) {
      if (G.perms_.size() >= cap) {
        throw CapExceeded("group closure exceeds order cap " + std::to_string(cap));
      }
      index.emplace(y, static_cast<Element>(G.perms_.size()));
      G.perms_.push_back(y);
    }
    layer = std::move(next);
  }
  G.order_ = G.perms_.size();
  G.table_.resize(G.order_ * G.order_);
  for (size_t i = 0; i < G.order_; ++i)
    for (size_t j = 0; j < G.order_; ++j) G.table_[i * G.order_ + j] = index.at(G.perms_[i] * G.perms_[j]);
  G.labels_.reserve(G.order_);
  for (const auto& p : G.perms_) G.labels_.push_back(p.cycle_string());
  for (const auto& g : generators) G.generators_.push_back(index.at(g));
  G.finish_from_table();
  return G;
}

Group Group::from_table(std::vector<Element> table, size_t order, std::vector<std::string> labels,
                        std::string name) {
  if (order == 0) throw InvariantError("group order must be positive");
  if (table.size() != order * order) throw InvariantError("table size is not order^2");
  if (labels.size() != order) throw InvariantError("label count differs from order");
  Group G;
  G.order_ = order;
  G.table_ = std::move(table);
  G.labels_ = std::move(labels);
  G.name_ = std::move(name);
  for (Element e : G.table_) {
    if (e >= order) throw InvariantError("table entry out of range");
  }
  G.finish_from_table();
  G.validate();
  return G;
}

void Group::finish_from_table() {
  bool found = false;
  for (size_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (size_t x = 0; x < order_ && ok; ++x) ok = table_[e * order_ + x] == x && table_[x * order_ + e] == x;
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw InvariantError("table has no two-sided identity");
  inverse_.assign(order_, 0);
  for (size_t x = 0; x < order_; ++x) {
    bool ok = false;
    for (size_t y = 0; y < order_; ++y) {
      if (table_[x * order_ + y] == identity_) {
        inverse_[x] = static_cast<Element>(y);
        ok = true;
        break;
      }
    }
    if (!ok) throw InvariantError("element " + std::to_string(x) + " has no inverse");
  }
}

void Group::validate(uint64_t seed) const {
  if (table_.size() != order_ * order_) throw InvariantError("table size mismatch");
  for (Element e : table_) {
    if (e >= order_) throw InvariantError("table entry out of range");
  }
  for (size_t x = 0; x < order_; ++x) {
    if (mul(identity_, static_cast<Element>(x)) != x || mul(static_cast<Element>(x), identity_) != x) {
      throw InvariantError("identity fails on element " + std::to_string(x));
    }
    if (mul(static_cast<Element>(x), inverse_[x]) != identity_ || mul(inverse_[x], static_cast<Element>(x)) != identity_) {
      throw InvariantError("inverse fails on element " + std::to_string(x));
    }
  }
  auto check = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw InvariantError("associativity fails on (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                           std::to_string(c) + ")");
    }
  };
  if (order_ <= 256) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c) check(a, b, c);
    return;
  }
  for (Element g : generators_)
    for (Element h : generators_)
      for (Element x = 0; x < order_; ++x) {
        check(x, g, h);
        check(g, x, h);
        check(g, h, x);
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
  for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng), pick(rng));
}

std::optional<Element> Group::find(const Permutation& p) const {
  auto it = std::find(perms_.begin(), perms_.end(), p);
  if (it == perms_.end()) return std::nullopt;
  return static_cast<Element>(it - perms_.begin());
}

ElementSet Group::all() const {
  ElementSet s(order_);
  for (Element e = 0; e < order_; ++e) s.insert(e);
  return s;
}

ElementSet Group::trivial() const { return ElementSet::of(order_, {identity_}); }

bool Group::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  return true;
}

size_t Group::element_order(Element e) const {
  size_t k = 1;
  for (Element x = e; x != identity_; x = mul(x, e)) ++k;
  return k;
}

size_t Group::exponent() const {
  size_t l = 1;
  for (Element e = 0; e < order_; ++e) l = std::lcm(l, element_order(e));
  return l;
}

GroupPtr make_group(Group g) { return std::make_shared<const Group>(std::move(g)); }

// ------------------------------------------------------------------ Subgroup

ElementSet generated_set(const Group& g, const std::vector<Element>& seeds) {
  ElementSet s(g.order());
  s.insert(g.identity());
  std::vector<Element> queue{g.identity()};
  for (size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Element t : seeds) {
      Element y = g.mul(x, t);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

bool is_subgroup_set(const Group& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(g.identity())) return false;
  auto elems = s.elements();
  for (Element x : elems) {
    if (!s.contains(g.inverse(x))) return false;
    for (Element y : elems) {
      if (!s.contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(GroupPtr parent, ElementSet members) : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw PreconditionError("Subgroup: null parent");
  if (!is_subgroup_set(*parent_, members_)) throw PreconditionError("Subgroup: set is not closed under the group law");
  if (parent_->order() % members_.size() != 0) throw InvariantError("Subgroup: Lagrange violated");
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet all = parent->all();
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet t = parent->trivial();
  return Subgroup(std::move(parent), std::move(t));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<Element>& generators) {
  for (Element e : generators) {
    if (e >= parent->order()) throw PreconditionError("Subgroup::generated: element out of range");
  }
  ElementSet s = generated_set(*parent, generators);
  return Subgroup(std::move(parent), std::move(s));
}

std::vector<Element> Subgroup::generating_set() const {
  std::vector<Element> gens;
  ElementSet span = parent_->trivial();
  for (Element e : members_.elements()) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generated_set(*parent_, gens);
    if (span == members_) break;
  }
  return gens;
}

std::string Subgroup::label() const {
  if (is_trivial()) return "1";
  std::string out = "<";
  auto gens = generating_set();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += parent_->label(gens[i]);
  }
  return out + ">";
}

// ------------------------------------------------------------ direct product

DirectProduct direct_product(const Group& g1, const Group& g2) {
  size_t n1 = g1.order(), n2 = g2.order();
  if (n1 * n2 > Group::kDefaultOrderCap) throw CapExceeded("direct product exceeds order cap");
  Group G;
  G.order_ = n1 * n2;
  G.table_.resize(G.order_ * G.order_);
  for (size_t a = 0; a < G.order_; ++a)
    for (size_t b = 0; b < G.order_; ++b) {
      Element x = g1.mul(static_cast<Element>(a / n2), static_cast<Element>(b / n2));
      Element y = g2.mul(static_cast<Element>(a % n2), static_cast<Element>(b % n2));
      G.table_[a * G.order_ + b] = static_cast<Element>(x * n2 + y);
    }
  bool perms = !g1.permutations().empty() && !g2.permutations().empty();
  size_t d1 = g1.degree(), d2 = g2.degree();
  for (size_t a = 0; a < G.order_; ++a) {
    if (perms) {
      std::vector<uint16_t> img(d1 + d2);
      const auto& p = g1.permutations()[a / n2].images();
      const auto& q = g2.permutations()[a % n2].images();
      for (size_t i = 0; i < d1; ++i) img[i] = p[i];
      for (size_t i = 0; i < d2; ++i) img[d1 + i] = static_cast<uint16_t>(q[i] + d1);
      G.perms_.emplace_back(std::move(img));
      G.labels_.push_back(G.perms_.back().cycle_string());
    } else {
      G.labels_.push_back("(" + g1.label(static_cast<Element>(a / n2)) + ", " +
                          g2.label(static_cast<Element>(a % n2)) + ")");
    }
  }
  for (Element g : g1.generators()) G.generators_.push_back(static_cast<Element>(g * n2 + g2.identity()));
  for (Element h : g2.generators()) G.generators_.push_back(static_cast<Element>(g1.identity() * n2 + h));
  std::string n1s = g1.name().empty() ? "G1" : g1.name();
  std::string n2s = g2.name().empty() ? "G2" : g2.name();
  G.name_ = n1s + "x" + n2s;
  G.finish_from_table();
  DirectProduct dp{std::move(G), ElementSet(n1 * n2), ElementSet(n1 * n2)};
  for (size_t i = 0; i < n1; ++i) dp.left.insert(static_cast<Element>(i * n2 + g2.identity()));
  for (size_t j = 0; j < n2; ++j) dp.right.insert(static_cast<Element>(g1.identity() * n2 + j));
  return dp;
}

// ---------------------------------------------------------------- subgroups

std::vector<ElementSet> enumerate_subgroup_sets(const Group& g, const ElementSet& ambient) {
  if (!is_subgroup_set(g, ambient)) throw PreconditionError("enumerate_subgroups: ambient set is not a subgroup");
  struct Found {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Found> cyclic;
  std::unordered_set<ElementSet, ElementSetHash> cyclic_seen;
  for (Element e : ambient.elements()) {
    ElementSet c = generated_set(g, {e});
    if (cyclic_seen.insert(c).second) cyclic.push_back({std::move(c), {e}});
  }
  std::vector<Found> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& c : cyclic) {
    seen.insert(c.set);
    found.push_back(c);
  }
  // Every subgroup is a join of cyclic subgroups.
  for (size_t head = 0; head < found.size(); ++head) {
    for (const auto& c : cyclic) {
      if (found[head].set.contains(c.gens.front())) continue;
      std::vector<Element> gens = found[head].gens;
      gens.push_back(c.gens.front());
      ElementSet j = generated_set(g, gens);
      if (seen.insert(j).second) found.push_back({std::move(j), std::move(gens)});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.set));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g) { return enumerate_subgroups_of(Subgroup::whole(g)); }

std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& ambient) {
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroup_sets(ambient.group(), ambient.members())) out.emplace_back(ambient.parent(), std::move(s));
  return out;
}

std::vector<Subgroup> subgroups_between(const Subgroup& h, const GroupPtr& g) {
  if (h.parent().get() != g.get() && !h.group().same_table(*g)) {
    throw PreconditionError("subgroups_between: H is not a subgroup of G");
  }
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(g)) {
    if (h.members().is_subset_of(s.members())) out.push_back(std::move(s));
  }
  return out;
}

ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order()) throw PreconditionError("product_set: mismatched group");
  ElementSet out(g.order());
  auto be = b.elements();
  for (Element x : a.elements())
    for (Element y : be) out.insert(g.mul(x, y));
  return out;
}

ElementSet product_set(const Subgroup& a, const Subgroup& b) {
  if (a.parent().get() != b.parent().get()) throw PreconditionError("product_set: subgroups of different groups");
  ElementSet p = product_set(a.group(), a.members(), b.members());
  size_t meet = (a.members() & b.members()).size();
  if (p.size() * meet != a.size() * b.size()) throw InvariantError("product formula |AB||A cap B| = |A||B| violated");
  return p;
}

ElementSet conjugate_set(const Group& g, const ElementSet& h, Element by) {
  ElementSet out(g.order());
  Element inv = g.inverse(by);
  for (Element x : h.elements()) out.insert(g.mul(g.mul(by, x), inv));
  return out;
}

GroupCheck is_normal_subgroup(const Subgroup& h, const Subgroup& in) {
  if (h.parent().get() != in.parent().get()) throw PreconditionError("is_normal_subgroup: different parent groups");
  if (!h.is_subgroup_of(in)) throw PreconditionError("is_normal_subgroup: H is not contained in the ambient subgroup");
  const Group& g = h.group();
  auto he = h.members().elements();
  for (Element x : in.members().elements()) {
    Element xi = g.inverse(x);
    for (Element y : he) {
      if (!h.contains(g.mul(g.mul(x, y), xi))) return {false, x};
    }
  }
  return {};
}

GroupCheck is_normal_subgroup(const Subgroup& h) { return is_normal_subgroup(h, Subgroup::whole(h.parent())); }

GroupCheck double_coset_condition(const Subgroup& a, const Subgroup& h) {
  return double_coset_condition(a, h, Subgroup::whole(a.parent()));
}

GroupCheck double_coset_condition(const Subgroup& a, const Subgroup& h, const Subgroup& over) {
  if (a.parent().get() != h.parent().get() || a.parent().get() != over.parent().get()) {
    throw PreconditionError("double_coset_condition: different parent groups");
  }
  const Group& g = a.group();
  auto ae = a.members().elements();
  auto he = h.members().elements();
  for (Element x : over.members().elements()) {
    ElementSet agh(g.order()), hga(g.order());
    for (Element p : ae) {
      Element px = g.mul(p, x);
      for (Element q : he) agh.insert(g.mul(px, q));
    }
    for (Element q : he) {
      Element qx = g.mul(q, x);
      for (Element p : ae) hga.insert(g.mul(qx, p));
    }
    if (!(agh == hga)) return {false, x};
  }
  return {};
}

bool exact_factorization_check(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (a.group().order() != g.order() || b.group().order() != g.order()) {
    throw PreconditionError("exact_factorization_check: subgroups of a different group");
  }
  return a.size() * b.size() == g.order() && (a.members() & b.members()).size() == 1;
}

Element MatchedPair::inverse_beta(Element b, Element a) const {
  const Group& g = *group_;
  return g.inverse(beta(g.inverse(b), g.inverse(a)));
}

MatchedPair matched_pair_from_factorization(const Subgroup& a, const Subgroup& b) {
  if (a.parent().get() != b.parent().get()) throw PreconditionError("matched pair: different parent groups");
  const Group& g = a.group();
  if (!exact_factorization_check(g, a, b)) throw PreconditionError("matched pair: G = AB, A cap B = {e} fails");
  MatchedPair mp;
  mp.group_ = a.parent();
  mp.a_ = a;
  mp.b_ = b;
  mp.a_elems_ = a.members().elements();
  mp.b_elems_ = b.members().elements();
  mp.a_pos_.assign(g.order(), SIZE_MAX);
  mp.b_pos_.assign(g.order(), SIZE_MAX);
  for (size_t i = 0; i < mp.a_elems_.size(); ++i) mp.a_pos_[mp.a_elems_[i]] = i;
  for (size_t i = 0; i < mp.b_elems_.size(); ++i) mp.b_pos_[mp.b_elems_[i]] = i;
  // g = b' a' uniquely.
  std::vector<std::pair<Element, Element>> split(g.order(), {0, 0});
  std::vector<bool> hit(g.order(), false);
  for (Element y : mp.b_elems_)
    for (Element x : mp.a_elems_) {
      Element p = g.mul(y, x);
      if (hit[p]) throw InvariantError("matched pair: decomposition in BA is not unique");
      hit[p] = true;
      split[p] = {y, x};
    }
  size_t na = mp.a_elems_.size(), nb = mp.b_elems_.size();
  mp.alpha_.resize(na * nb);
  mp.beta_.resize(na * nb);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j) {
      auto [bb, aa] = split[g.mul(mp.a_elems_[i], mp.b_elems_[j])];
      mp.alpha_[i * nb + j] = bb;
      mp.beta_[j * na + i] = aa;
      if (g.mul(bb, aa) != g.mul(mp.a_elems_[i], mp.b_elems_[j])) throw InvariantError("matched pair: recomposition failed");
    }
  return mp;
}

// ------------------------------------------------------------ serialization

void write_group(std::ostream& out, const Group& g) {
  out << "nisub-group 1\n";
  out << "name " << (g.name().empty() ? "-" : g.name()) << "\n";
  out << "order " << g.order() << "\n";
  out << "degree " << g.degree() << "\n";
  for (Element e = 0; e < g.order(); ++e) out << "element " << e << " " << g.label(e) << "\n";
  for (Element a = 0; a < g.order(); ++a) {
    out << "row " << a;
    for (Element b = 0; b < g.order(); ++b) out << " " << g.mul(a, b);
    out << "\n";
  }
  out << "end\n";
}

Group read_group(std::istream& in) {
  std::string line;
  size_t lineno = 0;
  auto next = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return line;
    }
    throw ParseError("unexpected end of group file", lineno + 1);
  };
  auto keyed = [&](const std::string& key) {
    std::string l = next();
    if (l.rfind(key + " ", 0) != 0) throw ParseError("expected '" + key + "'", lineno, 1);
    return l.substr(key.size() + 1);
  };
  if (next() != "nisub-group 1") throw ParseError("expected header 'nisub-group 1'", lineno, 1);
  std::string name = keyed("name");
  if (name == "-") name.clear();
  size_t order = 0, degree = 0;
  try {
    order = std::stoul(keyed("order"));
    degree = std::stoul(keyed("degree"));
  } catch (const std::logic_error&) {
    throw ParseError("malformed integer", lineno, 1);
  }
  if (order == 0) throw ParseError("order must be positive", lineno, 1);
  std::vector<std::string> labels(order);
  for (size_t e = 0; e < order; ++e) {
    std::istringstream ls(keyed("element"));
    size_t idx = 0;
    ls >> idx;
    if (!ls || idx != e) throw ParseError("element lines must be in index order", lineno, 1);
    std::getline(ls >> std::ws, labels[e]);
  }
  std::vector<Element> table(order * order);
  for (size_t a = 0; a < order; ++a) {
    std::istringstream ls(keyed("row"));
    size_t idx = 0;
    ls >> idx;
    if (!ls || idx != a) throw ParseError("row lines must be in index order", lineno, 1);
    for (size_t b = 0; b < order; ++b) {
      long v = -1;
      ls >> v;
      if (!ls || v < 0 || static_cast<size_t>(v) >= order) throw ParseError("bad table entry", lineno, 1);
      table[a * order + b] = static_cast<Element>(v);
    }
  }
  if (next() != "end") throw ParseError("expected 'end'", lineno, 1);
  Group g = Group::from_table(std::move(table), order, labels, name);
  if (degree == 0) return g;
  // Rebuild the permutation realization from the labels and check it.
  std::vector<Permutation> perms;
  for (const auto& l : labels) perms.push_back(parse_permutation(l, degree));
  for (size_t a = 0; a < order; ++a)
    for (size_t b = 0; b < order; ++b) {
      if (perms[a] * perms[b] != perms[g.mul(static_cast<Element>(a), static_cast<Element>(b))]) {
        throw ParseError("labels do not realize the table", lineno, 1);
      }
    }
  g.perms_ = std::move(perms);
  return g;
}

}  // namespace nisub
