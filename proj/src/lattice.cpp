#include "nisub/lattice.hpp"

#include "nisub/error.hpp"

#include <algorithm>
#include <sstream>

namespace nisub {

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names, std::vector<std::vector<bool>> leq) {
  size_t n = names.size();
  if (n == 0) throw PreconditionError("lattice must be nonempty");
  if (leq.size() != n) throw PreconditionError("order relation has wrong size");
  for (const auto& row : leq) {
    if (row.size() != n) throw PreconditionError("order relation has wrong size");
  }
  for (size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw PreconditionError("order is not reflexive at " + names[a]);
    for (size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw PreconditionError("order is not antisymmetric at (" + names[a] + ", " + names[b] + ")");
      for (size_t c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw PreconditionError("order is not transitive at " + names[a]);
      }
    }
  }
  FiniteLattice l;
  l.names_ = std::move(names);
  l.leq_ = std::move(leq);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      // glb: the lower bound above every other lower bound
      constexpr size_t none = static_cast<size_t>(-1);
      size_t glb = none, lub = none;
      for (size_t c = 0; c < n; ++c) {
        if (l.leq_[c][a] && l.leq_[c][b] && (glb == none || l.leq_[glb][c])) glb = c;
        if (l.leq_[a][c] && l.leq_[b][c] && (lub == none || l.leq_[c][lub])) lub = c;
      }
      for (size_t c = 0; c < n; ++c) {
        if (glb != none && l.leq_[c][a] && l.leq_[c][b] && !l.leq_[c][glb]) glb = none;
        if (lub != none && l.leq_[a][c] && l.leq_[b][c] && !l.leq_[lub][c]) lub = none;
      }
      if (glb == none) throw PreconditionError("no unique meet for (" + l.names_[a] + ", " + l.names_[b] + ")");
      if (lub == none) throw PreconditionError("no unique join for (" + l.names_[a] + ", " + l.names_[b] + ")");
      l.meet_[a * n + b] = l.meet_[b * n + a] = glb;
      l.join_[a * n + b] = l.join_[b * n + a] = lub;
    }
  l.top_ = l.bottom_ = 0;
  for (size_t a = 1; a < n; ++a) {
    l.top_ = l.join_[l.top_ * n + a];
    l.bottom_ = l.meet_[l.bottom_ * n + a];
  }
  return l;
}

std::vector<Node> FiniteLattice::upper_covers(Node a) const {
  std::vector<Node> out;
  for (Node b = 0; b < size(); ++b) {
    if (b == a || !leq_[a][b]) continue;
    bool cover = true;
    for (Node c = 0; c < size() && cover; ++c) {
      if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
    }
    if (cover) out.push_back(b);
  }
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d = *this;
  for (size_t a = 0; a < size(); ++a)
    for (size_t b = 0; b < size(); ++b) d.leq_[a][b] = leq_[b][a];
  std::swap(d.meet_, d.join_);
  std::swap(d.top_, d.bottom_);
  return d;
}

FiniteLattice FiniteLattice::sublattice(const std::vector<Node>& nodes) const {
  if (!is_sublattice(nodes, *this)) throw PreconditionError("node subset is not closed under meet and join");
  std::vector<std::string> names;
  std::vector<std::vector<bool>> rel(nodes.size(), std::vector<bool>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i) {
    names.push_back(names_[nodes[i]]);
    for (size_t j = 0; j < nodes.size(); ++j) rel[i][j] = leq_[nodes[i]][nodes[j]];
  }
  return from_order(std::move(names), std::move(rel));
}

void FiniteLattice::validate() const {
  size_t n = size();
  auto fail = [&](const std::string& what, Node a, Node b, Node c) {
    throw InvariantError("lattice axiom '" + what + "' fails at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  };
  for (Node a = 0; a < n; ++a) {
    if (meet(a, a) != a || join(a, a) != a) fail("idempotence", a, a, a);
    if (!leq(bottom_, a) || !leq(a, top_)) fail("bounds", a, a, a);
    for (Node b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) fail("commutativity", a, b, b);
      if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a) fail("absorption", a, b, b);
      if (leq(a, b) != (meet(a, b) == a)) fail("order/meet consistency", a, b, b);
      for (Node c = 0; c < n; ++c) {
        if (meet(meet(a, b), c) != meet(a, meet(b, c))) fail("meet associativity", a, b, c);
        if (join(join(a, b), c) != join(a, join(b, c))) fail("join associativity", a, b, c);
      }
    }
  }
}

FiniteLattice lattice_from_sets(const std::vector<ElementSet>& family, std::vector<std::string> names) {
  size_t n = family.size();
  if (n == 0) throw PreconditionError("lattice_from_sets: empty family");
  if (names.size() != n) throw PreconditionError("lattice_from_sets: names do not match family");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (family[a] == family[b]) throw PreconditionError("lattice_from_sets: duplicate set (" + names[a] + ", " + names[b] + ")");
    }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) leq[a][b] = family[a].is_subset_of(family[b]);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      ElementSet m = family[a] & family[b];
      if (std::find(family.begin(), family.end(), m) == family.end()) {
        throw PreconditionError("lattice_from_sets: intersection of (" + names[a] + ", " + names[b] + ") is not in the family");
      }
    }
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

ModularityResult is_modular(const FiniteLattice& l) {
  size_t n = l.size();
  for (Node a = 0; a < n; ++a)
    for (Node c = 0; c < n; ++c) {
      if (!l.leq(a, c)) continue;
      for (Node b = 0; b < n; ++b) {
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) return {false, std::array<Node, 3>{a, b, c}};
      }
    }
  return {};
}

std::optional<std::array<Node, 5>> find_pentagon(const FiniteLattice& l) {
  size_t n = l.size();
  for (Node a = 0; a < n; ++a)
    for (Node c = 0; c < n; ++c) {
      if (a == c || !l.leq(a, c)) continue;
      for (Node b = 0; b < n; ++b) {
        if (l.leq(b, c) || l.leq(c, b) || l.leq(a, b) || l.leq(b, a)) continue;
        if (l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b)) {
          return std::array<Node, 5>{l.meet(a, b), a, c, b, l.join(a, b)};
        }
      }
    }
  return std::nullopt;
}

std::map<size_t, uint64_t> maximal_chain_lengths(const FiniteLattice& l) {
  // Depth-first over covering edges with memoized length histograms.
  std::vector<std::optional<std::map<size_t, uint64_t>>> memo(l.size());
  std::vector<std::vector<Node>> covers(l.size());
  for (Node a = 0; a < l.size(); ++a) covers[a] = l.upper_covers(a);
  auto visit = [&](auto&& self, Node a) -> const std::map<size_t, uint64_t>& {
    if (memo[a]) return *memo[a];
    std::map<size_t, uint64_t> hist;
    if (a == l.top()) {
      hist[0] = 1;
    } else {
      for (Node b : covers[a]) {
        for (const auto& [len, count] : self(self, b)) hist[len + 1] += count;
      }
    }
    memo[a] = std::move(hist);
    return *memo[a];
  };
  return visit(visit, l.bottom());
}

bool is_sublattice(const std::vector<Node>& nodes, const FiniteLattice& l) {
  if (nodes.empty()) return false;
  std::vector<bool> in(l.size(), false);
  for (Node a : nodes) {
    if (a >= l.size()) throw PreconditionError("is_sublattice: node out of range");
    in[a] = true;
  }
  for (Node a : nodes)
    for (Node b : nodes) {
      if (!in[l.meet(a, b)] || !in[l.join(a, b)]) return false;
    }
  return true;
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const FiniteLattice& l, const std::vector<bool>& highlight, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (Node a = 0; a < l.size(); ++a) {
    out << "  n" << a << " [label=\"" << dot_escape(l.name(a)) << "\"";
    if (a < highlight.size() && highlight[a]) out << ", style=filled, fillcolor=\"#f4b942\", penwidth=2";
    out << "];\n";
  }
  for (Node a = 0; a < l.size(); ++a) {
    for (Node b : l.upper_covers(a)) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nisub
