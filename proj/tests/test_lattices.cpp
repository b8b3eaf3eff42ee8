#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "nisub/error.hpp"
#include "nisub/lattice.hpp"

using namespace nisub;

namespace {

FiniteLattice subgroup_lattice(const GroupPtr& g) {
  std::vector<ElementSet> family;
  std::vector<std::string> names;
  for (const auto& h : enumerate_subgroups(g)) {
    family.push_back(h.members());
    names.push_back(h.label());
  }
  return lattice_from_sets(family, names);
}

FiniteLattice normal_subgroup_lattice(const GroupPtr& g) {
  std::vector<ElementSet> family;
  std::vector<std::string> names;
  for (const auto& h : enumerate_subgroups(g)) {
    if (!is_normal_subgroup(h).holds) continue;
    family.push_back(h.members());
    names.push_back(h.label());
  }
  return lattice_from_sets(family, names);
}

FiniteLattice chain(size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
  }
  return FiniteLattice::from_order(names, leq);
}

// 0 < x, y, z < 1 (diamond) or 0 < a < c < 1, 0 < b < 1 (pentagon)
FiniteLattice from_covers(const std::vector<std::string>& names, const std::vector<std::pair<size_t, size_t>>& covers) {
  const size_t n = names.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : covers) leq[a][b] = true;
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return FiniteLattice::from_order(names, leq);
}

FiniteLattice diamond() { return from_covers({"0", "x", "y", "z", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }
FiniteLattice pentagon() { return from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}); }

bool modular_brute(const FiniteLattice& l) {
  for (Node a = 0; a < l.size(); ++a) {
    for (Node b = 0; b < l.size(); ++b) {
      for (Node c = 0; c < l.size(); ++c) {
        if (l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("small lattices") {
  FiniteLattice c3 = chain(3);
  c3.validate();
  CHECK(is_modular(c3).modular);
  CHECK(maximal_chain_lengths(c3) == std::map<size_t, uint64_t>{{2, 1}});
  CHECK(c3.bottom() == 0);
  CHECK(c3.top() == 2);

  FiniteLattice m3 = diamond();
  m3.validate();
  CHECK(is_modular(m3).modular);
  CHECK(maximal_chain_lengths(m3) == std::map<size_t, uint64_t>{{2, 3}});
  CHECK(m3.upper_covers(0).size() == 3);

  FiniteLattice n5 = pentagon();
  n5.validate();
  ModularityResult r = is_modular(n5);
  CHECK_FALSE(r.modular);
  REQUIRE(r.witness);
  auto [a, b, c] = *r.witness;
  CHECK(n5.leq(a, c));
  CHECK(n5.join(a, n5.meet(b, c)) != n5.meet(n5.join(a, b), c));
  CHECK(find_pentagon(n5).has_value());
  CHECK_FALSE(find_pentagon(m3).has_value());
  CHECK(maximal_chain_lengths(n5) == std::map<size_t, uint64_t>{{2, 1}, {3, 1}});
}

TEST_CASE("from_order rejects non-lattices") {
  // two maximal elements
  CHECK_THROWS_AS(FiniteLattice::from_order({"a", "b"}, {{true, false}, {false, true}}), PreconditionError);
  // not antisymmetric
  CHECK_THROWS_AS(FiniteLattice::from_order({"a", "b"}, {{true, true}, {true, true}}), PreconditionError);
  // not reflexive
  CHECK_THROWS_AS(FiniteLattice::from_order({"a"}, {{false}}), PreconditionError);
}

TEST_CASE("subgroup lattice of S3") {
  FiniteLattice l = subgroup_lattice(corpus::symmetric(3));
  l.validate();
  CHECK(l.size() == 6);
  CHECK(l.upper_covers(l.bottom()).size() == 4);
  auto lengths = maximal_chain_lengths(l);
  CHECK(lengths == std::map<size_t, uint64_t>{{2, 4}});
  CHECK(is_modular(l).modular);
}

TEST_CASE("normal subgroups of S4 form a chain") {
  FiniteLattice l = normal_subgroup_lattice(corpus::symmetric(4));
  CHECK(l.size() == 4);
  CHECK(maximal_chain_lengths(l) == std::map<size_t, uint64_t>{{3, 1}});
  CHECK(is_modular(l).modular);
}

TEST_CASE("subgroup lattice of S4 is not modular") {
  FiniteLattice l = subgroup_lattice(corpus::symmetric(4));
  CHECK(l.size() == 30);
  ModularityResult r = is_modular(l);
  CHECK_FALSE(r.modular);
  REQUIRE(r.witness);
  auto [a, b, c] = *r.witness;
  CHECK(l.leq(a, c));
  CHECK(l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c));
  auto p = find_pentagon(l);
  REQUIRE(p);
  auto [z, x, w, y, o] = *p;
  CHECK(l.leq(x, w));
  CHECK(x != w);
  CHECK_FALSE(l.leq(y, w));
  CHECK_FALSE(l.leq(x, y));
  CHECK(l.join(x, y) == o);
  CHECK(l.join(w, y) == o);
  CHECK(l.meet(x, y) == z);
  CHECK(l.meet(w, y) == z);
  CHECK(maximal_chain_lengths(l).size() > 1);
}

TEST_CASE("sublattice checks") {
  GroupPtr s4 = corpus::symmetric(4);
  FiniteLattice l = subgroup_lattice(s4);
  CHECK(is_sublattice({l.bottom(), l.top()}, l));
  std::vector<Node> normal;
  auto subs = enumerate_subgroups(s4);
  for (Node i = 0; i < subs.size(); ++i) {
    if (is_normal_subgroup(subs[i]).holds) normal.push_back(i);
  }
  CHECK(is_sublattice(normal, l));
  CHECK(l.sublattice(normal).size() == 4);

  FiniteLattice s3 = subgroup_lattice(corpus::symmetric(3));
  auto atoms = s3.upper_covers(s3.bottom());
  CHECK_FALSE(is_sublattice({atoms[0], atoms[1]}, s3));
  CHECK_THROWS_AS(s3.sublattice({atoms[0], atoms[1]}), PreconditionError);
}

TEST_CASE("Jordan-Dedekind on modular corpus lattices, and duality") {
  size_t modular_count = 0;
  for (const auto& e : corpus::groups()) {
    CAPTURE(e.name);
    GroupPtr g = corpus::make(e);
    for (const FiniteLattice& l : {subgroup_lattice(g), normal_subgroup_lattice(g)}) {
      bool m = is_modular(l).modular;
      CHECK(m == modular_brute(l));
      if (m) {
        ++modular_count;
        CHECK(maximal_chain_lengths(l).size() == 1);
      }
      FiniteLattice d = l.dual();
      d.validate();
      CHECK(is_modular(d).modular == m);
      for (Node a = 0; a < l.size(); ++a) {
        for (Node b = 0; b < l.size(); ++b) {
          CHECK(d.leq(a, b) == l.leq(b, a));
          CHECK(d.meet(a, b) == l.join(a, b));
        }
      }
    }
  }
  CHECK(modular_count > 10);
}

TEST_CASE("lattice_from_sets matches direct meet and join") {
  for (const char* name : {"S3", "D4", "A4", "S4"}) {
    CAPTURE(name);
    GroupPtr g = corpus::named(name);
    auto subs = enumerate_subgroups(g);
    FiniteLattice l = subgroup_lattice(g);
    for (Node a = 0; a < subs.size(); ++a) {
      for (Node b = 0; b < subs.size(); ++b) {
        ElementSet meet = subs[a].members() & subs[b].members();
        std::vector<Element> seeds = subs[a].members().elements();
        for (Element x : subs[b].members().elements()) seeds.push_back(x);
        ElementSet join = generated_set(*g, seeds);
        CHECK(subs[l.meet(a, b)].members() == meet);
        CHECK(subs[l.join(a, b)].members() == join);
        CHECK(l.leq(a, b) == subs[a].is_subgroup_of(subs[b]));
      }
    }
  }
  GroupPtr s3 = corpus::symmetric(3);
  // two transpositions without their join
  auto subs = enumerate_subgroups(s3);
  CHECK_THROWS_AS(lattice_from_sets({subs[0].members(), subs[1].members(), subs[2].members()}, {"1", "a", "b"}),
                  PreconditionError);
}

TEST_CASE("DOT rendering") {
  FiniteLattice l = diamond();
  std::string dot = to_dot(l, {true, false, false, true, true}, "d");
  CHECK(dot.find("digraph \"d\"") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  size_t filled = 0;
  for (size_t pos = dot.find("style=filled"); pos != std::string::npos; pos = dot.find("style=filled", pos + 1)) ++filled;
  CHECK(filled == 3);
  size_t edges = 0;
  for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  CHECK(edges == 6);
}
