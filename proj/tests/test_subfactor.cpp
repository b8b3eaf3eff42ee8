#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "nisub/error.hpp"
#include "nisub/subfactor.hpp"

using namespace nisub;

namespace {

const IntermediateObject& object_for(const std::vector<IntermediateObject>& catalog, Family f, const Subgroup& h) {
  for (const auto& k : catalog) {
    if (k.family == f && k.subgroup == h) return k;
  }
  throw std::runtime_error("not catalogued");
}

std::vector<std::string> normal_names(const NormalSublatticeReport& r) {
  std::vector<std::string> out;
  for (Node n : r.normal_nodes) out.push_back(r.catalog[n].name);
  return out;
}

bool brute_dcc(const Group& g, const ElementSet& a, const ElementSet& h) {
  for (Element x = 0; x < g.order(); ++x) {
    std::set<Element> lhs, rhs;
    for (Element p : a.elements()) {
      for (Element q : h.elements()) {
        lhs.insert(g.mul(g.mul(p, x), q));
        rhs.insert(g.mul(g.mul(q, x), p));
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

InclusionScenario sn_group_type(size_t n) {
  GroupPtr g = corpus::symmetric(n);
  std::string cyc = "(", sub = "(";
  for (size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  for (size_t i = 1; i < n; ++i) sub += std::to_string(i) + (i + 1 < n ? " " : ")");
  std::string bgens = n >= 3 ? "(1 2), " + sub : "";
  return InclusionScenario::group_type(corpus::sub(g, cyc), corpus::sub(g, bgens));
}

std::vector<InclusionScenario> corpus_scenarios() {
  std::vector<InclusionScenario> out;
  for (const auto& e : corpus::groups()) {
    GroupPtr g = corpus::make(e);
    out.push_back(InclusionScenario::crossed_product(g));
    out.push_back(InclusionScenario::fixed_point(g));
  }
  GroupPtr s4 = corpus::symmetric(4);
  for (const auto& h : enumerate_subgroups(s4)) {
    out.push_back(InclusionScenario::intermediate_crossed(h));
    out.push_back(InclusionScenario::intermediate_fixed(h));
  }
  return out;
}

}  // namespace

TEST_CASE("catalog sizes") {
  GroupPtr s3 = corpus::symmetric(3);
  CHECK(intermediate_catalog(InclusionScenario::crossed_product(s3)).size() == 6);
  CHECK(intermediate_catalog(InclusionScenario::fixed_point(s3)).size() == 6);
  CHECK(intermediate_catalog(InclusionScenario::intermediate_crossed(corpus::sub(s3, "(1 2 3)"))).size() == 2);

  InclusionScenario s5 = sn_group_type(5);
  size_t a_subs = enumerate_subgroups_of(s5.a()).size();
  size_t b_subs = enumerate_subgroups_of(s5.b()).size();
  CHECK(a_subs == 2);
  CHECK(b_subs == 30);
  auto cat = intermediate_catalog(s5);
  CHECK(cat.size() == a_subs + b_subs - 1);
  std::set<std::string> names;
  for (const auto& k : cat) names.insert(k.name);
  CHECK(names.size() == cat.size());
  CHECK(std::count_if(cat.begin(), cat.end(), [](const IntermediateObject& k) { return k.is_bottom; }) == 1);
  CHECK(std::count_if(cat.begin(), cat.end(), [](const IntermediateObject& k) { return k.is_top; }) == 1);
}

TEST_CASE("scenario construction") {
  GroupPtr s4 = corpus::symmetric(4);
  CHECK_THROWS_AS(InclusionScenario::group_type(corpus::sub(s4, "(1 2)"), corpus::sub(s4, "(1 2), (3 4)")),
                  PreconditionError);
  CHECK_THROWS_AS(InclusionScenario::group_type(corpus::sub(s4, "(1 2)"), corpus::sub(s4, "(3 4)")),
                  PreconditionError);  // does not generate S4
  InclusionScenario s = sn_group_type(4);
  CHECK(s.exact_factorization());
  CHECK(s.describe().find("exact factorization") != std::string::npos);
  // <(1 2 3 4)> and <(1 2 3)> generate S4 but 4 * 3 < 24
  InclusionScenario loose = InclusionScenario::group_type(corpus::sub(s4, "(1 2 3 4)"), corpus::sub(s4, "(1 2 3)"));
  CHECK_FALSE(loose.exact_factorization());
  CHECK(depth2_status(loose) == Depth2Verdict::Unknown);
  CHECK(parse_scenario_kind("group_type") == ScenarioKind::GroupType);
  CHECK_FALSE(parse_scenario_kind("groupType").has_value());
}

TEST_CASE("normality of catalogued intermediates") {
  GroupPtr s3 = corpus::symmetric(3);
  InclusionScenario cp = InclusionScenario::crossed_product(s3);
  auto cat = intermediate_catalog(cp);
  NormalResult a3 = is_normal_intermediate(cp, object_for(cat, Family::CrossedBy, corpus::sub(s3, "(1 2 3)")));
  CHECK(a3.verdict == NormalVerdict::Normal);
  CHECK_FALSE(a3.criterion.empty());
  NormalResult t = is_normal_intermediate(cp, object_for(cat, Family::CrossedBy, corpus::sub(s3, "(1 2)")));
  CHECK(t.verdict == NormalVerdict::NotNormal);
  CHECK(t.witness.has_value());
  CHECK_FALSE(t.trace.empty());

  InclusionScenario s5 = sn_group_type(5);
  auto cat5 = intermediate_catalog(s5);
  Subgroup a4 = corpus::sub(s5.group(), "(1 2 3), (2 3 4)");
  CHECK(a4.size() == 12);
  CHECK(is_normal_intermediate(s5, object_for(cat5, Family::CrossedBy, a4)).is_normal());

  InclusionScenario s4 = sn_group_type(4);
  auto cat4 = intermediate_catalog(s4);
  Subgroup alt3 = corpus::sub(s4.group(), "(1 2 3)");
  NormalResult r = is_normal_intermediate(s4, object_for(cat4, Family::CrossedBy, alt3));
  CHECK(r.verdict == NormalVerdict::NotNormal);
  CHECK(product_set(alt3, s4.a()) != product_set(s4.a(), alt3));

  IntermediateObject foreign = intermediate_catalog(InclusionScenario::crossed_product(corpus::named("S4")))[3];
  CHECK_THROWS_AS(is_normal_intermediate(cp, foreign), PreconditionError);
}

TEST_CASE("normality agrees with group oracles") {
  for (const auto& e : corpus::groups()) {
    CAPTURE(e.name);
    GroupPtr g = corpus::make(e);
    for (auto s : {InclusionScenario::crossed_product(g), InclusionScenario::fixed_point(g)}) {
      for (const auto& k : intermediate_catalog(s)) {
        CHECK(is_normal_intermediate(s, k).is_normal() == corpus::brute_normal(*g, k.subgroup.members().elements()));
      }
    }
  }
  GroupPtr s4 = corpus::symmetric(4);
  for (const auto& h : enumerate_subgroups(s4)) {
    InclusionScenario ic = InclusionScenario::intermediate_crossed(h);
    for (const auto& k : intermediate_catalog(ic)) {
      CHECK(is_normal_intermediate(ic, k).is_normal() == brute_dcc(*s4, k.subgroup.members(), h.members()));
    }
  }
}

TEST_CASE("quasi-normality") {
  GroupPtr s3 = corpus::symmetric(3);
  InclusionScenario cp = InclusionScenario::crossed_product(s3);
  auto cat = intermediate_catalog(cp);
  for (const auto& k : cat) {
    QuasiResult q = is_quasi_normal(cp, k);
    if (is_normal_subgroup(k.subgroup).holds || k.is_bottom || k.is_top) CHECK(q.verdict == QuasiVerdict::QuasiNormal);
  }
  QuasiResult t = is_quasi_normal(cp, object_for(cat, Family::CrossedBy, corpus::sub(s3, "(1 2)")));
  CHECK(t.verdict == QuasiVerdict::NotQuasiNormal);
  REQUIRE(t.obstruction);
  CHECK(product_set(corpus::sub(s3, "(1 2)"), corpus::sub(s3, "(1 3)")) !=
        product_set(corpus::sub(s3, "(1 3)"), corpus::sub(s3, "(1 2)")));
  auto table = quasi_normal_table(cp, cat);
  for (size_t i = 0; i < cat.size(); ++i) CHECK(table[i].verdict == is_quasi_normal(cp, cat[i]).verdict);

  InclusionScenario gt = sn_group_type(4);
  for (const auto& k : intermediate_catalog(gt)) CHECK(is_quasi_normal(gt, k).verdict == QuasiVerdict::Unsupported);
}

TEST_CASE("normal implies quasi-normal across corpus scenarios") {
  size_t normal = 0;
  for (const auto& s : corpus_scenarios()) {
    auto cat = intermediate_catalog(s);
    auto quasi = quasi_normal_table(s, cat);
    for (size_t i = 0; i < cat.size(); ++i) {
      if (!is_normal_intermediate(s, cat[i]).is_normal()) continue;
      ++normal;
      CHECK(quasi[i].verdict == QuasiVerdict::QuasiNormal);
    }
  }
  CHECK(normal > 100);
}

TEST_CASE("normal sublattice reports") {
  NormalSublatticeReport r = normal_sublattice_report(InclusionScenario::crossed_product(corpus::symmetric(4)));
  CHECK(r.catalog.size() == 30);
  CHECK(r.normal_nodes.size() == 4);
  CHECK(r.is_sublattice);
  CHECK(r.modular);
  CHECK(r.chain_lengths == std::map<size_t, uint64_t>{{3, 1}});
  CHECK(r.length() == 3u);
  CHECK(r.catalog_complete);
  std::vector<size_t> orders;
  for (Node n : r.normal_nodes) orders.push_back(r.catalog[n].subgroup.size());
  CHECK(orders == std::vector<size_t>{1, 4, 12, 24});

  NormalSublatticeReport five = normal_sublattice_report(sn_group_type(5));
  CHECK(normal_names(five) == std::vector<std::string>{"N", "P", "P⋊<(2 4 3), (1 3 2)>", "M"});
  CHECK(five.length() == 3u);
  CHECK_FALSE(five.catalog_complete);
  for (size_t i = 0; i + 1 < five.normal_nodes.size(); ++i) {
    CHECK(five.lattice.leq(five.normal_nodes[i], five.normal_nodes[i + 1]));
  }

  NormalSublatticeReport four = normal_sublattice_report(sn_group_type(4));
  CHECK(normal_names(four) == std::vector<std::string>{"N", "P", "M"});
  CHECK(four.length() == 2u);
}

TEST_CASE("depth 2 status") {
  CHECK(depth2_status(sn_group_type(5)) == Depth2Verdict::Depth2);
  CHECK(depth2_status(InclusionScenario::crossed_product(corpus::named("Q8"))) == Depth2Verdict::Depth2);
  GroupPtr s3 = corpus::symmetric(3);
  CHECK(depth2_status(InclusionScenario::intermediate_crossed(corpus::sub(s3, "(1 2)"))) == Depth2Verdict::Unknown);
}

TEST_CASE("depth 2 scenarios have modular normal sublattices") {
  std::vector<InclusionScenario> scenarios;
  for (const auto& e : corpus::groups()) {
    GroupPtr g = corpus::make(e);
    scenarios.push_back(InclusionScenario::crossed_product(g));
    scenarios.push_back(InclusionScenario::fixed_point(g));
  }
  for (size_t n = 3; n <= 5; ++n) scenarios.push_back(sn_group_type(n));
  for (const auto& s : scenarios) {
    REQUIRE(depth2_status(s) == Depth2Verdict::Depth2);
    NormalSublatticeReport r = normal_sublattice_report(s);
    CHECK(r.is_sublattice);
    for (Node a : r.normal_nodes) {
      for (Node b : r.normal_nodes) {
        CHECK(r.normal_flags[r.lattice.meet(a, b)]);
        CHECK(r.normal_flags[r.lattice.join(a, b)]);
      }
    }
    CHECK(r.modular);
    CHECK(r.chain_lengths.size() == 1);
  }
}

TEST_CASE("crossed product and fixed point normal sets coincide") {
  for (const auto& e : corpus::groups()) {
    GroupPtr g = corpus::make(e);
    auto cp = normal_sublattice_report(InclusionScenario::crossed_product(g));
    auto fp = normal_sublattice_report(InclusionScenario::fixed_point(g));
    std::set<ElementSet> a, b;
    for (Node n : cp.normal_nodes) a.insert(cp.catalog[n].subgroup.members());
    for (Node n : fp.normal_nodes) b.insert(fp.catalog[n].subgroup.members());
    CHECK(a == b);
  }
}

TEST_CASE("Hopf cross-check") {
  GroupPtr s3 = corpus::symmetric(3);
  CrosscheckReport fp = hopf_crosscheck(InclusionScenario::fixed_point(s3));
  CHECK(fp.rows.size() == 6);
  CHECK(fp.all_agree());
  size_t normal = 0;
  for (const auto& row : fp.rows) normal += row.normal_intermediate;
  CHECK(normal == 3);

  CrosscheckReport q8 = hopf_crosscheck(InclusionScenario::fixed_point(corpus::named("Q8")));
  CHECK(q8.all_agree());
  for (const auto& row : q8.rows) CHECK(row.normal_intermediate);

  CrosscheckReport c2 = hopf_crosscheck(InclusionScenario::crossed_product(corpus::named("C2")));
  CHECK(c2.rows.size() == 2);
  for (const auto& row : c2.rows) CHECK(row.normal_intermediate);

  CHECK(hopf_crosscheck(InclusionScenario::crossed_product(corpus::symmetric(4))).all_agree());
  CHECK_THROWS_AS(hopf_crosscheck(sn_group_type(4)), PreconditionError);
}

TEST_CASE("tensor scenarios") {
  auto cp = [](const GroupPtr& g) { return InclusionScenario::crossed_product(g); };
  GroupPtr s3 = corpus::symmetric(3), c2 = corpus::named("C2");

  InclusionScenario s3c2 = tensor_scenario(cp(s3), cp(c2));
  CHECK(s3c2.group()->order() == 12);

  InclusionScenario v = tensor_scenario(cp(c2), cp(c2));
  auto cat = intermediate_catalog(v);
  CHECK(cat.size() == 5);
  for (const auto& k : cat) CHECK(is_normal_intermediate(v, k).is_normal());

  InclusionScenario ss = tensor_scenario(cp(s3), cp(s3));
  Element t = *s3->find(parse_permutation("(1 2)", 3));
  // (t, e) has index t * |S3| + e
  Element te = static_cast<Element>(t * s3->order() + s3->identity());
  Subgroup te_sub = Subgroup::generated(ss.group(), {te});
  CHECK(te_sub.size() == 2);
  CHECK_FALSE(is_normal_intermediate(ss, object_for(intermediate_catalog(ss), Family::CrossedBy, te_sub)).is_normal());
}

TEST_CASE("restriction to intermediate groups") {
  // P x| A normal in P x| H ... P x| G implies the same inside P x| G0 for A <= G0 <= G.
  GroupPtr s4 = corpus::symmetric(4);
  auto subs = enumerate_subgroups(s4);
  size_t checked = 0;
  for (const auto& g0 : subs) {
    std::vector<Permutation> gens;
    for (Element x : g0.generating_set()) gens.push_back(s4->permutations()[x]);
    GroupPtr sub = make_group(Group::from_permutations(4, gens));
    auto map = [&](const Subgroup& x) {
      std::vector<Element> els;
      for (Element y : x.members().elements()) els.push_back(*sub->find(s4->permutations()[y]));
      return Subgroup::generated(sub, els);
    };
    for (const auto& h : subs) {
      if (!h.is_subgroup_of(g0)) continue;
      InclusionScenario whole = InclusionScenario::intermediate_crossed(h);
      InclusionScenario inner = InclusionScenario::intermediate_crossed(map(h));
      auto inner_cat = intermediate_catalog(inner);
      for (const auto& k : intermediate_catalog(whole)) {
        if (!k.subgroup.is_subgroup_of(g0) || !is_normal_intermediate(whole, k).is_normal()) continue;
        CHECK(is_normal_intermediate(inner, object_for(inner_cat, Family::CrossedBy, map(k.subgroup))).is_normal());
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("group-type counting criterion matches AH = HA on exact factorizations") {
  size_t triples = 0;
  for (const auto& e : corpus::groups()) {
    GroupPtr g = corpus::make(e);
    auto subs = enumerate_subgroups(g);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        if (!exact_factorization_check(*g, a, b)) continue;
        for (const auto& h : enumerate_subgroups_of(b)) {
          GroupTypeCounts c = group_type_counts(a, b, h);
          bool hn = is_normal_subgroup(h, b).holds;
          bool permutes = product_set(a, h) == product_set(h, a);
          CHECK((c.ah_ba == c.ah_ha && hn) == (permutes && hn));
          ++triples;
        }
      }
    }
  }
  CHECK(triples > 100);
}

TEST_CASE("group-type FixedBy family") {
  for (size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    InclusionScenario s = sn_group_type(n);
    for (const auto& k : intermediate_catalog(s)) {
      if (k.family != Family::FixedBy || k.is_bottom || k.subgroup.is_trivial()) continue;
      NormalResult r = is_normal_intermediate(s, k);
      CHECK_FALSE(fixed_family_permutes(s, k.subgroup));
      CHECK(r.verdict == NormalVerdict::NotNormal);
    }
  }
  InclusionScenario s5 = sn_group_type(5);
  auto cat = intermediate_catalog(s5);
  for (const auto& k : cat) {
    for (const auto& l : cat) {
      if (k.is_bottom || l.is_top) CHECK(intermediate_leq(s5, k, l));
    }
  }
}
