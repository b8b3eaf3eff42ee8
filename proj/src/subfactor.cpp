#include "nisub/subfactor.hpp"

#include "nisub/error.hpp"

#include <algorithm>

namespace nisub {

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::CrossedProduct: return "crossed_product";
    case ScenarioKind::FixedPoint: return "fixed_point";
    case ScenarioKind::IntermediateCrossed: return "intermediate_crossed";
    case ScenarioKind::IntermediateFixed: return "intermediate_fixed";
    case ScenarioKind::GroupType: return "group_type";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(const std::string& s) {
  for (auto k : {ScenarioKind::CrossedProduct, ScenarioKind::FixedPoint, ScenarioKind::IntermediateCrossed,
                 ScenarioKind::IntermediateFixed, ScenarioKind::GroupType}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string to_string(Family f) { return f == Family::CrossedBy ? "crossed_by" : "fixed_by"; }

std::string to_string(NormalVerdict v) {
  switch (v) {
    case NormalVerdict::Normal: return "normal";
    case NormalVerdict::NotNormal: return "not_normal";
    case NormalVerdict::NotCovered: return "not_covered";
  }
  return "?";
}

std::string to_string(QuasiVerdict v) {
  switch (v) {
    case QuasiVerdict::QuasiNormal: return "quasi_normal";
    case QuasiVerdict::NotQuasiNormal: return "not_quasi_normal";
    case QuasiVerdict::Unsupported: return "unsupported";
  }
  return "?";
}

std::string to_string(Depth2Verdict v) {
  switch (v) {
    case Depth2Verdict::Depth2: return "depth2";
    case Depth2Verdict::NotDepth2: return "not_depth2";
    case Depth2Verdict::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scenarios

InclusionScenario InclusionScenario::crossed_product(const GroupPtr& g) {
  InclusionScenario s;
  s.kind_ = ScenarioKind::CrossedProduct;
  s.group_ = g;
  return s;
}

InclusionScenario InclusionScenario::fixed_point(const GroupPtr& g) {
  InclusionScenario s = crossed_product(g);
  s.kind_ = ScenarioKind::FixedPoint;
  return s;
}

InclusionScenario InclusionScenario::intermediate_crossed(const Subgroup& h) {
  InclusionScenario s;
  s.kind_ = ScenarioKind::IntermediateCrossed;
  s.group_ = h.parent();
  s.h_ = h;
  return s;
}

InclusionScenario InclusionScenario::intermediate_fixed(const Subgroup& h) {
  InclusionScenario s = intermediate_crossed(h);
  s.kind_ = ScenarioKind::IntermediateFixed;
  return s;
}

InclusionScenario InclusionScenario::group_type(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("group_type: A and B belong to different groups");
  if ((a.members() & b.members()).size() != 1) throw PreconditionError("group_type: A cap B must be trivial");
  const Group& g = a.group();
  std::vector<Element> gens = a.generating_set();
  for (Element x : b.generating_set()) gens.push_back(x);
  if (generated_set(g, gens).size() != g.order()) throw PreconditionError("group_type: A and B must generate the group");
  InclusionScenario s;
  s.kind_ = ScenarioKind::GroupType;
  s.group_ = a.parent();
  s.a_ = a;
  s.b_ = b;
  s.exact_ = a.size() * b.size() == g.order();
  return s;
}

std::string InclusionScenario::describe() const {
  std::string g = group_->name().empty() ? "G" : group_->name();
  switch (kind_) {
    case ScenarioKind::CrossedProduct: return "N in N x| G, G = " + g;
    case ScenarioKind::FixedPoint: return "M^G in M, G = " + g;
    case ScenarioKind::IntermediateCrossed: return "P x| H in P x| G, H = " + h_.label() + ", G = " + g;
    case ScenarioKind::IntermediateFixed: return "P^G in P^H, H = " + h_.label() + ", G = " + g;
    case ScenarioKind::GroupType:
      return "P^A in P x| B, A = " + a_.label() + ", B = " + b_.label() + ", G = " + g +
             (exact_ ? " (exact factorization)" : " (A B != G)");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

IntermediateObject make_object(Family f, const Subgroup& sub, std::string prefix, bool bottom, bool top) {
  IntermediateObject o;
  o.family = f;
  o.subgroup = sub;
  o.is_bottom = bottom;
  o.is_top = top;
  if (bottom) {
    o.name = "N";
  } else if (top) {
    o.name = "M";
  } else {
    o.name = prefix + sub.label();
  }
  return o;
}

void check_member(const InclusionScenario& s, const IntermediateObject& k) {
  if (k.subgroup.parent() != s.group()) throw PreconditionError("intermediate belongs to a different scenario");
  switch (s.kind()) {
    case ScenarioKind::CrossedProduct:
      if (k.family != Family::CrossedBy) throw PreconditionError("crossed_product catalogs only the crossed family");
      return;
    case ScenarioKind::FixedPoint:
      if (k.family != Family::FixedBy) throw PreconditionError("fixed_point catalogs only the fixed family");
      return;
    case ScenarioKind::IntermediateCrossed:
    case ScenarioKind::IntermediateFixed: {
      Family want = s.kind() == ScenarioKind::IntermediateCrossed ? Family::CrossedBy : Family::FixedBy;
      if (k.family != want || !s.h().is_subgroup_of(k.subgroup)) {
        throw PreconditionError("intermediate is not in the range H <= A <= G");
      }
      return;
    }
    case ScenarioKind::GroupType:
      if (k.family == Family::FixedBy) {
        if (!k.subgroup.is_subgroup_of(s.a()) || k.subgroup.is_trivial()) {
          throw PreconditionError("FixedBy intermediate needs {e} != A0 <= A");
        }
      } else if (!k.subgroup.is_subgroup_of(s.b())) {
        throw PreconditionError("CrossedBy intermediate needs H <= B");
      }
      return;
  }
}

std::string element_label(const Group& g, Element e) { return g.label(e); }

/// First element of x missing from y, if any.
std::optional<Element> first_missing(const ElementSet& x, const ElementSet& y) {
  for (Element e : x.elements()) {
    if (!y.contains(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<IntermediateObject> intermediate_catalog(const InclusionScenario& s) {
  std::vector<IntermediateObject> out;
  const GroupPtr& g = s.group();
  switch (s.kind()) {
    case ScenarioKind::CrossedProduct:
      for (const auto& h : enumerate_subgroups(g)) out.push_back(make_object(Family::CrossedBy, h, "N⋊", h.is_trivial(), h.is_whole()));
      break;
    case ScenarioKind::FixedPoint:
      for (const auto& h : enumerate_subgroups(g)) out.push_back(make_object(Family::FixedBy, h, "M^", h.is_whole(), h.is_trivial()));
      break;
    case ScenarioKind::IntermediateCrossed:
      for (const auto& a : subgroups_between(s.h(), g)) {
        out.push_back(make_object(Family::CrossedBy, a, "P⋊", a == s.h(), a.is_whole()));
      }
      break;
    case ScenarioKind::IntermediateFixed:
      for (const auto& a : subgroups_between(s.h(), g)) {
        out.push_back(make_object(Family::FixedBy, a, "P^", a.is_whole(), a == s.h()));
      }
      break;
    case ScenarioKind::GroupType: {
      // FixedBy(A0), A0 != {e}, from A0 = A (that is N) downward in size.
      auto subs_a = enumerate_subgroups_of(s.a());
      std::reverse(subs_a.begin(), subs_a.end());
      for (const auto& a0 : subs_a) {
        if (a0.is_trivial()) continue;
        out.push_back(make_object(Family::FixedBy, a0, "P^", a0 == s.a(), false));
      }
      for (const auto& h : enumerate_subgroups_of(s.b())) {
        IntermediateObject o = make_object(Family::CrossedBy, h, "P⋊", false, h == s.b());
        if (h.is_trivial()) o.name = "P";
        out.push_back(std::move(o));
      }
      break;
    }
  }
  return out;
}

bool intermediate_leq(const InclusionScenario& s, const IntermediateObject& k, const IntermediateObject& l) {
  (void)s;
  if (k.family == l.family) {
    return k.family == Family::CrossedBy ? k.subgroup.is_subgroup_of(l.subgroup) : l.subgroup.is_subgroup_of(k.subgroup);
  }
  if (k.family == Family::FixedBy) return true;  // P^A0 <= P <= P x| H
  return k.subgroup.is_trivial() && l.subgroup.is_trivial();
}

// ---------------------------------------------------------------------------
// Normality

NormalResult is_normal_intermediate(const InclusionScenario& s, const IntermediateObject& k) {
  check_member(s, k);
  const Group& g = *s.group();
  NormalResult r;
  auto set = [&](bool ok) { r.verdict = ok ? NormalVerdict::Normal : NormalVerdict::NotNormal; };
  switch (s.kind()) {
    case ScenarioKind::CrossedProduct:
    case ScenarioKind::FixedPoint: {
      r.criterion = "normal subgroup: g H g^-1 = H for all g in G";
      GroupCheck c = is_normal_subgroup(k.subgroup);
      set(c.holds);
      if (c.holds) {
        r.trace.push_back("H = " + k.subgroup.label() + " is normal in G");
      } else {
        r.witness = c.witness;
        r.trace.push_back("g H g^-1 != H for g = " + element_label(g, *c.witness));
      }
      return r;
    }
    case ScenarioKind::IntermediateCrossed:
    case ScenarioKind::IntermediateFixed: {
      r.criterion = "double cosets: A g H = H g A for all g in G";
      GroupCheck c = double_coset_condition(k.subgroup, s.h());
      set(c.holds);
      if (c.holds) {
        r.trace.push_back("A g H = H g A for every g, A = " + k.subgroup.label() + ", H = " + s.h().label());
      } else {
        r.witness = c.witness;
        r.trace.push_back("A g H != H g A for g = " + element_label(g, *c.witness));
      }
      return r;
    }
    case ScenarioKind::GroupType:
      break;
  }
  const Subgroup& a = s.a();
  const Subgroup& b = s.b();
  if (k.family == Family::FixedBy) {
    if (k.subgroup == a) {
      r.criterion = "bottom of the inclusion";
      r.verdict = NormalVerdict::Normal;
      r.trace.push_back("K = N");
      return r;
    }
    r.criterion = "maximality: A0 B = B A0 is necessary";
    if (!s.exact_factorization()) {
      r.verdict = NormalVerdict::NotCovered;
      r.trace.push_back("no criterion for the fixed family without an exact factorization");
      return r;
    }
    ElementSet ab = product_set(g, k.subgroup.members(), b.members());
    ElementSet ba = product_set(g, b.members(), k.subgroup.members());
    if (ab != ba) {
      r.verdict = NormalVerdict::NotNormal;
      r.witness = first_missing(ab, ba);
      r.trace.push_back("A0 B != B A0 with A0 = " + k.subgroup.label() + ": " + element_label(g, *r.witness) +
                        " lies in A0 B only");
    } else {
      r.verdict = NormalVerdict::NotCovered;
      r.trace.push_back("A0 B = B A0 holds; no sufficient criterion for the fixed family");
    }
    return r;
  }
  const Subgroup& h = k.subgroup;
  GroupCheck hb = is_normal_subgroup(h, b);
  r.trace.push_back(hb.holds ? "H = " + h.label() + " is normal in B"
                             : "H is not normal in B: b H b^-1 != H for b = " + element_label(g, *hb.witness));
  ElementSet ah = product_set(g, a.members(), h.members());
  ElementSet ha = product_set(g, h.members(), a.members());
  if (s.exact_factorization()) {
    r.criterion = "matched pair: H normal in B and A H = H A";
    bool perm = ah == ha;
    if (perm) {
      r.trace.push_back("A H = H A (" + std::to_string(ah.size()) + " elements)");
    } else {
      r.witness = first_missing(ah, ha);
      if (!r.witness) r.witness = first_missing(ha, ah);
      r.trace.push_back("A H != H A: " + element_label(g, *r.witness) + " lies in exactly one of them");
    }
    if (!hb.holds && !r.witness) r.witness = hb.witness;
    set(hb.holds && perm);
  } else {
    r.criterion = "counting: H normal in B and |AH cap BA| = |AH cap HA|";
    GroupTypeCounts c = group_type_counts(a, b, h);
    r.trace.push_back("|AH cap BA| = " + std::to_string(c.ah_ba) + ", |AH cap HA| = " + std::to_string(c.ah_ha));
    if (!hb.holds) r.witness = hb.witness;
    set(hb.holds && c.ah_ba == c.ah_ha);
  }
  return r;
}

bool fixed_family_permutes(const InclusionScenario& s, const Subgroup& a0) {
  if (s.kind() != ScenarioKind::GroupType) throw PreconditionError("fixed_family_permutes: group_type scenarios only");
  const Group& g = *s.group();
  return product_set(g, a0.members(), s.b().members()) == product_set(g, s.b().members(), a0.members());
}

namespace {

QuasiResult quasi_against(const InclusionScenario& s, const IntermediateObject& k,
                          const std::vector<IntermediateObject>& catalog) {
  if (s.kind() == ScenarioKind::GroupType) return {QuasiVerdict::Unsupported, std::nullopt};
  check_member(s, k);
  const Group& g = *s.group();
  for (const auto& l : catalog) {
    if (product_set(g, k.subgroup.members(), l.subgroup.members()) !=
        product_set(g, l.subgroup.members(), k.subgroup.members())) {
      return {QuasiVerdict::NotQuasiNormal, l.name};
    }
  }
  return {QuasiVerdict::QuasiNormal, std::nullopt};
}

}  // namespace

QuasiResult is_quasi_normal(const InclusionScenario& s, const IntermediateObject& k) {
  if (s.kind() == ScenarioKind::GroupType) return {QuasiVerdict::Unsupported, std::nullopt};
  return quasi_against(s, k, intermediate_catalog(s));
}

// ---------------------------------------------------------------------------
// Lattice report

std::optional<size_t> NormalSublatticeReport::length() const {
  if (chain_lengths.size() != 1) return std::nullopt;
  return chain_lengths.begin()->first;
}

NormalSublatticeReport normal_sublattice_report(const InclusionScenario& s) {
  NormalSublatticeReport r;
  r.catalog = intermediate_catalog(s);
  r.catalog_complete = s.kind() != ScenarioKind::GroupType;
  const size_t n = r.catalog.size();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i) {
    names.push_back(r.catalog[i].name);
    for (size_t j = 0; j < n; ++j) leq[i][j] = intermediate_leq(s, r.catalog[i], r.catalog[j]);
  }
  r.lattice = FiniteLattice::from_order(std::move(names), std::move(leq));
  for (size_t i = 0; i < n; ++i) {
    r.verdicts.push_back(is_normal_intermediate(s, r.catalog[i]));
    bool normal = r.verdicts.back().is_normal();
    r.normal_flags.push_back(normal);
    if (normal) r.normal_nodes.push_back(i);
  }
  r.is_sublattice = is_sublattice(r.normal_nodes, r.lattice);
  if (r.is_sublattice) {
    FiniteLattice sub = r.lattice.sublattice(r.normal_nodes);
    ModularityResult m = is_modular(sub);
    r.modular = m.modular;
    r.modularity_witness = m.witness;
    r.chain_lengths = maximal_chain_lengths(sub);
  }
  return r;
}

std::vector<QuasiResult> quasi_normal_table(const InclusionScenario& s, const std::vector<IntermediateObject>& catalog) {
  std::vector<QuasiResult> out;
  for (const auto& k : catalog) out.push_back(quasi_against(s, k, catalog));
  return out;
}

Depth2Verdict depth2_status(const InclusionScenario& s) {
  switch (s.kind()) {
    case ScenarioKind::CrossedProduct:
    case ScenarioKind::FixedPoint: return Depth2Verdict::Depth2;
    case ScenarioKind::GroupType: return s.exact_factorization() ? Depth2Verdict::Depth2 : Depth2Verdict::Unknown;
    default: return Depth2Verdict::Unknown;
  }
}

bool CrosscheckReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agrees(); });
}

CrosscheckReport hopf_crosscheck(const InclusionScenario& s) {
  if (s.kind() != ScenarioKind::CrossedProduct && s.kind() != ScenarioKind::FixedPoint) {
    throw PreconditionError("hopf_crosscheck: crossed_product or fixed_point scenarios only");
  }
  const Group& g = *s.group();
  HopfAlgebra cg = group_algebra(g);
  CrosscheckReport out;
  for (const auto& k : intermediate_catalog(s)) {
    CrosscheckRow row;
    row.name = k.name;
    row.normal_intermediate = is_normal_intermediate(s, k).is_normal();
    Vector e = jones_projection_of_subgroup(k.subgroup);
    row.central_projection = is_central(e, cg);
    row.normal_subhopf = is_normal_subhopf(group_subspace(g, k.subgroup.members()), cg).ad_invariant;
    row.bisch_test = bisch_projection_test(g, e).passed();
    out.rows.push_back(row);
  }
  return out;
}

InclusionScenario tensor_scenario(const InclusionScenario& s1, const InclusionScenario& s2) {
  if (s1.kind() != ScenarioKind::CrossedProduct || s2.kind() != ScenarioKind::CrossedProduct) {
    throw PreconditionError("tensor_scenario: both scenarios must be crossed products");
  }
  DirectProduct dp = direct_product(*s1.group(), *s2.group());
  GroupPtr g = make_group(std::move(dp.group));
  InclusionScenario s = InclusionScenario::crossed_product(g);
  for (const ElementSet* part : {&dp.left, &dp.right}) {
    IntermediateObject k;
    k.family = Family::CrossedBy;
    k.subgroup = Subgroup(g, *part);
    if (!is_normal_intermediate(s, k).is_normal()) {
      throw InvariantError("tensor_scenario: a tensor factor is not flagged normal");
    }
  }
  return s;
}

}  // namespace nisub
