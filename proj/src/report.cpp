#include "nisub/report.hpp"

#include "nisub/error.hpp"
#include "nisub/fusion.hpp"
#include "nisub/hopf.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace nisub {

namespace {

constexpr size_t kBicrossedAxiomCap = 240;
constexpr size_t kSubhopfCap = 60;
constexpr size_t kBicrossedSubhopfCap = 24;

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Skipped, std::move(detail)};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string describe_lengths(const std::map<size_t, uint64_t>& lengths) {
  std::vector<std::string> parts;
  for (const auto& [len, count] : lengths) parts.push_back(std::to_string(len) + " (x" + std::to_string(count) + ")");
  return parts.empty() ? "-" : join(parts, ", ");
}

size_t display_width(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, size_t width) {
  size_t w = display_width(s);
  return w >= width ? s + " " : s + std::string(width - w, ' ');
}

bool is_crossed_or_fixed(ScenarioKind k) {
  return k == ScenarioKind::CrossedProduct || k == ScenarioKind::FixedPoint;
}

void add_hopf_checks(const ScenarioFile& sf, const InclusionScenario& s, AnalysisReport& r) {
  const std::string name = "hopf four-way equivalence";
  if (is_crossed_or_fixed(s.kind())) {
    CrosscheckReport cr = hopf_crosscheck(s);
    std::vector<std::string> bad;
    for (const auto& row : cr.rows) {
      if (!row.agrees()) bad.push_back(row.name);
    }
    r.checks.push_back(check(name, bad.empty(),
                             bad.empty() ? std::to_string(cr.rows.size()) + " subgroups agree"
                                         : "disagreement at " + join(bad, ", ")));
    return;
  }
  if (s.kind() == ScenarioKind::GroupType) {
    const std::string axioms = "bicrossed product satisfies the Hopf axioms";
    if (!s.exact_factorization()) {
      r.checks.push_back(skipped(axioms, "factorization is not exact"));
    } else if (s.group()->order() > kBicrossedAxiomCap) {
      r.checks.push_back(skipped(axioms, "|G| = " + std::to_string(s.group()->order()) + " above " +
                                             std::to_string(kBicrossedAxiomCap)));
    } else {
      AxiomReport ar = verify_hopf_axioms(bicrossed_product(matched_pair_from_factorization(s.a(), s.b())));
      r.checks.push_back(check(axioms, ar.all_passed(), ar.summary()));
    }
    return;
  }
  (void)sf;
  r.checks.push_back(skipped(name, "not defined for " + to_string(s.kind())));
}

void add_subhopf_checks(const InclusionScenario& s, uint64_t seed, AnalysisReport& r) {
  const Group& g = *s.group();
  SubhopfOptions opts;
  opts.seed = seed;
  if (is_crossed_or_fixed(s.kind())) {
    const std::string name = "subHopf algebras match subgroups";
    const std::string dual_name = "subHopf algebras of the dual match normal subgroups";
    if (g.order() > kSubhopfCap) {
      std::string why = "|G| = " + std::to_string(g.order()) + " above " + std::to_string(kSubhopfCap);
      r.checks.push_back(skipped(name, why));
      r.checks.push_back(skipped(dual_name, why));
      return;
    }
    auto subgroups = enumerate_subgroups(s.group());
    size_t normal = 0;
    for (const auto& h : subgroups) normal += is_normal_subgroup(h) ? 1 : 0;
    auto cg = std::make_shared<const HopfAlgebra>(group_algebra(g));
    size_t count = enumerate_subhopf(cg, opts).size();
    size_t dual_count = enumerate_subhopf(dual_hopf(cg).dual, opts).size();
    r.subhopf_count = count;
    r.checks.push_back(check(name, count == subgroups.size(),
                             std::to_string(count) + " vs " + std::to_string(subgroups.size())));
    r.checks.push_back(check(dual_name, dual_count == normal,
                             std::to_string(dual_count) + " vs " + std::to_string(normal)));
    return;
  }
  if (s.kind() == ScenarioKind::GroupType && s.exact_factorization() && g.order() <= kBicrossedSubhopfCap) {
    auto h = std::make_shared<const HopfAlgebra>(bicrossed_product(matched_pair_from_factorization(s.a(), s.b())));
    r.subhopf_count = enumerate_subhopf(h, opts).size();
  }
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool AnalysisReport::all_checks_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

AnalysisReport run(const ScenarioFile& sf, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  InclusionScenario s = sf.scenario();

  AnalysisReport r;
  r.origin = sf.origin;
  r.kind = s.kind();
  r.description = s.describe();
  r.group_name = sf.group_name.empty() ? s.group()->name() : sf.group_name;
  r.group_order = s.group()->order();
  r.degree = sf.degree;
  if (sf.a) r.subgroups["A"] = sf.a->label();
  if (sf.b) r.subgroups["B"] = sf.b->label();
  if (sf.h) r.subgroups["H"] = sf.h->label();
  if (s.kind() == ScenarioKind::GroupType) r.exact_factorization = s.exact_factorization();
  r.seed = options.seed;

  NormalSublatticeReport nr = normal_sublattice_report(s);
  r.catalog_complete = nr.catalog_complete;
  std::vector<QuasiResult> quasi;
  if (sf.analyses.quasi_normal) quasi = quasi_normal_table(s, nr.catalog);
  for (size_t i = 0; i < nr.catalog.size(); ++i) {
    const auto& k = nr.catalog[i];
    ReportRow row;
    row.name = k.name;
    row.family = k.family;
    row.subgroup = k.subgroup.label();
    row.order = k.subgroup.size();
    row.bottom = k.is_bottom;
    row.top = k.is_top;
    row.normal = nr.verdicts[i];
    if (!quasi.empty()) row.quasi = quasi[i];
    r.rows.push_back(std::move(row));
  }

  r.lattice.nodes = nr.lattice.names();
  for (Node n : nr.normal_nodes) r.lattice.normal_nodes.push_back(nr.lattice.name(n));
  r.lattice.is_sublattice = nr.is_sublattice;
  r.lattice.modular = nr.modular;
  if (nr.modularity_witness) {
    for (Node n : *nr.modularity_witness) r.lattice.modularity_witness.push_back(nr.lattice.name(nr.normal_nodes[n]));
  }
  r.lattice.chain_lengths = nr.chain_lengths;
  r.lattice.length = nr.length();
  r.diagram = nr.lattice;
  r.normal_flags = nr.normal_flags;

  if (sf.analyses.quasi_normal) {
    std::vector<std::string> bad;
    bool supported = false;
    for (const auto& row : r.rows) {
      if (!row.quasi || row.quasi->verdict == QuasiVerdict::Unsupported) continue;
      supported = true;
      if (row.normal.is_normal() && row.quasi->verdict != QuasiVerdict::QuasiNormal) bad.push_back(row.name);
    }
    const std::string name = "normal implies quasi-normal";
    if (!supported) {
      r.checks.push_back(skipped(name, "quasi-normality not modelled for " + to_string(s.kind())));
    } else {
      r.checks.push_back(check(name, bad.empty(), bad.empty() ? "" : "violated at " + join(bad, ", ")));
    }
  }
  if (sf.analyses.normal_lattice) {
    r.checks.push_back(check("normal intermediates form a sublattice", nr.is_sublattice,
                             std::to_string(nr.normal_nodes.size()) + " normal of " +
                                 std::to_string(nr.catalog.size())));
  }
  if (sf.analyses.modularity) {
    const std::string name = "normal sublattice is modular";
    if (!nr.is_sublattice) {
      r.checks.push_back(skipped(name, "normal set is not a sublattice"));
    } else {
      r.checks.push_back(check(name, nr.modular,
                               nr.modular ? "" : "witness " + join(r.lattice.modularity_witness, ", ")));
    }
  }
  if (sf.analyses.chain_lengths) {
    const std::string name = "maximal normal chains have equal length";
    if (!nr.is_sublattice) {
      r.checks.push_back(skipped(name, "normal set is not a sublattice"));
    } else {
      r.checks.push_back(check(name, nr.chain_lengths.size() == 1, describe_lengths(nr.chain_lengths)));
    }
  }
  if (sf.analyses.depth2) {
    r.depth2 = depth2_status(s);
    if (is_crossed_or_fixed(s.kind()) && s.group()->order() > 1) {
      size_t depth = depth_from_star(crossed_product_graph(*s.group()));
      r.checks.push_back(check("principal graph has depth 2", depth == 2, "depth " + std::to_string(depth)));
    }
  }
  if (sf.analyses.hopf_crosscheck) add_hopf_checks(sf, s, r);
  if (sf.analyses.subhopf_enumeration) add_subhopf_checks(s, options.seed, r);

  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "scenario     " << r.description << "\n";
  out << "kind         " << to_string(r.kind) << "\n";
  out << "group        " << r.group_name << " (order " << r.group_order << ")\n";
  for (const auto& [key, label] : r.subgroups) out << key << "            " << label << "\n";
  if (r.exact_factorization) out << "exact        " << (*r.exact_factorization ? "yes" : "no") << "\n";
  out << "catalog      " << r.rows.size() << " intermediates" << (r.catalog_complete ? "" : " (partial)") << "\n";
  out << "\n";

  size_t width = 4;
  for (const auto& row : r.rows) width = std::max(width, display_width(row.name));
  width += 2;
  out << pad("name", width) << pad("family", 12) << pad("order", 7) << pad("normal", 13) << "quasi\n";
  for (const auto& row : r.rows) {
    out << pad(row.name, width) << pad(to_string(row.family), 12) << pad(std::to_string(row.order), 7)
        << pad(to_string(row.normal.verdict), 13) << (row.quasi ? to_string(row.quasi->verdict) : std::string("-"));
    if (row.quasi && row.quasi->obstruction) out << " (" << *row.quasi->obstruction << ")";
    out << "\n";
    out << "    criterion: " << row.normal.criterion << "\n";
    for (const auto& step : row.normal.trace) out << "      " << step << "\n";
  }
  out << "\n";

  const auto& l = r.lattice;
  out << "normal nodes " << join(l.normal_nodes, ", ") << "\n";
  out << "sublattice   " << (l.is_sublattice ? "yes" : "no") << "\n";
  if (l.is_sublattice) {
    out << "modular      " << (l.modular ? "yes" : "no");
    if (!l.modularity_witness.empty()) out << " (witness " << join(l.modularity_witness, ", ") << ")";
    out << "\n";
    out << "chains       " << describe_lengths(l.chain_lengths) << "\n";
    out << "length       " << (l.length ? std::to_string(*l.length) : std::string("-")) << "\n";
  }
  if (r.depth2) out << "depth 2      " << to_string(*r.depth2) << "\n";
  if (r.subhopf_count) out << "subHopf      " << *r.subhopf_count << "\n";
  if (!r.checks.empty()) {
    out << "\nchecks\n";
    for (const auto& c : r.checks) {
      out << "  " << pad(to_string(c.status), 8) << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << "\nseed " << r.seed << ", " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  return out.str();
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json scenario = {
      {"origin", r.origin},
      {"kind", to_string(r.kind)},
      {"description", r.description},
      {"group", {{"name", r.group_name}, {"order", r.group_order}, {"degree", r.degree}}},
      {"subgroups", r.subgroups},
      {"exact_factorization", r.exact_factorization ? json(*r.exact_factorization) : json(nullptr)},
      {"catalog_complete", r.catalog_complete},
      {"seed", r.seed},
  };
  json rows = json::array();
  for (const auto& row : r.rows) {
    json normal = {{"verdict", to_string(row.normal.verdict)},
                   {"criterion", row.normal.criterion},
                   {"trace", row.normal.trace}};
    json quasi = nullptr;
    if (row.quasi) {
      quasi = {{"verdict", to_string(row.quasi->verdict)},
               {"obstruction", row.quasi->obstruction ? json(*row.quasi->obstruction) : json(nullptr)}};
    }
    rows.push_back({{"name", row.name},
                    {"family", to_string(row.family)},
                    {"subgroup", row.subgroup},
                    {"order", row.order},
                    {"bottom", row.bottom},
                    {"top", row.top},
                    {"normal", normal},
                    {"quasi_normal", quasi}});
  }
  json chains = json::array();
  for (const auto& [len, count] : r.lattice.chain_lengths) chains.push_back({{"length", len}, {"count", count}});
  json lattice = {
      {"nodes", r.lattice.nodes},
      {"normal", r.lattice.normal_nodes},
      {"is_sublattice", r.lattice.is_sublattice},
      {"modular", r.lattice.modular},
      {"modularity_witness",
       r.lattice.modularity_witness.empty() ? json(nullptr) : json(r.lattice.modularity_witness)},
      {"chain_lengths", chains},
      {"length", r.lattice.length ? json(*r.lattice.length) : json(nullptr)},
  };
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {
      {"schema", "nisub-report"},
      {"schema_version", AnalysisReport::kSchemaVersion},
      {"scenario", scenario},
      {"intermediates", rows},
      {"lattice", lattice},
      {"depth2", r.depth2 ? json(to_string(*r.depth2)) : json(nullptr)},
      {"subhopf_count", r.subhopf_count ? json(*r.subhopf_count) : json(nullptr)},
      {"checks", checks},
      {"all_checks_pass", r.all_checks_pass()},
  };
}

std::string emit_json(const AnalysisReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string emit_dot(const AnalysisReport& r) { return to_dot(r.diagram, r.normal_flags, "intermediates"); }

const std::map<std::string, std::vector<std::string>>& report_enums() {
  static const std::map<std::string, std::vector<std::string>> enums = {
      {"kind", {"crossed_product", "fixed_point", "intermediate_crossed", "intermediate_fixed", "group_type"}},
      {"family", {"crossed_by", "fixed_by"}},
      {"normal", {"normal", "not_normal", "not_covered"}},
      {"quasi_normal", {"quasi_normal", "not_quasi_normal", "unsupported"}},
      {"depth2", {"depth2", "not_depth2", "unknown"}},
      {"status", {"pass", "fail", "skipped"}},
  };
  return enums;
}

namespace {

class Validator {
 public:
  std::vector<std::string> errors;

  bool object(const nlohmann::json& j, const std::string& at, const std::set<std::string>& keys) {
    if (!j.is_object()) return fail(at, "expected object");
    bool ok = true;
    for (const auto& k : keys) {
      if (!j.contains(k)) ok = fail(at, "missing key '" + k + "'");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!keys.count(it.key())) ok = fail(at, "unexpected key '" + it.key() + "'");
    }
    return ok;
  }
  void string(const nlohmann::json& j, const std::string& at) {
    if (!j.is_string()) fail(at, "expected string");
  }
  void boolean(const nlohmann::json& j, const std::string& at) {
    if (!j.is_boolean()) fail(at, "expected boolean");
  }
  void count(const nlohmann::json& j, const std::string& at) {
    if (!j.is_number_unsigned()) fail(at, "expected non-negative integer");
  }
  void strings(const nlohmann::json& j, const std::string& at) {
    if (!j.is_array()) {
      fail(at, "expected array");
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) string(j[i], at + "/" + std::to_string(i));
  }
  void enumerated(const nlohmann::json& j, const std::string& at, const std::string& which) {
    const auto& values = report_enums().at(which);
    if (!j.is_string() || std::find(values.begin(), values.end(), j.get<std::string>()) == values.end()) {
      fail(at, "not a declared " + which + " value");
    }
  }
  bool fail(const std::string& at, const std::string& what) {
    errors.push_back((at.empty() ? "/" : at) + ": " + what);
    return false;
  }
};

}  // namespace

std::vector<std::string> validate_report_json(const nlohmann::json& doc) {
  Validator v;
  if (!v.object(doc, "", {"schema", "schema_version", "scenario", "intermediates", "lattice", "depth2",
                          "subhopf_count", "checks", "all_checks_pass"})) {
    return v.errors;
  }
  if (doc["schema"] != "nisub-report") v.fail("/schema", "expected \"nisub-report\"");
  if (doc["schema_version"] != AnalysisReport::kSchemaVersion) v.fail("/schema_version", "unsupported version");

  const auto& sc = doc["scenario"];
  if (v.object(sc, "/scenario", {"origin", "kind", "description", "group", "subgroups", "exact_factorization",
                                 "catalog_complete", "seed"})) {
    v.string(sc["origin"], "/scenario/origin");
    v.enumerated(sc["kind"], "/scenario/kind", "kind");
    v.string(sc["description"], "/scenario/description");
    if (v.object(sc["group"], "/scenario/group", {"name", "order", "degree"})) {
      v.string(sc["group"]["name"], "/scenario/group/name");
      v.count(sc["group"]["order"], "/scenario/group/order");
      v.count(sc["group"]["degree"], "/scenario/group/degree");
    }
    if (!sc["subgroups"].is_object()) {
      v.fail("/scenario/subgroups", "expected object");
    } else {
      for (auto it = sc["subgroups"].begin(); it != sc["subgroups"].end(); ++it) {
        if (it.key() != "A" && it.key() != "B" && it.key() != "H") v.fail("/scenario/subgroups", "unexpected key '" + it.key() + "'");
        v.string(it.value(), "/scenario/subgroups/" + it.key());
      }
    }
    if (!sc["exact_factorization"].is_null()) v.boolean(sc["exact_factorization"], "/scenario/exact_factorization");
    v.boolean(sc["catalog_complete"], "/scenario/catalog_complete");
    v.count(sc["seed"], "/scenario/seed");
  }

  const auto& rows = doc["intermediates"];
  std::set<std::string> names;
  if (!rows.is_array()) {
    v.fail("/intermediates", "expected array");
  } else {
    for (size_t i = 0; i < rows.size(); ++i) {
      std::string at = "/intermediates/" + std::to_string(i);
      const auto& row = rows[i];
      if (!v.object(row, at, {"name", "family", "subgroup", "order", "bottom", "top", "normal", "quasi_normal"})) continue;
      v.string(row["name"], at + "/name");
      if (row["name"].is_string() && !names.insert(row["name"].get<std::string>()).second) {
        v.fail(at + "/name", "duplicate intermediate");
      }
      v.enumerated(row["family"], at + "/family", "family");
      v.string(row["subgroup"], at + "/subgroup");
      v.count(row["order"], at + "/order");
      v.boolean(row["bottom"], at + "/bottom");
      v.boolean(row["top"], at + "/top");
      if (v.object(row["normal"], at + "/normal", {"verdict", "criterion", "trace"})) {
        v.enumerated(row["normal"]["verdict"], at + "/normal/verdict", "normal");
        v.string(row["normal"]["criterion"], at + "/normal/criterion");
        v.strings(row["normal"]["trace"], at + "/normal/trace");
      }
      const auto& q = row["quasi_normal"];
      if (!q.is_null() && v.object(q, at + "/quasi_normal", {"verdict", "obstruction"})) {
        v.enumerated(q["verdict"], at + "/quasi_normal/verdict", "quasi_normal");
        if (!q["obstruction"].is_null()) v.string(q["obstruction"], at + "/quasi_normal/obstruction");
      }
    }
  }

  const auto& l = doc["lattice"];
  if (v.object(l, "/lattice", {"nodes", "normal", "is_sublattice", "modular", "modularity_witness", "chain_lengths", "length"})) {
    v.strings(l["nodes"], "/lattice/nodes");
    v.strings(l["normal"], "/lattice/normal");
    v.boolean(l["is_sublattice"], "/lattice/is_sublattice");
    v.boolean(l["modular"], "/lattice/modular");
    if (!l["modularity_witness"].is_null()) v.strings(l["modularity_witness"], "/lattice/modularity_witness");
    if (!l["chain_lengths"].is_array()) {
      v.fail("/lattice/chain_lengths", "expected array");
    } else {
      for (size_t i = 0; i < l["chain_lengths"].size(); ++i) {
        std::string at = "/lattice/chain_lengths/" + std::to_string(i);
        if (v.object(l["chain_lengths"][i], at, {"length", "count"})) {
          v.count(l["chain_lengths"][i]["length"], at + "/length");
          v.count(l["chain_lengths"][i]["count"], at + "/count");
        }
      }
    }
    if (!l["length"].is_null()) v.count(l["length"], "/lattice/length");
    if (l["nodes"].is_array() && rows.is_array() && l["nodes"].size() != rows.size()) {
      v.fail("/lattice/nodes", "node count differs from intermediate count");
    }
  }

  if (!doc["depth2"].is_null()) v.enumerated(doc["depth2"], "/depth2", "depth2");
  if (!doc["subhopf_count"].is_null()) v.count(doc["subhopf_count"], "/subhopf_count");
  const auto& checks = doc["checks"];
  if (!checks.is_array()) {
    v.fail("/checks", "expected array");
  } else {
    for (size_t i = 0; i < checks.size(); ++i) {
      std::string at = "/checks/" + std::to_string(i);
      if (v.object(checks[i], at, {"name", "status", "detail"})) {
        v.string(checks[i]["name"], at + "/name");
        v.enumerated(checks[i]["status"], at + "/status", "status");
        v.string(checks[i]["detail"], at + "/detail");
      }
    }
  }
  v.boolean(doc["all_checks_pass"], "/all_checks_pass");
  return v.errors;
}

}  // namespace nisub
