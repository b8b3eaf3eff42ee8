#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nisub/error.hpp"
#include "nisub/report.hpp"
#include "nisub/scenario_file.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace nisub;
namespace fs = std::filesystem;

namespace {

std::string scenario_path(const std::string& name) { return std::string(NISUB_SOURCE_DIR) + "/scenarios/" + name; }

const char* kS3Group = "[group]\nname = S3\ndegree = 3\ngenerators = (1 2 3), (1 2)\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_scenario_text(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0);
}

AnalysisReport run_file(const std::string& name) { return run(parse_scenario(scenario_path(name))); }

int run_cli(const std::string& args, std::string* output = nullptr) {
  fs::path out = fs::temp_directory_path() / ("nisub_cli_" + std::to_string(::getpid()) + ".out");
  std::string cmd = std::string(NISUB_CLI) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  fs::remove(out);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse the S5 group-type file") {
  ScenarioFile sf = parse_scenario(scenario_path("s5_group_type.scn"));
  CHECK(sf.group_name == "S5");
  CHECK(sf.degree == 5);
  CHECK(sf.group->order() == 120);
  REQUIRE(sf.kind);
  CHECK(*sf.kind == ScenarioKind::GroupType);
  REQUIRE(sf.a);
  REQUIRE(sf.b);
  CHECK(sf.a->size() == 5);
  CHECK(sf.b->size() == 24);
  CHECK_FALSE(sf.h);
  CHECK(sf.a_text == "(1 2 3 4 5)");
  CHECK(sf.analyses.hopf_crosscheck);
  CHECK(sf.formats == std::vector<std::string>{"text", "json", "dot"});
  CHECK(sf.scenario().exact_factorization());
}

TEST_CASE("parse errors carry positions") {
  ParseError outside = parse_error("[group]\ndegree = 5\ngenerators = (1 2 3 4 5), (1 6)\n");
  CHECK(outside.line() == 3);
  CHECK(outside.column() == 30);

  std::string g5 = "[group]\ndegree = 5\ngenerators = (1 2 3 4 5), (1 2)\n";
  ParseError missing_b = parse_error(g5 + "[scenario]\nkind = group_type\nA = (1 2 3 4 5)\n");
  CHECK(missing_b.line() == 4);
  CHECK(missing_b.message().find("'B'") != std::string::npos);

  ParseError not_in_group = parse_error(std::string("[group]\ndegree = 4\ngenerators = (1 2 3), (1 2)(3 4)\n") +
                                        "[scenario]\nkind = intermediate_crossed\nH = (1 2 3), (1 2)\n");
  CHECK(not_in_group.line() == 6);
  CHECK(not_in_group.column() == 14);

  CHECK(parse_error(std::string(kS3Group) + "[scenario]\nkind = semidirect\n").column() == 8);
  CHECK(parse_error(std::string(kS3Group) + "[bogus]\n").line() == 5);
  CHECK(parse_error(std::string(kS3Group) + "colour = red\n").line() == 5);
  CHECK(parse_error(std::string(kS3Group) + "name = again\n").line() == 5);
  CHECK(parse_error(std::string(kS3Group) + "[analyses]\ndepth2 = maybe\n").line() == 6);
  CHECK(parse_error(std::string(kS3Group) + "[scenario]\nkind = crossed_product\nH = (1 2)\n").line() == 7);
  CHECK(parse_error(std::string(kS3Group) + "[output]\nformats = text, pdf\n").line() == 6);
  CHECK(parse_error("degree = 3\n").line() == 1);
  CHECK(parse_error("[group]\ndegree = 0\ngenerators = \n").line() == 2);
  CHECK(parse_error(std::string(kS3Group) + "[scenario]\nkind = group_type\nA = (1 2)\nB = (1 2)\n").line() == 5);
  CHECK_THROWS_AS(parse_scenario("/nonexistent/file.scn"), ParseError);
}

TEST_CASE("comments, blank lines and defaults") {
  ScenarioFile sf = parse_scenario_text(std::string("# header\n\n") + kS3Group +
                                        "[scenario]   # inline\nkind = crossed_product\n[analyses]\nmodularity = off\n");
  CHECK(sf.group->order() == 6);
  CHECK_FALSE(sf.analyses.modularity);
  CHECK(sf.analyses.normal_lattice);
  CHECK_FALSE(sf.analyses.subhopf_enumeration);
  CHECK(sf.formats == std::vector<std::string>{"text"});

  ScenarioFile bare = parse_scenario_text(kS3Group);
  CHECK_FALSE(bare.kind);
  CHECK_THROWS_AS(bare.scenario(), PreconditionError);
}

TEST_CASE("chain lengths of the S_n examples") {
  CHECK(run_file("s5_group_type.scn").lattice.length == 3u);
  CHECK(run_file("s4_group_type.scn").lattice.length == 2u);
}

TEST_CASE("crossed product of S4 with the Hopf cross-check") {
  AnalysisReport r = run_file("s4_crossed.scn");
  CHECK(r.all_checks_pass());
  bool saw_hopf = false;
  for (const auto& c : r.checks) {
    CHECK(c.status == CheckStatus::Pass);
    saw_hopf |= c.name == "hopf four-way equivalence";
  }
  CHECK(saw_hopf);
  CHECK(r.subhopf_count == 30u);
  CHECK(r.lattice.normal_nodes.size() == 4);
}

TEST_CASE("every corpus scenario passes its checks") {
  for (const auto& entry : fs::directory_iterator(std::string(NISUB_SOURCE_DIR) + "/scenarios")) {
    if (entry.path().extension() != ".scn") continue;
    CAPTURE(entry.path().string());
    AnalysisReport r = run(parse_scenario(entry.path().string()));
    CHECK(r.all_checks_pass());
    CHECK(r.rows.size() == r.lattice.nodes.size());
    std::set<std::string> names;
    for (const auto& row : r.rows) names.insert(row.name);
    CHECK(names.size() == r.rows.size());
    CHECK(validate_report_json(report_to_json(r)).empty());
  }
}

TEST_CASE("structured output is deterministic") {
  ScenarioFile sf = parse_scenario(scenario_path("s3_crossed.scn"));
  std::string a = emit_json(run(sf)), b = emit_json(run(sf));
  CHECK(a == b);
  CHECK(emit_dot(run(sf)) == emit_dot(run(sf)));
  CHECK(emit_json(run(sf, {7})) != a);  // the seed is echoed
}

TEST_CASE("json round-trips through the validator") {
  AnalysisReport r = run_file("s5_group_type.scn");
  std::string text = emit_json(r);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(validate_report_json(doc).empty());
  CHECK(doc.dump(2) + "\n" == text);

  nlohmann::json bad = doc;
  bad["intermediates"][0]["normal"]["verdict"] = "sort_of";
  CHECK_FALSE(validate_report_json(bad).empty());
  bad = doc;
  bad.erase("lattice");
  CHECK_FALSE(validate_report_json(bad).empty());
  bad = doc;
  bad["extra"] = 1;
  CHECK_FALSE(validate_report_json(bad).empty());
  bad = doc;
  bad["intermediates"].push_back(doc["intermediates"][0]);
  CHECK_FALSE(validate_report_json(bad).empty());
  bad = doc;
  bad["schema_version"] = 2;
  CHECK_FALSE(validate_report_json(bad).empty());
  bad = doc;
  bad["scenario"]["group"]["order"] = -1;
  CHECK_FALSE(validate_report_json(bad).empty());
}

TEST_CASE("schema closure") {
  const auto& enums = report_enums();
  auto declared = [&](const std::string& field, const std::string& value) {
    const auto& v = enums.at(field);
    return std::find(v.begin(), v.end(), value) != v.end();
  };
  for (auto k : {ScenarioKind::CrossedProduct, ScenarioKind::FixedPoint, ScenarioKind::IntermediateCrossed,
                 ScenarioKind::IntermediateFixed, ScenarioKind::GroupType}) {
    CHECK(declared("kind", to_string(k)));
  }
  for (auto f : {Family::CrossedBy, Family::FixedBy}) CHECK(declared("family", to_string(f)));
  for (auto v : {NormalVerdict::Normal, NormalVerdict::NotNormal, NormalVerdict::NotCovered}) CHECK(declared("normal", to_string(v)));
  for (auto v : {QuasiVerdict::QuasiNormal, QuasiVerdict::NotQuasiNormal, QuasiVerdict::Unsupported}) {
    CHECK(declared("quasi_normal", to_string(v)));
  }
  for (auto v : {Depth2Verdict::Depth2, Depth2Verdict::NotDepth2, Depth2Verdict::Unknown}) CHECK(declared("depth2", to_string(v)));
  for (auto v : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped}) CHECK(declared("status", to_string(v)));

  // the shipped schema document declares the same values
  std::ifstream in(std::string(NISUB_SOURCE_DIR) + "/docs/report.schema.json");
  REQUIRE(in);
  nlohmann::json schema = nlohmann::json::parse(in);
  for (const auto& [field, values] : enums) {
    CAPTURE(field);
    CHECK(schema["$defs"][field]["enum"].get<std::vector<std::string>>() == values);
  }
}

TEST_CASE("text output lists every intermediate with its criterion") {
  AnalysisReport r = run_file("s4_crossed.scn");
  std::string text = emit_text(r);
  for (const auto& row : r.rows) {
    CHECK(text.find(row.name + " ") != std::string::npos);
    for (const auto& step : row.normal.trace) CHECK(text.find(step) != std::string::npos);
  }
  size_t criteria = 0;
  for (size_t pos = text.find("criterion: "); pos != std::string::npos; pos = text.find("criterion: ", pos + 1)) ++criteria;
  CHECK(criteria == r.rows.size());
}

TEST_CASE("dot output of the S3 crossed product") {
  std::string dot = emit_dot(run_file("s3_crossed.scn"));
  size_t nodes = 0, filled = 0;
  for (size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) ++nodes;
  for (size_t pos = dot.find("style=filled"); pos != std::string::npos; pos = dot.find("style=filled", pos + 1)) ++filled;
  CHECK(nodes == 6);
  CHECK(filled == 3);  // N, N x| A3 and M
  CHECK(dot.find("label=\"N\", style=filled") != std::string::npos);
  CHECK(dot.find("label=\"M\", style=filled") != std::string::npos);
}

TEST_CASE("command line exit codes and outputs") {
  std::string out;
  CHECK(run_cli("analyze " + scenario_path("s5_group_type.scn") + " --emit text", &out) == 0);
  CHECK(out.find("length       3") != std::string::npos);

  fs::path dir = fs::temp_directory_path() / ("nisub_cli_dir_" + std::to_string(::getpid()));
  CHECK(run_cli("analyze " + scenario_path("s3_crossed.scn") + " --emit json,dot --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "s3_crossed.json"));
  CHECK(fs::exists(dir / "s3_crossed.dot"));
  CHECK_FALSE(fs::exists(dir / "s3_crossed.txt"));
  std::ifstream js(dir / "s3_crossed.json");
  CHECK(validate_report_json(nlohmann::json::parse(js)).empty());
  fs::remove_all(dir);

  fs::path bad = fs::temp_directory_path() / ("nisub_bad_" + std::to_string(::getpid()) + ".scn");
  std::ofstream(bad) << "[group]\ndegree = 5\ngenerators = (1 2 3 4 5), (1 6)\n[scenario]\nkind = crossed_product\n";
  CHECK(run_cli("analyze " + bad.string(), &out) == 2);
  CHECK(out.find("line 3") != std::string::npos);
  fs::remove(bad);

  CHECK(run_cli("analyze /nonexistent.scn") == 2);
  CHECK(run_cli("analyze " + scenario_path("s3_crossed.scn") + " --emit pdf") == 2);
  CHECK(run_cli("frobnicate") == 2);

  CHECK(run_cli("groups subgroups " + scenario_path("s4_crossed.scn"), &out) == 0);
  CHECK(out.find("30 subgroups, 4 normal") != std::string::npos);
  CHECK(run_cli("hopf verify " + scenario_path("s3_group_type.scn"), &out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(run_cli("hopf subhopf " + scenario_path("s3_crossed.scn"), &out) == 0);
  CHECK(out.find("group algebra (dim 6): 6 subHopf algebras") != std::string::npos);
  CHECK(out.find("dual group algebra (dim 6): 3 subHopf algebras") != std::string::npos);
  CHECK(run_cli("fusion graph " + scenario_path("e6.graph") + " --vertex theta --power 2", &out) == 0);
  CHECK(out.find("multiplicity of theta in power 2: 1") != std::string::npos);
  CHECK(run_cli("fusion graph " + scenario_path("e6.graph") + " --vertex zeta --power 2") == 2);
}

TEST_CASE("hopf verify reads and writes tensor files") {
  fs::path file = fs::temp_directory_path() / ("nisub_hopf_" + std::to_string(::getpid()) + ".hopf");
  CHECK(run_cli("hopf verify " + scenario_path("s3_group_type.scn") + " --save " + file.string()) == 0);
  std::string out;
  CHECK(run_cli("hopf verify " + file.string(), &out) == 0);
  CHECK(out.find("(dim 6)") != std::string::npos);

  // break one antipode entry
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  size_t pos = text.find("\nantipode ");
  REQUIRE(pos != std::string::npos);
  size_t eol = text.find('\n', pos + 1);
  std::string line = text.substr(pos + 1, eol - pos - 1);
  text.replace(pos + 1, line.size(), line.substr(0, line.rfind(' ')) + " 2");
  std::ofstream(file) << text;
  CHECK(run_cli("hopf verify " + file.string(), &out) == 1);
  CHECK(out.find("FAIL") != std::string::npos);
  fs::remove(file);
}
