// Command-line runner for scenario files, Hopf tensors and principal graphs.
#include "nisub/error.hpp"
#include "nisub/fusion.hpp"
#include "nisub/hopf.hpp"
#include "nisub/hopf_io.hpp"
#include "nisub/report.hpp"
#include "nisub/scenario_file.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace nisub;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    if (w[0] != '#') return w;
    std::getline(in, w);
  }
  return {};
}

std::vector<std::string> split_formats(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string f;
    while (std::getline(ss, f, ',')) {
      if (f.empty()) continue;
      if (f != "text" && f != "json" && f != "dot") throw InputError("unknown format '" + f + "'");
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

void write_output(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError("cannot write " + path.string());
}

int cmd_analyze(const std::string& file, std::vector<std::string> emit, std::string out_dir, uint64_t seed) {
  ScenarioFile sf = parse_scenario(file);
  std::vector<std::string> formats = emit.empty() ? sf.formats : split_formats(emit);
  if (out_dir.empty()) out_dir = sf.destination;

  AnalysisReport r = run(sf, RunOptions{seed});
  std::map<std::string, std::string> rendered;
  for (const auto& f : formats) {
    if (f == "text") rendered[f] = emit_text(r);
    if (f == "json") rendered[f] = emit_json(r);
    if (f == "dot") rendered[f] = emit_dot(r);
  }
  if (out_dir.empty()) {
    for (const auto& f : formats) std::cout << rendered[f];
  } else {
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
    std::string stem = fs::path(file).stem().string();
    const std::map<std::string, std::string> ext = {{"text", ".txt"}, {"json", ".json"}, {"dot", ".dot"}};
    for (const auto& f : formats) {
      fs::path p = dir / (stem + ext.at(f));
      write_output(p, rendered[f]);
      std::cerr << "wrote " << p.string() << "\n";
    }
  }
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Fail) std::cerr << "check failed: " << c.name << ": " << c.detail << "\n";
  }
  return r.all_checks_pass() ? kOk : kCheckFailed;
}

GroupPtr load_group(const std::string& file) {
  std::string text = read_file(file);
  if (first_word(text) == "nisub-group") {
    std::istringstream in(text);
    return make_group(read_group(in));
  }
  return parse_scenario_text(text, file).group;
}

int cmd_subgroups(const std::string& file) {
  GroupPtr g = load_group(file);
  auto subs = enumerate_subgroups(g);
  size_t normal = 0;
  std::cout << "group " << (g->name().empty() ? "G" : g->name()) << " of order " << g->order() << "\n";
  for (const auto& h : subs) {
    bool n = is_normal_subgroup(h).holds;
    normal += n ? 1 : 0;
    std::cout << std::setw(6) << h.size() << "  " << (n ? "normal " : "       ") << "  " << h.label() << "\n";
  }
  std::cout << subs.size() << " subgroups, " << normal << " normal\n";
  return kOk;
}

struct NamedHopf {
  std::string name;
  HopfPtr algebra;
};

std::vector<NamedHopf> load_hopf(const std::string& file) {
  std::string text = read_file(file);
  std::vector<NamedHopf> out;
  if (first_word(text) == "nisub-hopf") {
    std::istringstream in(text);
    HopfAlgebra h = read_hopf(in);
    std::string name = h.name().empty() ? "H" : h.name();
    out.push_back({name, std::make_shared<const HopfAlgebra>(std::move(h))});
    return out;
  }
  ScenarioFile sf = parse_scenario_text(text, file);
  if (sf.kind == ScenarioKind::GroupType && sf.scenario().exact_factorization()) {
    out.push_back({"bicrossed product",
                   std::make_shared<const HopfAlgebra>(bicrossed_product(matched_pair_from_factorization(*sf.a, *sf.b)))});
    return out;
  }
  auto cg = std::make_shared<const HopfAlgebra>(group_algebra(*sf.group));
  out.push_back({"group algebra", cg});
  out.push_back({"dual group algebra", dual_hopf(cg).dual});
  return out;
}

int cmd_hopf_verify(const std::string& file, const std::string& save) {
  bool ok = true;
  auto algebras = load_hopf(file);
  for (const auto& [name, h] : algebras) {
    AxiomReport ar = verify_hopf_axioms(*h);
    std::cout << name << " (dim " << h->dim() << ")\n";
    for (const auto& res : ar.results) {
      std::cout << "  " << (res.passed ? "pass  " : "FAIL  ") << res.name;
      if (!res.passed) {
        std::cout << " at";
        for (size_t i : res.witness) std::cout << " " << h->labels()[i];
      }
      std::cout << "\n";
    }
    ok = ok && ar.all_passed();
  }
  if (!save.empty()) {
    std::ostringstream out;
    write_hopf(out, *algebras.front().algebra);
    write_output(save, out.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_hopf_subhopf(const std::string& file, uint64_t seed) {
  SubhopfOptions opts;
  opts.seed = seed;
  for (const auto& [name, h] : load_hopf(file)) {
    auto subs = enumerate_subhopf(h, opts);
    std::cout << name << " (dim " << h->dim() << "): " << subs.size() << " subHopf algebras\n";
    std::map<size_t, size_t> by_dim;
    for (const auto& k : subs) ++by_dim[k.dim()];
    for (const auto& [d, c] : by_dim) std::cout << "  dim " << d << ": " << c << "\n";
  }
  return kOk;
}

int cmd_fusion_graph(const std::string& file, const std::string& vertex, size_t power) {
  std::string text = read_file(file);
  std::optional<PrincipalGraph> g;
  if (first_word(text) == "nisub-graph") {
    std::istringstream in(text);
    g = read_graph(in);
  } else {
    g = crossed_product_graph(*parse_scenario_text(text, file).group);
  }
  auto v = g->find_even(vertex);
  if (!v) throw InputError("no even vertex named '" + vertex + "'");
  std::cout << "graph " << (g->name().empty() ? "-" : g->name()) << ": " << g->even().size() << " even, "
            << g->odd().size() << " odd vertices\n";
  std::cout << "multiplicity of " << vertex << " in power " << power << ": " << multiplicity_in_power(*g, *v, power)
            << "\n";
  ScreenVerdict sv = strongly_outer_screen(*g, *v, default_screen_bound(*g));
  std::cout << "screen: " << sv.verdict();
  if (sv.appears) std::cout << " (k = " << sv.k << ")";
  std::cout << ", kmax " << sv.kmax << "\n";
  if (g->is_connected()) {
    std::cout << "depth: " << depth_from_star(*g) << "\n";
  } else {
    std::cout << "depth: disconnected\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal intermediate subfactor analysis for finite group models"};
  app.require_subcommand(1);

  std::string file, out_dir, vertex, save;
  std::vector<std::string> emit;
  uint64_t seed = 1;
  size_t power = 1;

  auto* analyze = app.add_subcommand("analyze", "Run the analyses requested by a scenario file");
  analyze->add_option("file", file, "Scenario file")->required();
  analyze->add_option("--emit", emit, "Output formats: text,json,dot")->delimiter(',');
  analyze->add_option("--out", out_dir, "Output directory (default: stdout)");
  analyze->add_option("--seed", seed, "Seed for center splitting");

  auto* groups = app.add_subcommand("groups", "Group utilities");
  groups->require_subcommand(1);
  auto* subgroups = groups->add_subcommand("subgroups", "List subgroups");
  subgroups->add_option("file", file, "Scenario or nisub-group file")->required();

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra utilities");
  hopf->require_subcommand(1);
  auto* verify = hopf->add_subcommand("verify", "Check the Hopf *-algebra axioms");
  verify->add_option("file", file, "nisub-hopf or scenario file")->required();
  verify->add_option("--save", save, "Write the (first) algebra as a nisub-hopf file");
  auto* subhopf = hopf->add_subcommand("subhopf", "Enumerate subHopf algebras");
  subhopf->add_option("file", file, "nisub-hopf or scenario file")->required();
  subhopf->add_option("--seed", seed, "Seed for center splitting");

  auto* fusion = app.add_subcommand("fusion", "Fusion and principal graph utilities");
  fusion->require_subcommand(1);
  auto* graph = fusion->add_subcommand("graph", "Path-count multiplicities on a principal graph");
  graph->add_option("file", file, "nisub-graph or scenario file")->required();
  graph->add_option("--vertex", vertex, "Even vertex")->required();
  graph->add_option("--power", power, "Power k of rho rho-bar")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(file, emit, out_dir, seed);
    if (*subgroups) return cmd_subgroups(file);
    if (*verify) return cmd_hopf_verify(file, save);
    if (*subhopf) return cmd_hopf_subhopf(file, seed);
    if (*graph) return cmd_fusion_graph(file, vertex, power);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
