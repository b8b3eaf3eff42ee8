#include "nisub/scenario_file.hpp"

#include "nisub/error.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nisub {

namespace {

struct Entry {
  std::string value;
  size_t line = 0;
  size_t value_column = 0;  // 1-based column where the value starts
  size_t key_column = 0;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s, size_t& offset) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    offset = s.size();
    return {};
  }
  size_t b = s.find_last_not_of(" \t\r");
  offset = a;
  return s.substr(a, b - a + 1);
}

const std::set<std::string> kGroupKeys{"name", "degree", "generators"};
const std::set<std::string> kScenarioKeys{"kind", "A", "B", "H"};
const std::set<std::string> kAnalysisKeys{"normal_lattice", "chain_lengths",   "modularity",         "quasi_normal",
                                          "hopf_crosscheck", "depth2", "subhopf_enumeration"};
const std::set<std::string> kOutputKeys{"formats", "destination"};

const std::set<std::string>& keys_for(const std::string& section) {
  static const std::set<std::string> none;
  if (section == "group") return kGroupKeys;
  if (section == "scenario") return kScenarioKeys;
  if (section == "analyses") return kAnalysisKeys;
  if (section == "output") return kOutputKeys;
  return none;
}

bool parse_bool(const Entry& e) {
  const std::string& v = e.value;
  if (v == "true" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "no" || v == "off") return false;
  throw ParseError("expected true or false, got '" + v + "'", e.line, e.value_column);
}

std::vector<Permutation> parse_words(const Entry& e, size_t degree) {
  try {
    return parse_generator_list(e.value, degree);
  } catch (const ParseError& err) {
    throw ParseError(err.message(), e.line, e.value_column + (err.column() == 0 ? 0 : err.column() - 1));
  }
}

/// Column of the i-th top-level word in a generator list (for error messages).
size_t word_column(const Entry& e, size_t index) {
  size_t depth = 0, count = 0;
  bool in_word = false;
  for (size_t i = 0; i < e.value.size(); ++i) {
    char c = e.value[i];
    if (!in_word && c != ' ' && c != '\t' && c != ',' && c != ';') {
      if (count == index) return e.value_column + i;
      in_word = true;
    }
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      in_word = false;
      ++count;
    }
  }
  return e.value_column;
}

Subgroup resolve_subgroup(const GroupPtr& g, const Entry& e, size_t degree) {
  auto words = parse_words(e, degree);
  std::vector<Element> gens;
  for (size_t i = 0; i < words.size(); ++i) {
    auto found = g->find(words[i]);
    if (!found) {
      throw ParseError("generator " + words[i].cycle_string() + " is not an element of the group", e.line,
                       word_column(e, i));
    }
    gens.push_back(*found);
  }
  return Subgroup::generated(g, gens);
}

}  // namespace

InclusionScenario ScenarioFile::scenario() const {
  if (!kind) throw PreconditionError(origin + ": no [scenario] section");
  switch (*kind) {
    case ScenarioKind::CrossedProduct: return InclusionScenario::crossed_product(group);
    case ScenarioKind::FixedPoint: return InclusionScenario::fixed_point(group);
    case ScenarioKind::IntermediateCrossed: return InclusionScenario::intermediate_crossed(*h);
    case ScenarioKind::IntermediateFixed: return InclusionScenario::intermediate_fixed(*h);
    case ScenarioKind::GroupType: return InclusionScenario::group_type(*a, *b);
  }
  throw PreconditionError("unknown scenario kind");
}

ScenarioFile parse_scenario_text(const std::string& text, const std::string& origin) {
  std::map<std::string, Section> sections;
  std::map<std::string, size_t> section_line;
  std::istringstream in(text);
  std::string raw, current;
  size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    size_t hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    size_t off = 0;
    std::string s = trim(body, off);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("section header must end with ']'", line, off + s.size());
      size_t inner = 0;
      current = trim(s.substr(1, s.size() - 2), inner);
      if (keys_for(current).empty()) throw ParseError("unknown section [" + current + "]", line, off + 1);
      if (section_line.count(current)) throw ParseError("duplicate section [" + current + "]", line, off + 1);
      section_line[current] = line;
      sections[current];
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, off + 1);
    if (current.empty()) throw ParseError("key outside of any section", line, off + 1);
    size_t koff = 0, voff = 0;
    std::string key = trim(s.substr(0, eq), koff);
    std::string rest = s.substr(eq + 1);
    std::string value = trim(rest, voff);
    if (key.empty()) throw ParseError("missing key before '='", line, off + 1);
    if (!keys_for(current).count(key)) throw ParseError("unknown key '" + key + "' in [" + current + "]", line, off + koff + 1);
    Section& sec = sections[current];
    if (sec.count(key)) throw ParseError("duplicate key '" + key + "'", line, off + koff + 1);
    sec[key] = Entry{value, line, off + eq + 1 + voff + 1, off + koff + 1};
  }

  ScenarioFile sf;
  sf.origin = origin;
  if (!sections.count("group")) throw ParseError("missing [group] section", line == 0 ? 1 : line);
  const Section& grp = sections["group"];
  const size_t gline = section_line["group"];
  auto require = [&](const Section& sec, const std::string& key, size_t at, const std::string& why) -> const Entry& {
    auto it = sec.find(key);
    if (it == sec.end()) throw ParseError("missing key '" + key + "'" + why, at);
    return it->second;
  };
  const Entry& deg = require(grp, "degree", gline, " in [group]");
  try {
    size_t pos = 0;
    long d = std::stol(deg.value, &pos);
    if (pos != deg.value.size() || d < 1 || d > 64) throw std::invalid_argument("range");
    sf.degree = static_cast<size_t>(d);
  } catch (const std::exception&) {
    throw ParseError("degree must be an integer in 1..64", deg.line, deg.value_column);
  }
  if (grp.count("name")) sf.group_name = grp.at("name").value;
  const Entry& gens = require(grp, "generators", gline, " in [group]");
  sf.generators = parse_words(gens, sf.degree);
  try {
    sf.group = make_group(Group::from_permutations(sf.degree, sf.generators, Group::kDefaultOrderCap, sf.group_name));
  } catch (const CapExceeded& e) {
    throw ParseError(e.what(), gens.line, gens.value_column);
  }

  if (sections.count("scenario")) {
    const Section& sc = sections["scenario"];
    const size_t sline = section_line["scenario"];
    const Entry& kind = require(sc, "kind", sline, " in [scenario]");
    sf.kind = parse_scenario_kind(kind.value);
    if (!sf.kind) throw ParseError("unknown scenario kind '" + kind.value + "'", kind.line, kind.value_column);
    std::vector<std::string> need, forbid;
    switch (*sf.kind) {
      case ScenarioKind::CrossedProduct:
      case ScenarioKind::FixedPoint: forbid = {"A", "B", "H"}; break;
      case ScenarioKind::IntermediateCrossed:
      case ScenarioKind::IntermediateFixed: need = {"H"}; forbid = {"A", "B"}; break;
      case ScenarioKind::GroupType: need = {"A", "B"}; forbid = {"H"}; break;
    }
    for (const auto& k : forbid) {
      if (sc.count(k)) throw ParseError("key '" + k + "' is not used by kind " + kind.value, sc.at(k).line, sc.at(k).key_column);
    }
    for (const auto& k : need) {
      const Entry& e = require(sc, k, sline, " required by kind " + kind.value);
      Subgroup sub = resolve_subgroup(sf.group, e, sf.degree);
      if (k == "A") {
        sf.a = sub;
        sf.a_text = e.value;
      } else if (k == "B") {
        sf.b = sub;
        sf.b_text = e.value;
      } else {
        sf.h = sub;
        sf.h_text = e.value;
      }
    }
    if (*sf.kind == ScenarioKind::GroupType) {
      try {
        (void)InclusionScenario::group_type(*sf.a, *sf.b);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), sline);
      }
    }
  }

  if (sections.count("analyses")) {
    for (const auto& [key, e] : sections["analyses"]) {
      bool v = parse_bool(e);
      AnalysisToggles& t = sf.analyses;
      if (key == "normal_lattice") t.normal_lattice = v;
      if (key == "chain_lengths") t.chain_lengths = v;
      if (key == "modularity") t.modularity = v;
      if (key == "quasi_normal") t.quasi_normal = v;
      if (key == "hopf_crosscheck") t.hopf_crosscheck = v;
      if (key == "depth2") t.depth2 = v;
      if (key == "subhopf_enumeration") t.subhopf_enumeration = v;
    }
  }
  if (sections.count("output")) {
    const Section& out = sections["output"];
    if (out.count("formats")) {
      const Entry& e = out.at("formats");
      sf.formats.clear();
      std::string item;
      std::istringstream ss(e.value);
      while (std::getline(ss, item, ',')) {
        size_t o = 0;
        std::string f = trim(item, o);
        if (f != "text" && f != "json" && f != "dot") throw ParseError("unknown output format '" + f + "'", e.line, e.value_column);
        sf.formats.push_back(f);
      }
    }
    if (out.count("destination")) sf.destination = out.at("destination").value;
  }
  return sf;
}

ScenarioFile parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str(), path);
}

}  // namespace nisub
