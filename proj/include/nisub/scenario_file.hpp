#pragma once

#include "nisub/group.hpp"
#include "nisub/subfactor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nisub {

struct AnalysisToggles {
  bool normal_lattice = true;
  bool chain_lengths = true;
  bool modularity = true;
  bool quasi_normal = true;
  bool hopf_crosscheck = false;
  bool depth2 = true;
  bool subhopf_enumeration = false;
};

/// Parsed and resolved scenario description. The grammar is documented in
/// docs/scenario-grammar.md.
struct ScenarioFile {
  std::string origin;  // file path or "<string>"
  std::string group_name;
  size_t degree = 0;
  std::vector<Permutation> generators;
  GroupPtr group;

  /// Absent when the file has no [scenario] section.
  std::optional<ScenarioKind> kind;
  /// Resolved subgroups; only those required by the kind are set.
  std::optional<Subgroup> a, b, h;
  /// Generator words as written, for echoing.
  std::string a_text, b_text, h_text;

  AnalysisToggles analyses;
  std::vector<std::string> formats{"text"};
  std::string destination;

  /// Throws PreconditionError when there is no [scenario] section.
  InclusionScenario scenario() const;
};

/// Throws ParseError (1-based line and column) on syntax errors, unknown
/// sections, keys or kinds, generators outside the group and missing
/// kind-required keys.
ScenarioFile parse_scenario_text(const std::string& text, const std::string& origin = "<string>");
/// Reads the file; an unreadable path raises ParseError at line 0.
ScenarioFile parse_scenario(const std::string& path);

}  // namespace nisub
