#pragma once

#include "nisub/scenario_file.hpp"
#include "nisub/subfactor.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nisub {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct ReportRow {
  std::string name;
  Family family = Family::CrossedBy;
  std::string subgroup;
  size_t order = 0;
  bool bottom = false;
  bool top = false;
  NormalResult normal;
  std::optional<QuasiResult> quasi;
};

struct LatticeSummary {
  std::vector<std::string> nodes;
  std::vector<std::string> normal_nodes;
  bool is_sublattice = false;
  bool modular = false;
  std::vector<std::string> modularity_witness;
  std::map<size_t, uint64_t> chain_lengths;
  std::optional<size_t> length;
};

struct AnalysisReport {
  static constexpr int kSchemaVersion = 1;

  std::string origin;
  ScenarioKind kind = ScenarioKind::CrossedProduct;
  std::string description;
  std::string group_name;
  size_t group_order = 0;
  size_t degree = 0;
  std::map<std::string, std::string> subgroups;  // "A", "B", "H" -> label
  std::optional<bool> exact_factorization;
  bool catalog_complete = true;
  uint64_t seed = 1;

  std::vector<ReportRow> rows;
  LatticeSummary lattice;
  std::optional<Depth2Verdict> depth2;
  std::optional<size_t> subhopf_count;
  std::vector<CheckResult> checks;

  /// Wall-clock time of run(); reported in text output only.
  double elapsed_ms = 0;

  /// Diagram data.
  FiniteLattice diagram;
  std::vector<bool> normal_flags;

  bool all_checks_pass() const;
};

struct RunOptions {
  uint64_t seed = 1;
};

/// Evaluates every requested analysis. Deterministic apart from elapsed_ms.
AnalysisReport run(const ScenarioFile& sf, const RunOptions& options = {});

std::string emit_text(const AnalysisReport& r);
nlohmann::json report_to_json(const AnalysisReport& r);
/// Pretty-printed report_to_json with a trailing newline.
std::string emit_json(const AnalysisReport& r);
std::string emit_dot(const AnalysisReport& r);

/// Structural validation against the report schema (docs/report.schema.json).
/// Returns the list of violations, empty when valid.
std::vector<std::string> validate_report_json(const nlohmann::json& doc);

/// Enum values the schema declares, by field.
const std::map<std::string, std::vector<std::string>>& report_enums();

}  // namespace nisub
