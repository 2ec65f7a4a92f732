#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oran/scenario.hpp"

namespace oran {

struct MetricsRow {
  std::string scenario;
  std::string mechanism;
  double demand_gbps = 0.0;
  std::uint64_t seed = 0;
  std::string config_hash;
  double outage_overall = 0.0;
  std::vector<double> outage_mno;
  double total_cost = 0.0;
  std::vector<double> opex_red_mno;
  int active_clouds = 0;
  std::string status = "ok";  // "skipped" when the oracle caps reject the run
};

struct RunOptions {
  std::string out_dir = ".";
  bool dump_assignments = false;
  int jobs = 1;
  std::string topology_path;  // external deployment; sweep entries act as factors
};

struct RunOutput {
  std::vector<MetricsRow> rows;
  std::string csv_path;
  std::string assignments_path;  // empty unless dumped
};

/// Executes the (seed x demand x mechanism) grid. Cells run independently on
/// a bounded worker pool; rows are emitted in grid order, so the CSV bytes
/// do not depend on the job count.
RunOutput run_scenario(const ScenarioConfig& cfg, const RunOptions& opts);

std::string csv_header(int n_mnos);
std::string csv_line(const MetricsRow& row);

struct CompareRow {
  double demand_gbps = 0.0;
  double outage_a = 0.0;
  double outage_b = 0.0;
  double cost_a = 0.0;
  double cost_b = 0.0;
};

struct CompareSummary {
  std::vector<CompareRow> rows;
  bool a_outage_le_b = true;  // per-level dominance flags
  bool a_cost_le_b = true;
};

/// Per-demand-level mean outage/cost deltas between two metrics CSVs.
/// Optional mechanism filters restrict each side to matching rows. Throws
/// SchemaError on missing columns or mismatched demand grids.
CompareSummary compare_csv(const std::string& path_a, const std::string& path_b,
                           const std::string& mech_a = "",
                           const std::string& mech_b = "");

void print_compare(const CompareSummary& s, std::ostream& out);

}  // namespace oran
