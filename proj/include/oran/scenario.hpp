#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "oran/baselines.hpp"
#include "oran/oracle.hpp"

namespace oran {

enum class Mechanism { Minmax, Vcg, NearestFirst, Bandit, Oracle };

std::string to_string(Mechanism m);
Mechanism mechanism_from_string(const std::string& s);

enum class Preset { I, II, III };

std::string to_string(Preset p);
Preset preset_from_string(const std::string& s);

/// Everything one batch run needs. Defaults reproduce the reference setup:
/// 38 RUs over 5x5 km, three MNOs at 20/30/50% ownership, calibrated radio
/// parameters, EUR 100 default cost, EUR 0.5/Gbps, EUR 1.5/GOPS.
struct ScenarioConfig {
  DeploymentSpec deployment;
  RadioConfig radio;

  double cost_default = 100.0;
  double cost_per_gbps = 0.5;
  double cost_per_gops = 1.5;
  double same_mno_discount = 1.0;  // compute-price factor on own-MNO Edge sites

  Preset preset = Preset::I;
  std::vector<double> demand_sweep_gbps = {2.0, 2.5, 3.0, 3.5,
                                           4.0, 4.5, 5.0, 5.5};
  double urllc_fraction = 0.25;

  double fh_bound_us = 100.0;
  double rdc_urllc_us = 325.0;
  double rdc_embb_us = 975.0;
  double tti_us = 500.0;
  double queue_delay_us = 15.0;
  double burst_interval_us = 31.25;

  std::vector<Mechanism> mechanisms = {Mechanism::Minmax, Mechanism::Vcg,
                                       Mechanism::NearestFirst,
                                       Mechanism::Bandit};
  std::vector<std::uint64_t> seeds = {1};
  Sharing sharing = Sharing::Proportional;
  BanditConfig bandit;
  OracleLimits oracle_caps;
  bool strict_first_break = false;
};

ScenarioConfig default_config();

/// Parses a JSON config file. Unknown keys are rejected; missing keys fall
/// back to the defaults above. Throws ParseError (with line information) or
/// ValidationError naming the violated invariant.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig config_from_json(const nlohmann::json& j);

/// Canonical JSON form (all fields, sorted keys); basis of the config hash.
nlohmann::json config_to_json(const ScenarioConfig& cfg);
std::string config_hash(const ScenarioConfig& cfg);

/// Cloud capacities and latency knobs implied by the preset and config.
NetworkParams network_params(const ScenarioConfig& cfg);

/// Price scalars plus the per-pair discount matrix for the given topology.
CostModel cost_model(const ScenarioConfig& cfg, const Topology& topo);

void validate(const ScenarioConfig& cfg);

}  // namespace oran
