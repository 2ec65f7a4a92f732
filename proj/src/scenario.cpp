#include "oran/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "oran/errors.hpp"

namespace oran {

using nlohmann::json;

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::Minmax: return "minmax";
    case Mechanism::Vcg: return "vcg";
    case Mechanism::NearestFirst: return "nearest_first";
    case Mechanism::Bandit: return "bandit";
    case Mechanism::Oracle: return "oracle";
  }
  return "?";
}

Mechanism mechanism_from_string(const std::string& s) {
  if (s == "minmax") return Mechanism::Minmax;
  if (s == "vcg") return Mechanism::Vcg;
  if (s == "nearest_first") return Mechanism::NearestFirst;
  if (s == "bandit") return Mechanism::Bandit;
  if (s == "oracle") return Mechanism::Oracle;
  throw ValidationError("validation-error: unknown mechanism '" + s + "'");
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::I: return "I";
    case Preset::II: return "II";
    case Preset::III: return "III";
  }
  return "?";
}

Preset preset_from_string(const std::string& s) {
  if (s == "I") return Preset::I;
  if (s == "II") return Preset::II;
  if (s == "III") return Preset::III;
  throw ValidationError("validation-error: scenario must be I, II, or III");
}

ScenarioConfig default_config() {
  ScenarioConfig cfg;
  // Calibrated split parameters; see README for the derivation of the
  // quantizer/overhead/effective-RB constants.
  SplitParams common;
  common.n_ports = 2;
  common.n_layers = 2;
  common.n_rb = 270;
  common.sc_per_rb = 12;
  common.sym_per_subframe = 14;
  common.subframe_s = 1e-3;
  common.utilization = 1.0;
  common.overhead = 1.058;
  common.resource_overhead = 0.25;
  common.mod_order = 64;
  common.n_antennas = 2;
  common.mod_bits = 6.0;
  common.code_rate = 0.64;

  cfg.radio.uplink = common;
  cfg.radio.uplink.quantizer_bits = 12;
  cfg.radio.downlink = common;
  cfg.radio.downlink.quantizer_bits = 1;
  cfg.radio.effort = common;
  cfg.radio.effort.quantizer_bits = 12;
  cfg.radio.effort.n_rb = 219;  // effective utilized RBs for the effort model
  cfg.radio.burst.payload_bits = 1500.0 * 8;
  cfg.radio.burst.frame_bits = 1542.0 * 8;
  cfg.radio.burst.interval_s = 31.25e-6;
  cfg.radio.ru_proc_ratio = 0.3;
  return cfg;
}

namespace {

// Tracks which keys of a JSON object were consumed; leftovers are rejected.
class StrictObject {
 public:
  StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object())
      throw ValidationError("validation-error: " + path_ + " must be an object");
  }

  bool has(const char* key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& at(const char* key) {
    seen_.insert(key);
    return j_.at(key);
  }

  template <typename T>
  void opt(const char* key, T& out) {
    if (!has(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ValidationError("validation-error: bad type for " + path_ + "." + key);
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key()))
        throw ValidationError("validation-error: unknown key " + path_ + "." +
                              it.key());
    }
  }

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void fill_split(StrictObject& o, SplitParams& p) {
  o.opt("n_ports", p.n_ports);
  o.opt("n_layers", p.n_layers);
  o.opt("n_rb", p.n_rb);
  o.opt("sc_per_rb", p.sc_per_rb);
  o.opt("sym_per_subframe", p.sym_per_subframe);
  o.opt("subframe_s", p.subframe_s);
  o.opt("utilization", p.utilization);
  o.opt("quantizer_bits", p.quantizer_bits);
  o.opt("overhead", p.overhead);
  o.opt("resource_overhead", p.resource_overhead);
  o.opt("mod_order", p.mod_order);
  o.opt("n_antennas", p.n_antennas);
  o.opt("mod_bits", p.mod_bits);
  o.opt("code_rate", p.code_rate);
  o.finish();
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
  ScenarioConfig cfg = default_config();
  StrictObject root(j, "$");

  if (root.has("scenario"))
    cfg.preset = preset_from_string(root.at("scenario").get<std::string>());

  if (root.has("deployment")) {
    StrictObject o(root.at("deployment"), "$.deployment");
    o.opt("area_side_km", cfg.deployment.area_side_km);
    o.opt("n_macro", cfg.deployment.n_macro);
    o.opt("n_small", cfg.deployment.n_small);
    o.opt("mno_shares", cfg.deployment.mno_shares);
    o.opt("n_level1", cfg.deployment.n_level1);
    o.opt("seed", cfg.deployment.seed);
    if (o.has("placement")) {
      const auto s = o.at("placement").get<std::string>();
      if (s == "grid")
        cfg.deployment.placement = DeploymentSpec::Placement::Grid;
      else if (s == "uniform_random")
        cfg.deployment.placement = DeploymentSpec::Placement::UniformRandom;
      else
        throw ValidationError(
            "validation-error: placement must be grid or uniform_random");
    }
    o.finish();
  }

  if (root.has("radio")) {
    StrictObject o(root.at("radio"), "$.radio");
    if (o.has("uplink")) {
      StrictObject s(o.at("uplink"), "$.radio.uplink");
      fill_split(s, cfg.radio.uplink);
    }
    if (o.has("downlink")) {
      StrictObject s(o.at("downlink"), "$.radio.downlink");
      fill_split(s, cfg.radio.downlink);
    }
    if (o.has("effort")) {
      StrictObject s(o.at("effort"), "$.radio.effort");
      fill_split(s, cfg.radio.effort);
    }
    if (o.has("burst")) {
      StrictObject s(o.at("burst"), "$.radio.burst");
      s.opt("payload_bits", cfg.radio.burst.payload_bits);
      s.opt("frame_bits", cfg.radio.burst.frame_bits);
      s.opt("interval_s", cfg.radio.burst.interval_s);
      s.finish();
    }
    o.opt("ru_proc_ratio", cfg.radio.ru_proc_ratio);
    o.finish();
  }

  if (root.has("cost")) {
    StrictObject o(root.at("cost"), "$.cost");
    o.opt("default_cost", cfg.cost_default);
    o.opt("per_gbps", cfg.cost_per_gbps);
    o.opt("per_gops", cfg.cost_per_gops);
    o.opt("same_mno_discount", cfg.same_mno_discount);
    o.finish();
  }

  root.opt("demand_sweep_gbps", cfg.demand_sweep_gbps);
  root.opt("urllc_fraction", cfg.urllc_fraction);

  if (root.has("latency")) {
    StrictObject o(root.at("latency"), "$.latency");
    o.opt("fh_bound_us", cfg.fh_bound_us);
    o.opt("rdc_urllc_us", cfg.rdc_urllc_us);
    o.opt("rdc_embb_us", cfg.rdc_embb_us);
    o.opt("tti_us", cfg.tti_us);
    o.opt("queue_delay_us", cfg.queue_delay_us);
    o.opt("burst_interval_us", cfg.burst_interval_us);
    o.finish();
  }

  if (root.has("mechanisms")) {
    cfg.mechanisms.clear();
    for (const auto& m : root.at("mechanisms"))
      cfg.mechanisms.push_back(mechanism_from_string(m.get<std::string>()));
  }
  root.opt("seeds", cfg.seeds);
  if (root.has("sharing")) {
    const auto s = root.at("sharing").get<std::string>();
    if (s == "proportional")
      cfg.sharing = Sharing::Proportional;
    else if (s == "uniform")
      cfg.sharing = Sharing::Uniform;
    else
      throw ValidationError(
          "validation-error: sharing must be proportional or uniform");
  }
  if (root.has("bandit")) {
    StrictObject o(root.at("bandit"), "$.bandit");
    o.opt("epsilon", cfg.bandit.epsilon);
    o.opt("episodes", cfg.bandit.episodes);
    o.opt("initial_q", cfg.bandit.initial_q);
    o.finish();
  }
  if (root.has("oracle_caps")) {
    StrictObject o(root.at("oracle_caps"), "$.oracle_caps");
    o.opt("max_rus", cfg.oracle_caps.max_rus);
    o.opt("max_sites", cfg.oracle_caps.max_sites);
    o.finish();
  }
  root.opt("strict_first_break", cfg.strict_first_break);
  root.finish();

  validate(cfg);
  return cfg;
}

void validate(const ScenarioConfig& cfg) {
  validate(cfg.deployment);
  validate(cfg.radio.uplink);
  validate(cfg.radio.downlink);
  validate(cfg.radio.effort);
  validate(cfg.radio.burst);
  if (cfg.radio.ru_proc_ratio <= 0.0 || cfg.radio.ru_proc_ratio > 1.0)
    throw ValidationError("validation-error: radio.ru_proc_ratio in (0, 1]");
  if (cfg.cost_default < 0 || cfg.cost_per_gbps < 0 || cfg.cost_per_gops < 0)
    throw ValidationError("validation-error: cost scalars must be >= 0");
  if (cfg.same_mno_discount < 0.0 || cfg.same_mno_discount > 1.0)
    throw ValidationError("validation-error: cost.same_mno_discount in [0, 1]");
  if (cfg.demand_sweep_gbps.empty())
    throw ValidationError("validation-error: demand_sweep_gbps must be non-empty");
  for (double d : cfg.demand_sweep_gbps)
    if (d <= 0.0)
      throw ValidationError("validation-error: demand_sweep_gbps entries > 0");
  if (cfg.urllc_fraction < 0.0 || cfg.urllc_fraction > 1.0)
    throw ValidationError("validation-error: urllc_fraction in [0, 1]");
  if (cfg.fh_bound_us <= 0 || cfg.rdc_urllc_us <= 0 || cfg.rdc_embb_us <= 0 ||
      cfg.tti_us <= 0 || cfg.queue_delay_us < 0 || cfg.burst_interval_us <= 0)
    throw ValidationError("validation-error: latency values must be positive");
  if (cfg.mechanisms.empty())
    throw ValidationError("validation-error: mechanisms must be non-empty");
  if (cfg.seeds.empty())
    throw ValidationError("validation-error: seeds must be non-empty");
  try {
    validate(cfg.bandit);
  } catch (const InvalidParameterError& e) {
    throw ValidationError(std::string("validation-error: bandit: ") + e.what());
  }
  if (cfg.oracle_caps.max_rus < 1 || cfg.oracle_caps.max_sites < 1)
    throw ValidationError("validation-error: oracle_caps must be >= 1");
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("parse-error: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("parse-error: " + path + ":" + std::to_string(line) + ": " +
                     e.what());
  }
  return config_from_json(j);
}

namespace {

json split_to_json(const SplitParams& p) {
  return json{{"n_ports", p.n_ports},
              {"n_layers", p.n_layers},
              {"n_rb", p.n_rb},
              {"sc_per_rb", p.sc_per_rb},
              {"sym_per_subframe", p.sym_per_subframe},
              {"subframe_s", p.subframe_s},
              {"utilization", p.utilization},
              {"quantizer_bits", p.quantizer_bits},
              {"overhead", p.overhead},
              {"resource_overhead", p.resource_overhead},
              {"mod_order", p.mod_order},
              {"n_antennas", p.n_antennas},
              {"mod_bits", p.mod_bits},
              {"code_rate", p.code_rate}};
}

}  // namespace

json config_to_json(const ScenarioConfig& cfg) {
  json j;
  j["scenario"] = to_string(cfg.preset);
  j["deployment"] = {
      {"area_side_km", cfg.deployment.area_side_km},
      {"n_macro", cfg.deployment.n_macro},
      {"n_small", cfg.deployment.n_small},
      {"mno_shares", cfg.deployment.mno_shares},
      {"n_level1", cfg.deployment.n_level1},
      {"seed", cfg.deployment.seed},
      {"placement", cfg.deployment.placement == DeploymentSpec::Placement::Grid
                        ? "grid"
                        : "uniform_random"}};
  j["radio"] = {{"uplink", split_to_json(cfg.radio.uplink)},
                {"downlink", split_to_json(cfg.radio.downlink)},
                {"effort", split_to_json(cfg.radio.effort)},
                {"burst",
                 {{"payload_bits", cfg.radio.burst.payload_bits},
                  {"frame_bits", cfg.radio.burst.frame_bits},
                  {"interval_s", cfg.radio.burst.interval_s}}},
                {"ru_proc_ratio", cfg.radio.ru_proc_ratio}};
  j["cost"] = {{"default_cost", cfg.cost_default},
               {"per_gbps", cfg.cost_per_gbps},
               {"per_gops", cfg.cost_per_gops},
               {"same_mno_discount", cfg.same_mno_discount}};
  j["demand_sweep_gbps"] = cfg.demand_sweep_gbps;
  j["urllc_fraction"] = cfg.urllc_fraction;
  j["latency"] = {{"fh_bound_us", cfg.fh_bound_us},
                  {"rdc_urllc_us", cfg.rdc_urllc_us},
                  {"rdc_embb_us", cfg.rdc_embb_us},
                  {"tti_us", cfg.tti_us},
                  {"queue_delay_us", cfg.queue_delay_us},
                  {"burst_interval_us", cfg.burst_interval_us}};
  json mechs = json::array();
  for (auto m : cfg.mechanisms) mechs.push_back(to_string(m));
  j["mechanisms"] = mechs;
  j["seeds"] = cfg.seeds;
  j["sharing"] = cfg.sharing == Sharing::Proportional ? "proportional" : "uniform";
  j["bandit"] = {{"epsilon", cfg.bandit.epsilon},
                 {"episodes", cfg.bandit.episodes},
                 {"initial_q", cfg.bandit.initial_q}};
  j["oracle_caps"] = {{"max_rus", cfg.oracle_caps.max_rus},
                      {"max_sites", cfg.oracle_caps.max_sites}};
  j["strict_first_break"] = cfg.strict_first_break;
  return j;
}

std::string config_hash(const ScenarioConfig& cfg) {
  const std::string dump = config_to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

NetworkParams network_params(const ScenarioConfig& cfg) {
  NetworkParams net;
  switch (cfg.preset) {
    case Preset::I:
      net.edge_gops = 1.5e4;
      net.edge_bps = 50e9;
      net.olt_gops = 4.5e4;
      net.olt_bps = 600e9;
      break;
    case Preset::II:
      net.edge_gops = 3.0e4;
      net.edge_bps = 100e9;
      net.olt_gops = 3.0e4;
      net.olt_bps = 400e9;
      break;
    case Preset::III:
      net.edge_gops = 4.5e4;
      net.edge_bps = 150e9;
      net.olt_gops = 1.5e4;
      net.olt_bps = 200e9;
      break;
  }
  net.burst_interval_s = cfg.burst_interval_us * 1e-6;
  net.queue_delay_s = cfg.queue_delay_us * 1e-6;
  net.theta_tti_s = cfg.tti_us * 1e-6;
  net.fh_bound_s = cfg.fh_bound_us * 1e-6;
  net.rdc_urllc_s = cfg.rdc_urllc_us * 1e-6;
  net.rdc_embb_s = cfg.rdc_embb_us * 1e-6;
  net.default_cost = cfg.cost_default;
  net.urllc_fraction = cfg.urllc_fraction;
  return net;
}

CostModel cost_model(const ScenarioConfig& cfg, const Topology& topo) {
  CostModel cost;
  cost.c_default = cfg.cost_default;
  cost.c_lambda = cfg.cost_per_gbps * 1e-9;
  cost.c_p = cfg.cost_per_gops;
  if (cfg.same_mno_discount < 1.0) {
    cost.gamma.assign(topo.rus.size(),
                      std::vector<double>(topo.clouds.size(), 1.0));
    for (const auto& ru : topo.rus)
      for (const auto& site : topo.clouds)
        if (site.kind == CloudKind::Edge && site.owner_mno == ru.mno)
          cost.gamma[static_cast<std::size_t>(ru.id)]
                    [static_cast<std::size_t>(site.id)] = cfg.same_mno_discount;
  }
  return cost;
}

}  // namespace oran
