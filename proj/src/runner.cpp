#include "oran/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "oran/errors.hpp"
#include "oran/json_io.hpp"
#include "oran/metrics.hpp"

namespace oran {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Cell {
  std::size_t seed_idx;
  std::size_t demand_idx;
  std::size_t mech_idx;
  bool oracle_vcg = false;  // second row emitted by the oracle mechanism
};

struct CellResult {
  MetricsRow row;
  nlohmann::json assignment;  // populated when dumping
};

MetricsRow base_row(const ScenarioConfig& cfg, const std::string& mech,
                    double demand_gbps, std::uint64_t seed,
                    const std::string& hash) {
  MetricsRow row;
  row.scenario = to_string(cfg.preset);
  row.mechanism = mech;
  row.demand_gbps = demand_gbps;
  row.seed = seed;
  row.config_hash = hash;
  return row;
}

void fill_metrics(MetricsRow& row, const Topology& topo, const CostModel& cost,
                  const Assignment& asg, const std::vector<double>& opex) {
  row.outage_overall = outage_overall(topo, asg);
  row.outage_mno = outage_per_mno(topo, asg);
  row.total_cost = total_leased_cost(topo, cost, asg);
  std::vector<double> opex_sum(static_cast<std::size_t>(topo.n_mnos), 0.0);
  std::vector<double> standalone(static_cast<std::size_t>(topo.n_mnos), 0.0);
  for (const auto& ru : topo.rus) {
    const int y = asg.site_of(ru.id);
    if (y < 0) continue;
    const auto m = static_cast<std::size_t>(ru.mno);
    opex_sum[m] += opex[static_cast<std::size_t>(ru.id)];
    const auto& site = topo.clouds[static_cast<std::size_t>(y)];
    standalone[m] += ru.default_cost + cost.c_lambda * (site.b_ul + site.b_dl) +
                     cost.gamma_at(ru.id, y) * cost.c_p * (site.g_ul + site.g_dl);
  }
  row.opex_red_mno.assign(static_cast<std::size_t>(topo.n_mnos), 0.0);
  for (std::size_t m = 0; m < row.opex_red_mno.size(); ++m)
    if (standalone[m] > 0.0)
      row.opex_red_mno[m] = 100.0 * (1.0 - opex_sum[m] / standalone[m]);
  row.active_clouds = active_clouds(asg);
}

}  // namespace

std::string csv_header(int n_mnos) {
  std::ostringstream out;
  out << "scenario,mechanism,demand_gbps,seed,config_hash,outage_overall";
  for (int m = 0; m < n_mnos; ++m) out << ",outage_mno_" << (m + 1);
  out << ",total_cost";
  for (int m = 0; m < n_mnos; ++m) out << ",opex_red_mno_" << (m + 1);
  out << ",active_clouds,status";
  return out.str();
}

std::string csv_line(const MetricsRow& row) {
  std::ostringstream out;
  out << row.scenario << ',' << row.mechanism << ',' << fmt(row.demand_gbps)
      << ',' << row.seed << ',' << row.config_hash << ','
      << fmt(row.outage_overall);
  for (double v : row.outage_mno) out << ',' << fmt(v);
  out << ',' << fmt(row.total_cost);
  for (double v : row.opex_red_mno) out << ',' << fmt(v);
  out << ',' << row.active_clouds << ',' << row.status;
  return out.str();
}

RunOutput run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  const std::string hash = config_hash(cfg);
  const NetworkParams net = network_params(cfg);
  const int n_mnos = static_cast<int>(cfg.deployment.mno_shares.size());

  std::optional<Topology> external;
  if (!opts.topology_path.empty()) external = load_topology(opts.topology_path);

  // One cell per (seed, demand, mechanism); the oracle contributes a second
  // row for its total-cost variant.
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < cfg.seeds.size(); ++s)
    for (std::size_t d = 0; d < cfg.demand_sweep_gbps.size(); ++d)
      for (std::size_t m = 0; m < cfg.mechanisms.size(); ++m) {
        cells.push_back({s, d, m, false});
        if (cfg.mechanisms[m] == Mechanism::Oracle)
          cells.push_back({s, d, m, true});
      }

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> cursor{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      const std::uint64_t seed = cfg.seeds[cell.seed_idx];
      const double demand = cfg.demand_sweep_gbps[cell.demand_idx];
      const Mechanism mech = cfg.mechanisms[cell.mech_idx];

      Topology topo;
      if (external) {
        topo = *external;
        scale_demands(topo, demand);
      } else {
        DeploymentSpec spec = cfg.deployment;
        spec.seed = seed;
        topo = generate_topology(spec, cfg.radio, net);
        set_demand_level(topo, cfg.radio, demand * 1e9);
      }
      const CostModel cost = cost_model(cfg, topo);
      const Demands dem = demands_of(topo);
      GreedyOptions gopts{cfg.strict_first_break};

      std::string mech_name = to_string(mech);
      Assignment asg(topo.n_rus(), topo.n_sites());
      std::vector<double> opex(topo.rus.size(), 0.0);
      std::string status = "ok";

      switch (mech) {
        case Mechanism::Minmax: {
          MinmaxResult r = allocate_minmax(topo, cost, gopts);
          asg = r.asg;
          opex = r.opex;
          break;
        }
        case Mechanism::Vcg: {
          AuctionOutcome out = run_auction(topo, truthful_bids(topo), cost);
          asg = out.alloc.asg;
          opex = out.opex;
          break;
        }
        case Mechanism::NearestFirst: {
          BaselineResult r = allocate_nearest_first(topo, cost, cfg.sharing);
          asg = r.asg;
          opex = r.opex;
          break;
        }
        case Mechanism::Bandit: {
          BanditConfig bcfg = cfg.bandit;
          bcfg.seed = seed;
          BaselineResult r = allocate_bandit(topo, cost, bcfg, cfg.sharing);
          asg = r.asg;
          opex = r.opex;
          break;
        }
        case Mechanism::Oracle: {
          mech_name = cell.oracle_vcg ? "oracle_vcg" : "oracle_minmax";
          try {
            if (cell.oracle_vcg) {
              VcgExact r = solve_vcg_exact(topo, truthful_bids(topo), cost,
                                           cfg.oracle_caps);
              asg = r.asg;
              for (int ru = 0; ru < topo.n_rus(); ++ru)
                if (asg.assigned(ru))
                  opex[static_cast<std::size_t>(ru)] =
                      topo.rus[static_cast<std::size_t>(ru)].default_cost +
                      site_cost(topo, cost, asg.site_of(ru)) /
                          asg.occupancy(asg.site_of(ru));
            } else {
              MinmaxExact r = solve_minmax_exact(topo, cost, cfg.oracle_caps);
              asg = r.asg;
              for (int ru = 0; ru < topo.n_rus(); ++ru)
                opex[static_cast<std::size_t>(ru)] =
                    ru_opex(topo, dem, asg, cost, ru);
            }
          } catch (const InstanceTooLargeError&) {
            status = "skipped";
          }
          break;
        }
      }

      MetricsRow row = base_row(cfg, mech_name, demand, seed, hash);
      row.status = status;
      if (status == "ok") {
        fill_metrics(row, topo, cost, asg, opex);
      } else {
        row.outage_mno.assign(static_cast<std::size_t>(n_mnos), 0.0);
        row.opex_red_mno.assign(static_cast<std::size_t>(n_mnos), 0.0);
      }
      CellResult res;
      res.row = row;
      if (opts.dump_assignments && status == "ok")
        res.assignment = assignment_to_json(topo, dem, cost, asg, cfg.sharing);
      results[i] = std::move(res);
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  RunOutput out;
  out.csv_path = (fs::path(opts.out_dir) / "metrics.csv").string();
  std::ofstream csv(out.csv_path, std::ios::binary);
  csv << csv_header(n_mnos) << '\n';
  for (auto& res : results) {
    out.rows.push_back(res.row);
    csv << csv_line(res.row) << '\n';
  }
  csv.close();

  if (opts.dump_assignments) {
    nlohmann::json dump = nlohmann::json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      nlohmann::json entry;
      entry["scenario"] = results[i].row.scenario;
      entry["mechanism"] = results[i].row.mechanism;
      entry["demand_gbps"] = results[i].row.demand_gbps;
      entry["seed"] = results[i].row.seed;
      entry["status"] = results[i].row.status;
      if (results[i].row.status == "ok")
        entry["assignment"] = results[i].assignment;
      dump.push_back(entry);
    }
    out.assignments_path = (fs::path(opts.out_dir) / "assignments.json").string();
    std::ofstream f(out.assignments_path, std::ios::binary);
    f << dump.dump(2) << '\n';
  }
  return out;
}

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("schema-error: cannot open " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (first) {
      t.header = fields;
      first = false;
    } else {
      t.rows.push_back(fields);
    }
  }
  if (t.header.empty()) throw SchemaError("schema-error: empty CSV " + path);
  return t;
}

// demand level -> (mean outage, mean cost)
std::map<double, std::pair<double, double>> level_means(const CsvTable& t,
                                                        const std::string& mech) {
  const int c_demand = t.col("demand_gbps");
  const int c_outage = t.col("outage_overall");
  const int c_cost = t.col("total_cost");
  const int c_mech = t.col("mechanism");
  const int c_status = t.col("status");
  if (c_demand < 0 || c_outage < 0 || c_cost < 0)
    throw SchemaError(
        "schema-error: required columns demand_gbps/outage_overall/total_cost");
  std::map<double, std::array<double, 3>> acc;  // sum outage, sum cost, count
  for (const auto& row : t.rows) {
    if (!mech.empty() && c_mech >= 0 &&
        row[static_cast<std::size_t>(c_mech)] != mech)
      continue;
    if (c_status >= 0 && row[static_cast<std::size_t>(c_status)] == "skipped")
      continue;
    const double d = std::stod(row[static_cast<std::size_t>(c_demand)]);
    auto& a = acc[d];
    a[0] += std::stod(row[static_cast<std::size_t>(c_outage)]);
    a[1] += std::stod(row[static_cast<std::size_t>(c_cost)]);
    a[2] += 1.0;
  }
  std::map<double, std::pair<double, double>> out;
  for (const auto& [d, a] : acc)
    if (a[2] > 0) out[d] = {a[0] / a[2], a[1] / a[2]};
  return out;
}

}  // namespace

CompareSummary compare_csv(const std::string& path_a, const std::string& path_b,
                           const std::string& mech_a, const std::string& mech_b) {
  const CsvTable ta = read_csv(path_a);
  const CsvTable tb = read_csv(path_b);
  const auto ma = level_means(ta, mech_a);
  const auto mb = level_means(tb, mech_b);
  if (ma.size() != mb.size())
    throw SchemaError("schema-error: demand levels differ between inputs");
  CompareSummary s;
  auto ib = mb.begin();
  for (auto ia = ma.begin(); ia != ma.end(); ++ia, ++ib) {
    if (std::abs(ia->first - ib->first) > 1e-9)
      throw SchemaError("schema-error: demand levels differ between inputs");
    CompareRow row;
    row.demand_gbps = ia->first;
    row.outage_a = ia->second.first;
    row.outage_b = ib->second.first;
    row.cost_a = ia->second.second;
    row.cost_b = ib->second.second;
    if (row.outage_a > row.outage_b + 1e-12) s.a_outage_le_b = false;
    if (row.cost_a > row.cost_b + 1e-9) s.a_cost_le_b = false;
    s.rows.push_back(row);
  }
  return s;
}

void print_compare(const CompareSummary& s, std::ostream& out) {
  out << "demand_gbps,outage_a,outage_b,outage_delta,cost_a,cost_b,cost_delta\n";
  for (const auto& r : s.rows) {
    out << fmt(r.demand_gbps) << ',' << fmt(r.outage_a) << ',' << fmt(r.outage_b)
        << ',' << fmt(r.outage_b - r.outage_a) << ',' << fmt(r.cost_a) << ','
        << fmt(r.cost_b) << ',' << fmt(r.cost_b - r.cost_a) << '\n';
  }
  out << "a_outage_le_b=" << (s.a_outage_le_b ? "true" : "false")
      << " a_cost_le_b=" << (s.a_cost_le_b ? "true" : "false") << '\n';
}

}  // namespace oran
