#include "oran/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oran/errors.hpp"
#include "oran/rng.hpp"

namespace oran {

void validate(const BanditConfig& cfg) {
  if (cfg.epsilon < 0.0 || cfg.epsilon > 1.0)
    throw InvalidParameterError("invalid-parameter: epsilon in [0, 1]");
  if (cfg.episodes < 1)
    throw InvalidParameterError("invalid-parameter: episodes >= 1");
}

namespace {

std::vector<double> baseline_opex(const Topology& topo, const Demands& dem,
                                  const Assignment& asg, const CostModel& cost,
                                  Sharing sharing) {
  std::vector<double> opex(topo.rus.size(), 0.0);
  for (int r = 0; r < topo.n_rus(); ++r)
    opex[static_cast<std::size_t>(r)] =
        ru_opex(topo, dem, asg, cost, r, sharing,
                sharing == Sharing::Proportional ? 0.0 : kShareEpsilon);
  return opex;
}

}  // namespace

BaselineResult allocate_nearest_first(const Topology& topo,
                                      const CostModel& cost, Sharing sharing) {
  const Demands dem = demands_of(topo);
  const std::vector<int> order = sort_rus(topo, dem);

  BaselineResult res;
  res.asg = Assignment(topo.n_rus(), topo.n_sites());
  for (int r : order) {
    std::vector<int> sites;
    for (int y = 0; y < topo.n_sites(); ++y)
      if (topo.connected(r, y)) sites.push_back(y);
    std::sort(sites.begin(), sites.end(), [&](int a, int b) {
      const double da = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)];
      const double db = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
      if (da != db) return da < db;
      return a < b;
    });
    for (int y : sites) {
      if (check_assignable(topo, dem, res.asg, r, y).ok) {
        res.asg.assign(r, y);
        break;
      }
    }
  }
  res.opex = baseline_opex(topo, dem, res.asg, cost, sharing);
  return res;
}

double bandit_reward(const Topology& topo, const Demands& dem,
                     const Assignment& asg, int r, int y) {
  if (asg.site_of(r) != y) return 0.0;
  const SiteLoad load = site_load(dem, asg, y);
  const auto& ru = topo.rus[static_cast<std::size_t>(r)];
  const double fh = std::max(uplink_fh_latency(topo, r, y, load),
                             downlink_fh_latency(topo, r, y, load));
  const double proc =
      std::max(proc_latency_ratio(topo, r, y, Direction::Ul, load),
               proc_latency_ratio(topo, r, y, Direction::Dl, load)) *
      topo.theta_tti_s;
  const double fh_term = ru.delta_h / std::max(fh, 1e-12);
  const double proc_term = ru.delta_rdc / std::max(proc, 1e-12);
  return 0.5 * fh_term + 0.5 * proc_term;
}

BaselineResult allocate_bandit(const Topology& topo, const CostModel& cost,
                               const BanditConfig& cfg, Sharing sharing) {
  validate(cfg);
  const Demands dem = demands_of(topo);
  const int nr = topo.n_rus();
  const int ny = topo.n_sites();

  std::vector<std::vector<int>> connected(static_cast<std::size_t>(nr));
  for (int r = 0; r < nr; ++r)
    for (int y = 0; y < ny; ++y)
      if (topo.connected(r, y))
        connected[static_cast<std::size_t>(r)].push_back(y);

  std::vector<std::vector<double>> q(
      static_cast<std::size_t>(nr),
      std::vector<double>(static_cast<std::size_t>(ny), cfg.initial_q));
  std::vector<std::vector<int>> pulls(
      static_cast<std::size_t>(nr),
      std::vector<int>(static_cast<std::size_t>(ny), 0));

  Rng rng(cfg.seed);
  BaselineResult res;
  res.asg = Assignment(nr, ny);

  std::vector<int> order(static_cast<std::size_t>(nr));
  for (int r = 0; r < nr; ++r) order[static_cast<std::size_t>(r)] = r;

  for (int ep = 0; ep < cfg.episodes; ++ep) {
    rng.shuffle(order);
    for (int r : order) {
      const auto& sites = connected[static_cast<std::size_t>(r)];
      if (sites.empty()) continue;
      res.asg.unassign(r);
      int y;
      if (rng.unit() < cfg.epsilon) {
        y = sites[static_cast<std::size_t>(rng.below(sites.size()))];
      } else {
        y = sites[0];
        for (int cand : sites)
          if (q[static_cast<std::size_t>(r)][static_cast<std::size_t>(cand)] >
              q[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)])
            y = cand;
      }
      double reward = 0.0;
      if (check_assignable(topo, dem, res.asg, r, y).ok) {
        res.asg.assign(r, y);
        reward = bandit_reward(topo, dem, res.asg, r, y);
      }
      auto& n = pulls[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
      auto& est = q[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
      n += 1;
      est += (reward - est) / n;
    }
  }
  res.opex = baseline_opex(topo, dem, res.asg, cost, sharing);
  return res;
}

}  // namespace oran
