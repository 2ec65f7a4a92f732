#pragma once

#include <cstdint>
#include <vector>

#include "oran/minmax.hpp"

namespace oran {

struct BanditConfig {
  double epsilon = 0.3;  // exploration probability
  int episodes = 1000;
  std::uint64_t seed = 1;
  double initial_q = 0.0;
};

void validate(const BanditConfig& cfg);

struct BaselineResult {
  Assignment asg;
  std::vector<double> opex;  // per RU under the chosen sharing rule
};

/// Nearest-first greedy: every RU (in the shared insertion order) takes the
/// closest connected site that passes the constraint check.
BaselineResult allocate_nearest_first(const Topology& topo,
                                      const CostModel& cost, Sharing sharing);

/// Reward of RU r attached to site y under the current assignment: mean of
/// the latency-bound-to-achieved ratios on the front/mid-haul and processing
/// sides (binding direction each). 0 when r is not attached to y.
double bandit_reward(const Topology& topo, const Demands& dem,
                     const Assignment& asg, int r, int y);

/// Epsilon-greedy site selection: per episode every RU (seeded random order)
/// detaches and re-attempts a site — a random connected one with probability
/// epsilon, otherwise its best running-mean estimate. Failed joins score 0.
/// The returned assignment is the configuration after the last episode.
BaselineResult allocate_bandit(const Topology& topo, const CostModel& cost,
                               const BanditConfig& cfg, Sharing sharing);

}  // namespace oran
