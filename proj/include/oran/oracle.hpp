#pragma once

#include "oran/auction.hpp"

namespace oran {

struct OracleLimits {
  int max_rus = 8;
  int max_sites = 4;
};

struct MinmaxExact {
  Assignment asg;
  double max_opex = 0.0;
  int n_assigned = 0;
};

struct VcgExact {
  Assignment asg;
  double total_cost = 0.0;
  int n_assigned = 0;
};

/// Exhaustive search over all (|Y|+1)^|R| candidate maps. Objective is
/// lexicographic: maximize the number of assigned RUs, then minimize the
/// worst per-RU OPEX. Ties keep the enumeration-first (lexicographically
/// smallest) assignment. Throws InstanceTooLargeError above the caps.
MinmaxExact solve_minmax_exact(const Topology& topo, const CostModel& cost,
                               const OracleLimits& limits = {});

/// Same search minimizing the summed cost of activated sites; feasibility
/// and shares are judged on the bids.
VcgExact solve_vcg_exact(const Topology& topo, const Bids& bids,
                         const CostModel& cost,
                         const OracleLimits& limits = {});

}  // namespace oran
