#pragma once

#include <vector>

#include "oran/feasibility.hpp"

namespace oran {

/// Fraction of RUs left without a site.
double outage_overall(const Topology& topo, const Assignment& asg);

/// Same ratio within each MNO's fleet (0 for MNOs with no RUs).
std::vector<double> outage_per_mno(const Topology& topo, const Assignment& asg);

/// Summed resource-block cost of the activated sites.
double total_leased_cost(const Topology& topo, const CostModel& cost,
                         const Assignment& asg);

/// Per-MNO OPEX saving versus a sole-tenant baseline: 100 * (1 - sum(opex) /
/// sum(standalone)), where standalone prices the RU's whole site as if it
/// were alone there. Unassigned RUs are excluded from both sums; an MNO with
/// nothing assigned reports 0.
std::vector<double> opex_reduction_per_mno(const Topology& topo,
                                           const Demands& dem,
                                           const CostModel& cost,
                                           const Assignment& asg,
                                           Sharing sharing = Sharing::Proportional);

int active_clouds(const Assignment& asg);

}  // namespace oran
