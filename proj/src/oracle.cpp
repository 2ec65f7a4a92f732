#include "oran/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "oran/errors.hpp"

namespace oran {

namespace {

void check_caps(const Topology& topo, const OracleLimits& limits) {
  if (topo.n_rus() > limits.max_rus || topo.n_sites() > limits.max_sites)
    throw InstanceTooLargeError("instance-too-large: exhaustive search capped");
}

// Depth-first sweep over per-RU options (unassigned first, then connected
// sites in ascending id), pruning prefixes that already violate a tenant's
// bound. Visits leaves in lexicographic order, so keeping strictly-better
// leaves yields the lexicographically smallest optimum.
template <typename LeafFn>
void enumerate(const Topology& topo, const Demands& dem, Assignment& asg,
               int r, LeafFn&& on_leaf) {
  if (r == topo.n_rus()) {
    on_leaf(asg);
    return;
  }
  enumerate(topo, dem, asg, r + 1, on_leaf);
  for (int y = 0; y < topo.n_sites(); ++y) {
    if (!topo.connected(r, y)) continue;
    if (!check_assignable(topo, dem, asg, r, y).ok) continue;
    asg.assign(r, y);
    enumerate(topo, dem, asg, r + 1, on_leaf);
    asg.unassign(r);
  }
}

}  // namespace

MinmaxExact solve_minmax_exact(const Topology& topo, const CostModel& cost,
                               const OracleLimits& limits) {
  check_caps(topo, limits);
  const Demands dem = demands_of(topo);
  MinmaxExact best;
  best.asg = Assignment(topo.n_rus(), topo.n_sites());
  best.n_assigned = -1;

  Assignment work(topo.n_rus(), topo.n_sites());
  enumerate(topo, dem, work, 0, [&](const Assignment& asg) {
    double worst = 0.0;
    for (int r = 0; r < topo.n_rus(); ++r)
      if (asg.assigned(r))
        worst = std::max(worst, ru_opex(topo, dem, asg, cost, r));
    const int count = asg.n_assigned();
    if (count > best.n_assigned ||
        (count == best.n_assigned && worst < best.max_opex - 1e-12)) {
      best.asg = asg;
      best.max_opex = worst;
      best.n_assigned = count;
    }
  });
  return best;
}

VcgExact solve_vcg_exact(const Topology& topo, const Bids& bids,
                         const CostModel& cost, const OracleLimits& limits) {
  check_caps(topo, limits);
  const Demands dem = demands_from_bids(topo, bids);
  VcgExact best;
  best.asg = Assignment(topo.n_rus(), topo.n_sites());
  best.n_assigned = -1;

  Assignment work(topo.n_rus(), topo.n_sites());
  enumerate(topo, dem, work, 0, [&](const Assignment& asg) {
    double total = 0.0;
    for (int y : asg.active_sites()) total += site_cost(topo, cost, y);
    const int count = asg.n_assigned();
    if (count > best.n_assigned ||
        (count == best.n_assigned && total < best.total_cost - 1e-12)) {
      best.asg = asg;
      best.total_cost = total;
      best.n_assigned = count;
    }
  });
  return best;
}

}  // namespace oran
