#pragma once

#include <vector>

#include "oran/minmax.hpp"

namespace oran {

/// Demand message an RU submits to the provider.
struct Bid {
  int ru_id = -1;
  double w_ul = 0.0;
  double w_dl = 0.0;
  double gops_ul = 0.0;
  double gops_dl = 0.0;
};
using Bids = std::vector<Bid>;

Bids truthful_bids(const Topology& topo);

/// One bid per RU, indexed back into a demand vector; throws
/// InvalidParameterError on duplicates, gaps, or negative entries.
Demands demands_from_bids(const Topology& topo, const Bids& bids);

struct VcgAllocation {
  Assignment asg;
  double total_cost = 0.0;           // summed cost of activated sites
  std::vector<double> shared_costs;  // per RU: site cost / occupancy
  bool first_ru_infeasible = false;
};

/// Greedy total-cost-minimizing allocation. Feasibility is judged on the bid
/// values. `exclude_ru` removes one RU from the problem (payment re-solves).
VcgAllocation allocate_vcg(const Topology& topo, const Bids& bids,
                           const CostModel& cost, int exclude_ru = -1,
                           const GreedyOptions& opts = {});

/// Clarke pivot: what the others pay without r minus what they pay with r.
/// 0 for RUs left unassigned in the full run.
double vcg_payment(int r, const Topology& topo, const Bids& bids,
                   const CostModel& cost, const VcgAllocation& full);

/// Worth of r's allocation: the full resource block cost of its site when
/// its own data makes the latency bounds (evaluated with `eval` demand for r
/// against the co-tenants' bids), 0 otherwise.
double valuation(const Topology& topo, const CostModel& cost,
                 const Assignment& asg, const Demands& bid_dem,
                 const Demand& eval_r, int r);

struct AuctionOutcome {
  VcgAllocation alloc;
  std::vector<double> payments;
  std::vector<double> shared_costs;
  std::vector<double> valuations;
  std::vector<double> utilities;
  std::vector<double> opex;  // default cost + payment for assigned RUs
};

/// Allocation plus the per-RU payment re-solves, valuations, and utilities.
/// `eval` supplies the demands actually transmitted (defaults to the bids).
AuctionOutcome run_auction(const Topology& topo, const Bids& bids,
                           const CostModel& cost);
AuctionOutcome run_auction(const Topology& topo, const Bids& bids,
                           const CostModel& cost, const Demands& eval);

struct ProbeResult {
  double utility_truthful = 0.0;
  double utility_misreport = 0.0;
};

/// Runs the auction twice: all-truthful, then with r's bid scaled by
/// `factor`. The misreporting RU's realized valuation is always evaluated
/// against its true demand, so under-provisioning shows up as zero value.
ProbeResult misreport_probe(const Topology& topo, const CostModel& cost, int r,
                            double factor);

}  // namespace oran
