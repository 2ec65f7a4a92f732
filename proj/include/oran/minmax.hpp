#pragma once

#include <string>
#include <vector>

#include "oran/feasibility.hpp"

namespace oran {

/// Insertion order shared by the greedy allocators: every MNO's RUs are
/// sorted by increasing max(W_dl, W_ul) (ties by max demand on the compute
/// side, then id), and the MNO queues are drained round-robin, one RU per
/// MNO per cycle, skipping exhausted MNOs.
std::vector<int> sort_rus(const Topology& topo);
std::vector<int> sort_rus(const Topology& topo, const Demands& dem);

/// Same order over the problem with one RU removed (payment re-solves rerun
/// the cycling on the reduced set, not a filtered copy of the full order).
std::vector<int> sort_rus(const Topology& topo, const Demands& dem,
                          int exclude_ru);

struct GreedyOptions {
  // When true, an unassignable first RU aborts the whole run, leaving
  // everything unassigned (literal first-iteration break semantics).
  bool strict_first_break = false;
};

struct MinmaxResult {
  Assignment asg;
  std::vector<double> opex;  // per RU, proportional shares
  double max_opex = 0.0;
  bool first_ru_infeasible = false;
  std::string diagnostic;
};

/// Greedy min-max fair allocation: the first RU in the order goes to its
/// nearest feasible site; each later RU goes to the feasible site where its
/// own OPEX (with itself included in the sharing) is smallest. Ties break by
/// smaller fiber distance, then lower site id.
MinmaxResult allocate_minmax(const Topology& topo, const CostModel& cost,
                             const GreedyOptions& opts = {});

}  // namespace oran
