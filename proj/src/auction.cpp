#include "oran/auction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oran/errors.hpp"

namespace oran {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Bids truthful_bids(const Topology& topo) {
  Bids bids;
  bids.reserve(topo.rus.size());
  for (const auto& ru : topo.rus)
    bids.push_back({ru.id, ru.w_ul, ru.w_dl, ru.gops_ul, ru.gops_dl});
  return bids;
}

Demands demands_from_bids(const Topology& topo, const Bids& bids) {
  if (bids.size() != topo.rus.size())
    throw InvalidParameterError("invalid-parameter: one bid per RU required");
  Demands dem(topo.rus.size());
  std::vector<bool> seen(topo.rus.size(), false);
  for (const auto& b : bids) {
    if (b.ru_id < 0 || b.ru_id >= topo.n_rus() ||
        seen[static_cast<std::size_t>(b.ru_id)])
      throw InvalidParameterError("invalid-parameter: bids must map RUs 1:1");
    if (b.w_ul < 0 || b.w_dl < 0 || b.gops_ul < 0 || b.gops_dl < 0)
      throw InvalidParameterError("invalid-parameter: bid entries >= 0");
    seen[static_cast<std::size_t>(b.ru_id)] = true;
    dem[static_cast<std::size_t>(b.ru_id)] = {b.w_ul, b.w_dl, b.gops_ul,
                                              b.gops_dl};
  }
  return dem;
}

namespace {

int nearest_feasible(const Topology& topo, const Demands& dem,
                     const Assignment& asg, int r) {
  std::vector<int> sites;
  for (int y = 0; y < topo.n_sites(); ++y)
    if (topo.connected(r, y)) sites.push_back(y);
  std::sort(sites.begin(), sites.end(), [&](int a, int b) {
    const double da = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)];
    const double db = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
    if (da != db) return da < db;
    return a < b;
  });
  for (int y : sites)
    if (check_assignable(topo, dem, asg, r, y).ok) return y;
  return -1;
}

}  // namespace

VcgAllocation allocate_vcg(const Topology& topo, const Bids& bids,
                           const CostModel& cost, int exclude_ru,
                           const GreedyOptions& opts) {
  const Demands dem = demands_from_bids(topo, bids);
  const std::vector<int> order = sort_rus(topo, dem, exclude_ru);

  VcgAllocation res;
  res.asg = Assignment(topo.n_rus(), topo.n_sites());
  res.shared_costs.assign(topo.rus.size(), 0.0);

  std::vector<bool> active(static_cast<std::size_t>(topo.n_sites()), false);
  double total = 0.0;

  for (std::size_t i = 0; i < order.size(); ++i) {
    const int r = order[i];
    if (i == 0) {
      const int y = nearest_feasible(topo, dem, res.asg, r);
      if (y >= 0) {
        res.asg.assign(r, y);
        active[static_cast<std::size_t>(y)] = true;
        total += site_cost(topo, cost, y);
      } else {
        res.first_ru_infeasible = true;
        if (opts.strict_first_break) break;
      }
      continue;
    }
    // Joining an already-active site adds nothing to the total; otherwise
    // the activated block's whole cost is added.
    double best_total = kInf;
    double best_dist = kInf;
    int best_y = -1;
    for (int y = 0; y < topo.n_sites(); ++y) {
      if (!check_assignable(topo, dem, res.asg, r, y).ok) continue;
      const double cand =
          total + (active[static_cast<std::size_t>(y)] ? 0.0
                                                       : site_cost(topo, cost, y));
      const double d = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
      if (cand < best_total - 1e-12 ||
          (std::abs(cand - best_total) <= 1e-12 && d < best_dist)) {
        best_total = cand;
        best_dist = d;
        best_y = y;
      }
    }
    if (best_y >= 0) {
      res.asg.assign(r, best_y);
      if (!active[static_cast<std::size_t>(best_y)]) {
        active[static_cast<std::size_t>(best_y)] = true;
        total += site_cost(topo, cost, best_y);
      }
    }
  }

  res.total_cost = total;
  for (int r = 0; r < topo.n_rus(); ++r) {
    const int y = res.asg.site_of(r);
    if (y >= 0)
      res.shared_costs[static_cast<std::size_t>(r)] =
          site_cost(topo, cost, y) / res.asg.occupancy(y);
  }
  return res;
}

double vcg_payment(int r, const Topology& topo, const Bids& bids,
                   const CostModel& cost, const VcgAllocation& full) {
  if (!full.asg.assigned(r)) return 0.0;
  const VcgAllocation reduced = allocate_vcg(topo, bids, cost, r);
  double without_r = 0.0;
  for (int j = 0; j < topo.n_rus(); ++j)
    if (j != r) without_r += reduced.shared_costs[static_cast<std::size_t>(j)];
  double with_r = 0.0;
  for (int j = 0; j < topo.n_rus(); ++j)
    if (j != r) with_r += full.shared_costs[static_cast<std::size_t>(j)];
  return without_r - with_r;
}

double valuation(const Topology& topo, const CostModel& cost,
                 const Assignment& asg, const Demands& bid_dem,
                 const Demand& eval_r, int r) {
  const int y = asg.site_of(r);
  if (y < 0) return 0.0;
  // The shared terms see the co-tenants' bid traffic plus r's actual one.
  SiteLoad load = site_load(bid_dem, asg, y);
  load.w_ul += eval_r.w_ul - bid_dem[static_cast<std::size_t>(r)].w_ul;
  load.w_dl += eval_r.w_dl - bid_dem[static_cast<std::size_t>(r)].w_dl;
  load.gops_ul += eval_r.gops_ul - bid_dem[static_cast<std::size_t>(r)].gops_ul;
  load.gops_dl += eval_r.gops_dl - bid_dem[static_cast<std::size_t>(r)].gops_dl;

  const auto& ru = topo.rus[static_cast<std::size_t>(r)];
  const double bound_ratio = ru.delta_rdc / topo.theta_tti_s;
  const bool ok =
      uplink_fh_latency(topo, r, y, load) <= ru.delta_h + kLatencyTol &&
      downlink_fh_latency(topo, r, y, load) <= ru.delta_h + kLatencyTol &&
      proc_latency_ratio(topo, r, y, Direction::Ul, load) <=
          bound_ratio + kLatencyTol &&
      proc_latency_ratio(topo, r, y, Direction::Dl, load) <=
          bound_ratio + kLatencyTol;
  return ok ? site_cost(topo, cost, y) : 0.0;
}

AuctionOutcome run_auction(const Topology& topo, const Bids& bids,
                           const CostModel& cost) {
  return run_auction(topo, bids, cost, demands_from_bids(topo, bids));
}

AuctionOutcome run_auction(const Topology& topo, const Bids& bids,
                           const CostModel& cost, const Demands& eval) {
  const Demands bid_dem = demands_from_bids(topo, bids);
  AuctionOutcome out;
  out.alloc = allocate_vcg(topo, bids, cost);
  const std::size_t n = topo.rus.size();
  out.payments.assign(n, 0.0);
  out.shared_costs = out.alloc.shared_costs;
  out.valuations.assign(n, 0.0);
  out.utilities.assign(n, 0.0);
  out.opex.assign(n, 0.0);
  for (int r = 0; r < topo.n_rus(); ++r) {
    const auto ri = static_cast<std::size_t>(r);
    if (!out.alloc.asg.assigned(r)) continue;
    out.payments[ri] = vcg_payment(r, topo, bids, cost, out.alloc);
    out.valuations[ri] =
        valuation(topo, cost, out.alloc.asg, bid_dem, eval[ri], r);
    out.utilities[ri] = out.valuations[ri] - out.payments[ri];
    out.opex[ri] = topo.rus[ri].default_cost + out.payments[ri];
  }
  return out;
}

ProbeResult misreport_probe(const Topology& topo, const CostModel& cost, int r,
                            double factor) {
  if (factor < 0.0)
    throw InvalidParameterError("invalid-parameter: misreport factor >= 0");
  const auto ri = static_cast<std::size_t>(r);
  const Bids truth = truthful_bids(topo);
  const Demands true_dem = demands_of(topo);

  auto utility_of = [&](const Bids& bids) {
    const VcgAllocation full = allocate_vcg(topo, bids, cost);
    if (!full.asg.assigned(r)) return 0.0;
    const double v = valuation(topo, cost, full.asg,
                               demands_from_bids(topo, bids), true_dem[ri], r);
    return v - vcg_payment(r, topo, bids, cost, full);
  };

  ProbeResult res;
  res.utility_truthful = utility_of(truth);
  Bids mis = truth;
  mis[ri].w_ul *= factor;
  mis[ri].w_dl *= factor;
  mis[ri].gops_ul *= factor;
  mis[ri].gops_dl *= factor;
  res.utility_misreport = utility_of(mis);
  return res;
}

}  // namespace oran
