#include "oran/minmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oran {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<int> sort_rus(const Topology& topo) {
  return sort_rus(topo, demands_of(topo));
}

std::vector<int> sort_rus(const Topology& topo, const Demands& dem) {
  return sort_rus(topo, dem, -1);
}

std::vector<int> sort_rus(const Topology& topo, const Demands& dem,
                          int exclude_ru) {
  std::vector<std::vector<int>> queues(static_cast<std::size_t>(topo.n_mnos));
  std::size_t total = 0;
  for (const auto& ru : topo.rus) {
    if (ru.id == exclude_ru) continue;
    queues[static_cast<std::size_t>(ru.mno)].push_back(ru.id);
    ++total;
  }
  auto key = [&](int r) {
    const auto& d = dem[static_cast<std::size_t>(r)];
    return std::make_tuple(std::max(d.w_dl, d.w_ul),
                           std::max(d.gops_dl, d.gops_ul), r);
  };
  for (auto& q : queues)
    std::sort(q.begin(), q.end(),
              [&](int a, int b) { return key(a) < key(b); });

  std::vector<int> order;
  order.reserve(total);
  std::vector<std::size_t> next(queues.size(), 0);
  while (order.size() < total) {
    for (std::size_t m = 0; m < queues.size(); ++m) {
      if (next[m] < queues[m].size()) order.push_back(queues[m][next[m]++]);
    }
  }
  return order;
}

namespace {

// Nearest connected site that accepts r; -1 when none does.
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

MinmaxResult allocate_minmax(const Topology& topo, const CostModel& cost,
                             const GreedyOptions& opts) {
  const Demands dem = demands_of(topo);
  const std::vector<int> order = sort_rus(topo, dem);

  MinmaxResult res;
  res.asg = Assignment(topo.n_rus(), topo.n_sites());
  res.opex.assign(topo.rus.size(), 0.0);

  for (std::size_t i = 0; i < order.size(); ++i) {
    const int r = order[i];
    if (i == 0) {
      const int y = nearest_feasible(topo, dem, res.asg, r);
      if (y >= 0) {
        res.asg.assign(r, y);
      } else {
        res.first_ru_infeasible = true;
        res.diagnostic = "first RU in the order has no feasible site";
        if (opts.strict_first_break) break;
      }
      continue;
    }
    double best_opex = kInf;
    double best_dist = kInf;
    int best_y = -1;
    for (int y = 0; y < topo.n_sites(); ++y) {
      if (!check_assignable(topo, dem, res.asg, r, y).ok) continue;
      res.asg.assign(r, y);
      const double c = ru_opex(topo, dem, res.asg, cost, r);
      res.asg.unassign(r);
      const double d = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
      if (c < best_opex - 1e-12 ||
          (std::abs(c - best_opex) <= 1e-12 && d < best_dist)) {
        best_opex = c;
        best_dist = d;
        best_y = y;
      }
    }
    if (best_y >= 0) res.asg.assign(r, best_y);
  }

  for (int r = 0; r < topo.n_rus(); ++r) {
    res.opex[static_cast<std::size_t>(r)] =
        ru_opex(topo, dem, res.asg, cost, r);
    res.max_opex = std::max(res.max_opex, res.opex[static_cast<std::size_t>(r)]);
  }
  return res;
}

}  // namespace oran
