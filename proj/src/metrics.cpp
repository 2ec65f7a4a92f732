#include "oran/metrics.hpp"

namespace oran {

double outage_overall(const Topology& topo, const Assignment& asg) {
  if (topo.rus.empty()) return 0.0;
  return 1.0 - static_cast<double>(asg.n_assigned()) / topo.rus.size();
}

std::vector<double> outage_per_mno(const Topology& topo,
                                   const Assignment& asg) {
  std::vector<int> total(static_cast<std::size_t>(topo.n_mnos), 0);
  std::vector<int> missing(static_cast<std::size_t>(topo.n_mnos), 0);
  for (const auto& ru : topo.rus) {
    total[static_cast<std::size_t>(ru.mno)] += 1;
    if (!asg.assigned(ru.id)) missing[static_cast<std::size_t>(ru.mno)] += 1;
  }
  std::vector<double> out(static_cast<std::size_t>(topo.n_mnos), 0.0);
  for (std::size_t m = 0; m < out.size(); ++m)
    if (total[m] > 0) out[m] = static_cast<double>(missing[m]) / total[m];
  return out;
}

double total_leased_cost(const Topology& topo, const CostModel& cost,
                         const Assignment& asg) {
  double total = 0.0;
  for (int y : asg.active_sites()) total += site_cost(topo, cost, y);
  return total;
}

std::vector<double> opex_reduction_per_mno(const Topology& topo,
                                           const Demands& dem,
                                           const CostModel& cost,
                                           const Assignment& asg,
                                           Sharing sharing) {
  std::vector<double> opex_sum(static_cast<std::size_t>(topo.n_mnos), 0.0);
  std::vector<double> standalone_sum(static_cast<std::size_t>(topo.n_mnos), 0.0);
  for (const auto& ru : topo.rus) {
    const int y = asg.site_of(ru.id);
    if (y < 0) continue;
    const auto m = static_cast<std::size_t>(ru.mno);
    opex_sum[m] += ru_opex(topo, dem, asg, cost, ru.id, sharing,
                           sharing == Sharing::Proportional ? kShareEpsilon : 0.0);
    const auto& site = topo.clouds[static_cast<std::size_t>(y)];
    standalone_sum[m] += ru.default_cost +
                         cost.c_lambda * (site.b_ul + site.b_dl) +
                         cost.gamma_at(ru.id, y) * cost.c_p * (site.g_ul + site.g_dl);
  }
  std::vector<double> out(static_cast<std::size_t>(topo.n_mnos), 0.0);
  for (std::size_t m = 0; m < out.size(); ++m)
    if (standalone_sum[m] > 0.0)
      out[m] = 100.0 * (1.0 - opex_sum[m] / standalone_sum[m]);
  return out;
}

int active_clouds(const Assignment& asg) {
  return static_cast<int>(asg.active_sites().size());
}

}  // namespace oran
