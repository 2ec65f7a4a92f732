#include "oran/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "oran/errors.hpp"

namespace oran {

namespace {

// Bursts per TTI; guards against float dust on exact ratios.
double bursts_per_tti(double tti_s, double burst_s) {
  return std::ceil(tti_s / burst_s - 1e-9);
}

void require_assigned(const Assignment& asg, int r, int y) {
  if (asg.site_of(r) != y)
    throw NotAssignedError("not-assigned: RU is not mapped to this site");
}

}  // namespace

Demands demands_of(const Topology& topo) {
  Demands dem;
  dem.reserve(topo.rus.size());
  for (const auto& ru : topo.rus)
    dem.push_back({ru.w_ul, ru.w_dl, ru.gops_ul, ru.gops_dl});
  return dem;
}

Assignment::Assignment(int n_rus, int n_sites)
    : site_of_(static_cast<std::size_t>(n_rus), -1),
      tenants_(static_cast<std::size_t>(n_sites)) {}

void Assignment::assign(int r, int y) {
  if (assigned(r)) unassign(r);
  site_of_[static_cast<std::size_t>(r)] = y;
  tenants_[static_cast<std::size_t>(y)].push_back(r);
  n_assigned_ += 1;
}

void Assignment::unassign(int r) {
  const int y = site_of(r);
  if (y < 0) return;
  auto& t = tenants_[static_cast<std::size_t>(y)];
  t.erase(std::find(t.begin(), t.end(), r));
  site_of_[static_cast<std::size_t>(r)] = -1;
  n_assigned_ -= 1;
}

std::vector<int> Assignment::active_sites() const {
  std::vector<int> out;
  for (int y = 0; y < n_sites(); ++y)
    if (!tenants_[static_cast<std::size_t>(y)].empty()) out.push_back(y);
  return out;
}

void validate(const CostModel& cost) {
  if (cost.c_default < 0.0 || cost.c_lambda < 0.0 || cost.c_p < 0.0)
    throw InvalidParameterError("invalid-parameter: cost scalars >= 0");
  for (const auto& row : cost.gamma)
    for (double g : row)
      if (g < 0.0 || g > 1.0)
        throw InvalidParameterError("invalid-parameter: gamma in [0, 1]");
}

double site_cost(const Topology& topo, const CostModel& cost, int y) {
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  return cost.c_lambda * (site.b_ul + site.b_dl) +
         cost.c_p * (site.g_ul + site.g_dl);
}

SiteLoad site_load(const Demands& dem, const Assignment& asg, int y) {
  SiteLoad load;
  for (int t : asg.tenants(y)) load = load + dem[static_cast<std::size_t>(t)];
  return load;
}

SiteLoad operator+(SiteLoad load, const Demand& d) {
  load.w_ul += d.w_ul;
  load.w_dl += d.w_dl;
  load.gops_ul += d.gops_ul;
  load.gops_dl += d.gops_dl;
  return load;
}

double uplink_fh_latency(const Topology& topo, int r, int y,
                         const SiteLoad& load) {
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  const double queue = topo.queue_delay_s[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
  const double prop = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] / kFiberKmPerS;
  const double bursts = bursts_per_tti(topo.theta_tti_s, site.burst_interval_s);
  return queue + prop + bursts * load.w_ul * site.burst_interval_s / site.b_ul;
}

double downlink_fh_latency(const Topology& topo, int r, int y,
                           const SiteLoad& load) {
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  const double prop = topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] / kFiberKmPerS;
  const double bursts = bursts_per_tti(topo.theta_tti_s, site.burst_interval_s);
  return prop + bursts * load.w_dl * site.burst_interval_s / site.b_dl;
}

double proc_latency_ratio(const Topology& topo, int r, int y, Direction dir,
                          const SiteLoad& load) {
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  const auto& ru = topo.rus[static_cast<std::size_t>(r)];
  if (dir == Direction::Ul)
    return ru.eta_ul / ru.h_ul + load.gops_ul / site.g_ul;
  return ru.eta_dl / ru.h_dl + load.gops_dl / site.g_dl;
}

double uplink_fh_latency(const Topology& topo, const Demands& dem,
                         const Assignment& asg, int r, int y) {
  require_assigned(asg, r, y);
  return uplink_fh_latency(topo, r, y, site_load(dem, asg, y));
}

double downlink_fh_latency(const Topology& topo, const Demands& dem,
                           const Assignment& asg, int r, int y) {
  require_assigned(asg, r, y);
  return downlink_fh_latency(topo, r, y, site_load(dem, asg, y));
}

double proc_latency_ratio(const Topology& topo, const Demands& dem,
                          const Assignment& asg, int r, int y, Direction dir) {
  require_assigned(asg, r, y);
  return proc_latency_ratio(topo, r, y, dir, site_load(dem, asg, y));
}

double share_throughput(const Topology& topo, const Demands& dem,
                        const Assignment& asg, int r, int y, Sharing sharing,
                        double eps) {
  require_assigned(asg, r, y);
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  if (sharing == Sharing::Uniform) {
    const double n = asg.occupancy(y);
    return site.b_ul / n + site.b_dl / n;
  }
  const SiteLoad load = site_load(dem, asg, y);
  const auto& d = dem[static_cast<std::size_t>(r)];
  return d.w_ul * site.b_ul / (eps + load.w_ul) +
         d.w_dl * site.b_dl / (eps + load.w_dl);
}

double share_gops(const Topology& topo, const Demands& dem,
                  const Assignment& asg, int r, int y, Sharing sharing,
                  double eps) {
  require_assigned(asg, r, y);
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  if (sharing == Sharing::Uniform) {
    const double n = asg.occupancy(y);
    return site.g_ul / n + site.g_dl / n;
  }
  const SiteLoad load = site_load(dem, asg, y);
  const auto& d = dem[static_cast<std::size_t>(r)];
  return d.gops_ul * site.g_ul / (eps + load.gops_ul) +
         d.gops_dl * site.g_dl / (eps + load.gops_dl);
}

namespace {

// Checks the four latency constraints of RU t against the given tenant load.
void check_latencies(const Topology& topo, int t, int y, const SiteLoad& load,
                     std::vector<Violation>& out) {
  const auto& ru = topo.rus[static_cast<std::size_t>(t)];
  const double bound_ratio = ru.delta_rdc / topo.theta_tti_s;
  if (uplink_fh_latency(topo, t, y, load) > ru.delta_h + kLatencyTol)
    out.push_back({ConstraintKind::UplinkFhLatency, t});
  if (downlink_fh_latency(topo, t, y, load) > ru.delta_h + kLatencyTol)
    out.push_back({ConstraintKind::DownlinkFhLatency, t});
  if (proc_latency_ratio(topo, t, y, Direction::Ul, load) >
      bound_ratio + kLatencyTol)
    out.push_back({ConstraintKind::UplinkProc, t});
  if (proc_latency_ratio(topo, t, y, Direction::Dl, load) >
      bound_ratio + kLatencyTol)
    out.push_back({ConstraintKind::DownlinkProc, t});
}

}  // namespace

CheckResult check_assignable(const Topology& topo, const Demands& dem,
                             const Assignment& asg, int r, int y) {
  CheckResult res;
  if (!topo.connected(r, y)) {
    res.ok = false;
    res.violations.push_back({ConstraintKind::Connectivity, -1});
    return res;
  }
  SiteLoad load = site_load(dem, asg, y);
  if (asg.site_of(r) != y) load = load + dem[static_cast<std::size_t>(r)];
  // Re-validate every incumbent: the shared transmission and processing
  // terms grow with the newcomer's demand.
  for (int t : asg.tenants(y))
    if (t != r) check_latencies(topo, t, y, load, res.violations);
  check_latencies(topo, r, y, load, res.violations);
  res.ok = res.violations.empty();
  return res;
}

double ru_opex(const Topology& topo, const Demands& dem, const Assignment& asg,
               const CostModel& cost, int r, Sharing sharing, double eps) {
  const int y = asg.site_of(r);
  if (y < 0) return 0.0;
  const double b = share_throughput(topo, dem, asg, r, y, sharing, eps);
  const double g = share_gops(topo, dem, asg, r, y, sharing, eps);
  return topo.rus[static_cast<std::size_t>(r)].default_cost +
         cost.c_lambda * b + cost.gamma_at(r, y) * cost.c_p * g;
}

std::vector<Violation> audit(const Topology& topo, const Demands& dem,
                             const Assignment& asg) {
  std::vector<Violation> out;
  for (int y = 0; y < asg.n_sites(); ++y) {
    const auto& tenants = asg.tenants(y);
    if (tenants.empty()) continue;
    const SiteLoad load = site_load(dem, asg, y);
    for (int t : tenants) {
      if (!topo.connected(t, y)) out.push_back({ConstraintKind::Connectivity, t});
      check_latencies(topo, t, y, load, out);
    }
  }
  return out;
}

}  // namespace oran
