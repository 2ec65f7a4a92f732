#include "oran/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oran/errors.hpp"
#include "oran/rng.hpp"

namespace oran {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Point> grid_positions(int n, double side) {
  std::vector<Point> out;
  if (n <= 0) return out;
  const int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))));
  const int cols = (n + rows - 1) / rows;
  for (int i = 0; i < n; ++i) {
    const int r = i / cols;
    const int c = i % cols;
    out.push_back({(c + 0.5) * side / cols, (r + 0.5) * side / rows});
  }
  return out;
}

std::vector<Point> random_positions(int n, double side, Rng& rng) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::max(0, n)));
  for (int i = 0; i < n; ++i) {
    out.push_back({rng.uniform(0.02 * side, 0.98 * side),
                   rng.uniform(0.02 * side, 0.98 * side)});
  }
  return out;
}

// Largest-remainder apportionment of n items over the given shares.
std::vector<int> apportion(const std::vector<double>& shares, int n) {
  const std::size_t k = shares.size();
  std::vector<int> counts(k, 0);
  std::vector<std::pair<double, std::size_t>> rema;
  int used = 0;
  for (std::size_t m = 0; m < k; ++m) {
    const double q = shares[m] * n;
    counts[m] = static_cast<int>(std::floor(q));
    used += counts[m];
    rema.push_back({q - counts[m], m});
  }
  std::stable_sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  for (int i = 0; i < n - used; ++i) counts[rema[static_cast<std::size_t>(i)].second] += 1;
  return counts;
}

// Spread the per-group counts over positions so every prefix tracks the
// shares (quota deficit argmax, ties to the lowest group index).
std::vector<int> spread(const std::vector<double>& shares,
                        const std::vector<int>& counts, int n) {
  const std::size_t k = shares.size();
  std::vector<int> emitted(k, 0);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double best = -kInf;
    std::size_t pick = 0;
    for (std::size_t m = 0; m < k; ++m) {
      if (emitted[m] >= counts[m]) continue;
      const double deficit = shares[m] * (i + 1) - emitted[m];
      if (deficit > best) {
        best = deficit;
        pick = m;
      }
    }
    emitted[pick] += 1;
    out.push_back(static_cast<int>(pick));
  }
  return out;
}

int level2_of(const Topology& topo, int l1) {
  for (std::size_t i = 0; i < topo.level2.size(); ++i) {
    const auto& m = topo.level2[i].members;
    if (std::find(m.begin(), m.end(), l1) != m.end()) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

double distance_km(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void validate(const DeploymentSpec& spec) {
  if (spec.area_side_km <= 0.0)
    throw InvalidParameterError("invalid-parameter: area_side_km > 0");
  if (spec.n_macro < 0 || spec.n_small < 0)
    throw InvalidParameterError("invalid-parameter: cell counts >= 0");
  if (spec.n_level1 < 1)
    throw InvalidParameterError("invalid-parameter: n_level1 >= 1");
  if (spec.mno_shares.empty())
    throw InvalidParameterError("invalid-parameter: mno_shares non-empty");
  double sum = 0.0;
  for (double s : spec.mno_shares) {
    if (s < 0.0) throw InvalidParameterError("invalid-parameter: mno_shares >= 0");
    sum += s;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidParameterError("invalid-parameter: mno_shares must sum to 1");
}

KmeansResult kmeans(const std::vector<Point>& pts, int k, int max_iter) {
  const int n = static_cast<int>(pts.size());
  if (k < 1 || k > n)
    throw InvalidParameterError("invalid-parameter: kmeans needs 1 <= k <= n");
  KmeansResult res;
  res.centroids.resize(static_cast<std::size_t>(k));
  // Index-spread seeding keeps the run deterministic.
  for (int i = 0; i < k; ++i)
    res.centroids[static_cast<std::size_t>(i)] =
        pts[static_cast<std::size_t>(static_cast<long long>(i) * n / k)];
  res.membership.assign(static_cast<std::size_t>(n), 0);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (int p = 0; p < n; ++p) {
      double best = kInf;
      int idx = 0;
      for (int c = 0; c < k; ++c) {
        const double d = distance_km(pts[static_cast<std::size_t>(p)],
                                     res.centroids[static_cast<std::size_t>(c)]);
        if (d < best - 1e-15) {
          best = d;
          idx = c;
        }
      }
      if (res.membership[static_cast<std::size_t>(p)] != idx) {
        res.membership[static_cast<std::size_t>(p)] = idx;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;
    std::vector<Point> sums(static_cast<std::size_t>(k), Point{0, 0});
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int p = 0; p < n; ++p) {
      const auto c = static_cast<std::size_t>(res.membership[static_cast<std::size_t>(p)]);
      sums[c].x += pts[static_cast<std::size_t>(p)].x;
      sums[c].y += pts[static_cast<std::size_t>(p)].y;
      sizes[c] += 1;
    }
    for (int c = 0; c < k; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (sizes[ci] > 0)
        res.centroids[ci] = {sums[ci].x / sizes[ci], sums[ci].y / sizes[ci]};
    }
  }
  return res;
}

std::vector<std::vector<std::uint8_t>> connectivity(const Topology& topo) {
  const int nr = topo.n_rus();
  const int ny = topo.n_sites();
  std::vector<std::vector<std::uint8_t>> z(
      static_cast<std::size_t>(nr),
      std::vector<std::uint8_t>(static_cast<std::size_t>(ny), 0));
  for (int r = 0; r < nr; ++r) {
    const int l1r = topo.ru_level1[static_cast<std::size_t>(r)];
    const int l2r = level2_of(topo, l1r);
    for (int y = 0; y < ny; ++y) {
      const auto& site = topo.clouds[static_cast<std::size_t>(y)];
      bool ok = false;
      if (site.kind == CloudKind::Edge) {
        if (site.level1 == l1r) {
          ok = true;
        } else if (l2r >= 0 && level2_of(topo, site.level1) == l2r) {
          ok = true;  // reachable across two branches of the shared splitter
        }
      } else {
        ok = (site.co == topo.ru_co[static_cast<std::size_t>(r)]);
      }
      z[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] = ok ? 1 : 0;
    }
  }
  return z;
}

double fiber_distance(const Topology& topo, int r, int y) {
  const auto& site = topo.clouds[static_cast<std::size_t>(y)];
  const auto& ru = topo.rus[static_cast<std::size_t>(r)];
  const int l1r = topo.ru_level1[static_cast<std::size_t>(r)];
  const Point l1r_pos = topo.level1[static_cast<std::size_t>(l1r)].pos;
  const int l2r = level2_of(topo, l1r);

  if (site.kind == CloudKind::Edge) {
    if (site.level1 == l1r)
      return distance_km(ru.pos, l1r_pos) + distance_km(l1r_pos, site.pos);
    if (l2r >= 0 && level2_of(topo, site.level1) == l2r) {
      const Point l2_pos = topo.level2[static_cast<std::size_t>(l2r)].pos;
      const Point l1e_pos = topo.level1[static_cast<std::size_t>(site.level1)].pos;
      return distance_km(ru.pos, l1r_pos) + distance_km(l1r_pos, l2_pos) +
             distance_km(l2_pos, l1e_pos) + distance_km(l1e_pos, site.pos);
    }
    throw NotConnectedError("not-connected: no virtual-PON path");
  }
  if (site.co != topo.ru_co[static_cast<std::size_t>(r)])
    throw NotConnectedError("not-connected: site is not the CO of this PON tree");
  if (l2r < 0) throw NotConnectedError("not-connected: splitter not attached");
  const Point l2_pos = topo.level2[static_cast<std::size_t>(l2r)].pos;
  return distance_km(ru.pos, l1r_pos) + distance_km(l1r_pos, l2_pos) +
         distance_km(l2_pos, site.pos);
}

Topology generate_topology(const DeploymentSpec& spec, const RadioConfig& radio,
                           const NetworkParams& net) {
  validate(spec);
  const int n_rus = spec.n_macro + spec.n_small;
  if (spec.n_level1 > n_rus)
    throw InfeasibleSpecError("infeasible-spec: n_level1 exceeds the RU count");

  const double side = spec.area_side_km;
  Rng rng(spec.seed);

  std::vector<Point> macro_pos, small_pos;
  if (spec.placement == DeploymentSpec::Placement::Grid) {
    macro_pos = grid_positions(spec.n_macro, side);
    small_pos = grid_positions(spec.n_small, side);
  } else {
    macro_pos = random_positions(spec.n_macro, side, rng);
    small_pos = random_positions(spec.n_small, side, rng);
  }

  // Demands from the calibrated radio configuration.
  const double raw_ul = split72_rate(radio.uplink);
  const double raw_dl = split73_rate(radio.downlink);
  const double w_ul = framed_demand(raw_ul, radio.burst);
  const double w_dl = framed_demand(raw_dl, radio.burst);
  const double effort = rdc_effort(radio.effort);
  const EffortShares ul_shares = split_fraction(effort, Split::S72);
  const EffortShares dl_shares = split_fraction(effort, Split::S73);
  if (radio.ru_proc_ratio <= 0.0 || radio.ru_proc_ratio > 1.0)
    throw InvalidParameterError("invalid-parameter: ru_proc_ratio in (0, 1]");

  const auto mno_counts = apportion(spec.mno_shares, n_rus);
  const auto mno_of = spread(spec.mno_shares, mno_counts, n_rus);
  const std::vector<double> svc_shares = {net.urllc_fraction, 1.0 - net.urllc_fraction};
  const auto svc_counts =
      apportion(svc_shares, n_rus);
  const auto svc_of = spread(svc_shares, svc_counts, n_rus);

  Topology topo;
  topo.theta_tti_s = net.theta_tti_s;
  topo.n_mnos = static_cast<int>(spec.mno_shares.size());
  topo.co_positions = {Point{0.0, 0.0}, Point{side, side}};

  for (int i = 0; i < n_rus; ++i) {
    RadioUnit ru;
    ru.id = i;
    ru.mno = mno_of[static_cast<std::size_t>(i)];
    ru.cell = (i < spec.n_macro) ? CellType::Macro : CellType::Small;
    ru.pos = (i < spec.n_macro)
                 ? macro_pos[static_cast<std::size_t>(i)]
                 : small_pos[static_cast<std::size_t>(i - spec.n_macro)];
    ru.service = (svc_of[static_cast<std::size_t>(i)] == 0) ? ServiceClass::Urllc
                                                            : ServiceClass::Embb;
    ru.w_ul = w_ul;
    ru.w_dl = w_dl;
    ru.gops_ul = ul_shares.ducu;
    ru.gops_dl = dl_shares.ducu;
    ru.eta_ul = ul_shares.ru;
    ru.eta_dl = dl_shares.ru;
    ru.h_ul = ul_shares.ru / radio.ru_proc_ratio;
    ru.h_dl = dl_shares.ru / radio.ru_proc_ratio;
    ru.delta_h = net.fh_bound_s;
    ru.delta_rdc = (ru.service == ServiceClass::Urllc) ? net.rdc_urllc_s
                                                       : net.rdc_embb_s;
    ru.default_cost = net.default_cost;
    topo.rus.push_back(ru);
  }

  std::vector<Point> ru_points;
  ru_points.reserve(topo.rus.size());
  for (const auto& ru : topo.rus) ru_points.push_back(ru.pos);
  const KmeansResult km = kmeans(ru_points, spec.n_level1);

  topo.level1.resize(static_cast<std::size_t>(spec.n_level1));
  for (int c = 0; c < spec.n_level1; ++c)
    topo.level1[static_cast<std::size_t>(c)].pos =
        km.centroids[static_cast<std::size_t>(c)];
  topo.ru_level1 = km.membership;
  for (int i = 0; i < n_rus; ++i)
    topo.level1[static_cast<std::size_t>(km.membership[static_cast<std::size_t>(i)])]
        .members.push_back(i);

  Splitter l2;
  l2.pos = {side / 2.0, side / 2.0};
  for (int c = 0; c < spec.n_level1; ++c) l2.members.push_back(c);
  topo.level2.push_back(l2);

  // Anti-diagonal CO split: each half is served by its corner CO; the exact
  // boundary goes to CO 0.
  topo.ru_co.resize(static_cast<std::size_t>(n_rus));
  for (int i = 0; i < n_rus; ++i) {
    const Point p = topo.rus[static_cast<std::size_t>(i)].pos;
    topo.ru_co[static_cast<std::size_t>(i)] = (p.x + p.y <= side + 1e-12) ? 0 : 1;
  }

  for (int m = 0; m < spec.n_macro; ++m) {
    CloudSite site;
    site.id = m;
    site.kind = CloudKind::Edge;
    site.pos = topo.rus[static_cast<std::size_t>(m)].pos;
    site.b_ul = net.edge_bps;
    site.b_dl = net.edge_bps;
    site.g_ul = net.edge_gops;
    site.g_dl = net.edge_gops;
    site.burst_interval_s = net.burst_interval_s;
    site.owner_mno = topo.rus[static_cast<std::size_t>(m)].mno;
    site.level1 = topo.ru_level1[static_cast<std::size_t>(m)];
    topo.clouds.push_back(site);
  }
  for (int c = 0; c < 2; ++c) {
    CloudSite site;
    site.id = spec.n_macro + c;
    site.kind = CloudKind::Olt;
    site.pos = topo.co_positions[static_cast<std::size_t>(c)];
    site.b_ul = net.olt_bps;
    site.b_dl = net.olt_bps;
    site.g_ul = net.olt_gops;
    site.g_dl = net.olt_gops;
    site.burst_interval_s = net.burst_interval_s;
    site.co = c;
    topo.clouds.push_back(site);
  }

  topo.z = connectivity(topo);
  const int ny = topo.n_sites();
  topo.dist_km.assign(static_cast<std::size_t>(n_rus),
                      std::vector<double>(static_cast<std::size_t>(ny), kInf));
  topo.queue_delay_s.assign(
      static_cast<std::size_t>(n_rus),
      std::vector<double>(static_cast<std::size_t>(ny), net.queue_delay_s));
  for (int r = 0; r < n_rus; ++r)
    for (int y = 0; y < ny; ++y)
      if (topo.connected(r, y))
        topo.dist_km[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] =
            fiber_distance(topo, r, y);

  return topo;
}

void set_demand_level(Topology& topo, const RadioConfig& radio,
                      double raw_ul_bps) {
  if (raw_ul_bps <= 0.0)
    throw InvalidParameterError("invalid-parameter: demand level > 0");
  const double base_ul = split72_rate(radio.uplink);
  const double base_dl = split73_rate(radio.downlink);
  const double s = raw_ul_bps / base_ul;
  const double effort = rdc_effort(radio.effort);
  const EffortShares ul_shares = split_fraction(effort, Split::S72);
  const EffortShares dl_shares = split_fraction(effort, Split::S73);
  for (auto& ru : topo.rus) {
    ru.w_ul = framed_demand(raw_ul_bps, radio.burst);
    ru.w_dl = framed_demand(base_dl * s, radio.burst);
    ru.gops_ul = ul_shares.ducu * s;
    ru.gops_dl = dl_shares.ducu * s;
  }
}

void scale_demands(Topology& topo, double factor) {
  if (factor <= 0.0)
    throw InvalidParameterError("invalid-parameter: demand factor > 0");
  for (auto& ru : topo.rus) {
    ru.w_ul *= factor;
    ru.w_dl *= factor;
    ru.gops_ul *= factor;
    ru.gops_dl *= factor;
  }
}

}  // namespace oran
