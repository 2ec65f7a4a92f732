#pragma once

// Hand-built and seeded toy worlds shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <vector>

#include "oran/feasibility.hpp"
#include "oran/rng.hpp"
#include "oran/topology.hpp"

namespace testsupport {

using namespace oran;

/// Builds a consistent Topology without going through the deployment
/// generator: one level-1 splitter holding every RU, a level-2 at the area
/// center, and caller-controlled connectivity/distance matrices (defaults:
/// fully connected, straight-line distances).
class WorldBuilder {
 public:
  double theta_tti_s = 500e-6;
  double queue_delay_s = 15e-6;
  int n_mnos = 1;

  int add_ru(Point pos, double w_ul, double w_dl, double gops_ul,
             double gops_dl, int mno = 0,
             ServiceClass svc = ServiceClass::Embb) {
    RadioUnit ru;
    ru.id = static_cast<int>(rus_.size());
    ru.mno = mno;
    ru.pos = pos;
    ru.service = svc;
    ru.w_ul = w_ul;
    ru.w_dl = w_dl;
    ru.gops_ul = gops_ul;
    ru.gops_dl = gops_dl;
    ru.eta_ul = 100.0;
    ru.eta_dl = 100.0;
    ru.h_ul = 100.0 / 0.3;
    ru.h_dl = 100.0 / 0.3;
    ru.delta_h = 100e-6;
    ru.delta_rdc = (svc == ServiceClass::Urllc) ? 325e-6 : 975e-6;
    ru.default_cost = 100.0;
    rus_.push_back(ru);
    return ru.id;
  }

  int add_site(Point pos, double b_per_dir, double g_per_dir,
               CloudKind kind = CloudKind::Edge, int owner = -1) {
    CloudSite s;
    s.id = static_cast<int>(clouds_.size());
    s.kind = kind;
    s.pos = pos;
    s.b_ul = b_per_dir;
    s.b_dl = b_per_dir;
    s.g_ul = g_per_dir;
    s.g_dl = g_per_dir;
    s.burst_interval_s = 31.25e-6;
    s.owner_mno = owner;
    s.level1 = 0;
    s.co = (kind == CloudKind::Olt) ? 0 : -1;
    clouds_.push_back(s);
    return s.id;
  }

  void set_connected(int r, int y, bool on) {
    ensure_matrices();
    z_[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] = on ? 1 : 0;
  }

  void set_distance(int r, int y, double km) {
    ensure_matrices();
    dist_[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)] = km;
  }

  Topology build() {
    ensure_matrices();
    Topology topo;
    topo.rus = rus_;
    topo.clouds = clouds_;
    topo.theta_tti_s = theta_tti_s;
    topo.n_mnos = n_mnos;
    topo.co_positions = {Point{0, 0}, Point{10, 10}};
    Splitter l1;
    l1.pos = Point{0, 0};
    for (const auto& ru : rus_) l1.members.push_back(ru.id);
    topo.level1.push_back(l1);
    Splitter l2;
    l2.pos = Point{5, 5};
    l2.members.push_back(0);
    topo.level2.push_back(l2);
    topo.ru_level1.assign(rus_.size(), 0);
    topo.ru_co.assign(rus_.size(), 0);
    topo.z = z_;
    topo.dist_km = dist_;
    topo.queue_delay_s.assign(
        rus_.size(), std::vector<double>(clouds_.size(), queue_delay_s));
    return topo;
  }

 private:
  void ensure_matrices() {
    const std::size_t nr = rus_.size();
    const std::size_t ny = clouds_.size();
    if (z_.size() != nr || (nr && z_[0].size() != ny)) {
      z_.assign(nr, std::vector<std::uint8_t>(ny, 1));
      dist_.assign(nr, std::vector<double>(ny, 0.0));
      for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t y = 0; y < ny; ++y)
          dist_[r][y] = distance_km(rus_[r].pos, clouds_[y].pos);
    }
  }

  std::vector<RadioUnit> rus_;
  std::vector<CloudSite> clouds_;
  std::vector<std::vector<std::uint8_t>> z_;
  std::vector<std::vector<double>> dist_;
};

struct TinyOptions {
  int min_rus = 4;
  int max_rus = 8;
  int max_sites = 4;
  int n_mnos = 3;
  double load_lo = 0.5;       // global demand multiplier range
  double load_hi = 1.5;
  bool co_scaled = false;     // per-RU scalar on all four demand components
  double urllc_prob = 0.25;
};

/// Seeded desk-scale instance within the oracle caps. Sites are homogeneous
/// within their class (uniform Edge caps, uniform OLT caps), demands vary
/// per RU around a calibrated-looking base point.
inline Topology tiny_instance(std::uint64_t seed, const TinyOptions& opt = {}) {
  Rng rng(seed);
  WorldBuilder w;
  w.n_mnos = opt.n_mnos;
  const double side = 5.0;

  const int n_rus =
      opt.min_rus + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(opt.max_rus - opt.min_rus + 1)));
  const int n_sites =
      2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_sites - 1)));
  const int n_olt = 1;
  const int n_edge = n_sites - n_olt;

  for (int y = 0; y < n_edge; ++y)
    w.add_site({rng.uniform(0.5, side - 0.5), rng.uniform(0.5, side - 0.5)},
               50e9, 1.5e4, CloudKind::Edge, static_cast<int>(rng.below(opt.n_mnos)));
  for (int y = 0; y < n_olt; ++y)
    w.add_site({0.0, 0.0}, 100e9, 3.0e4, CloudKind::Olt);

  const double load = rng.uniform(opt.load_lo, opt.load_hi);
  for (int r = 0; r < n_rus; ++r) {
    const double s = opt.co_scaled ? rng.uniform(0.5, 1.5) : 1.0;
    const double w_ul = load * s * (opt.co_scaled ? 2.4e9 : rng.uniform(1.2e9, 3.2e9));
    const double w_dl = load * s * (opt.co_scaled ? 0.45e9 : rng.uniform(0.25e9, 0.6e9));
    const double g_ul = load * s * (opt.co_scaled ? 330.0 : rng.uniform(180.0, 480.0));
    const double g_dl = load * s * (opt.co_scaled ? 275.0 : rng.uniform(150.0, 400.0));
    const auto svc =
        rng.unit() < opt.urllc_prob ? ServiceClass::Urllc : ServiceClass::Embb;
    w.add_ru({rng.uniform(0.2, side - 0.2), rng.uniform(0.2, side - 0.2)}, w_ul,
             w_dl, g_ul, g_dl, static_cast<int>(rng.below(opt.n_mnos)), svc);
  }
  return w.build();
}

}  // namespace testsupport
