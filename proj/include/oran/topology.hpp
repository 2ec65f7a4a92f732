#pragma once

#include <cstdint>
#include <vector>

#include "oran/radio_model.hpp"

namespace oran {

struct Point {
  double x = 0.0;  // km
  double y = 0.0;  // km
};

double distance_km(const Point& a, const Point& b);

enum class CellType { Macro, Small };
enum class ServiceClass { Urllc, Embb };
enum class CloudKind { Edge, Olt };

struct RadioUnit {
  int id = -1;
  int mno = 0;
  Point pos;
  CellType cell = CellType::Small;
  ServiceClass service = ServiceClass::Embb;
  double w_ul = 0.0;       // front/mid-haul uplink demand (bit/s)
  double w_dl = 0.0;       // downlink demand (bit/s)
  double gops_ul = 0.0;    // DU-CU uplink processing demand (GOPS/slot)
  double gops_dl = 0.0;
  double eta_ul = 0.0;     // on-RU processing demand (GOPS/slot)
  double eta_dl = 0.0;
  double h_ul = 1.0;       // on-RU processing capacity (GOPS/slot)
  double h_dl = 1.0;
  double delta_h = 100e-6;     // one-way front/mid-haul latency bound (s)
  double delta_rdc = 975e-6;   // RU-DU-CU processing latency bound (s)
  double default_cost = 100.0;
};

struct CloudSite {
  int id = -1;
  CloudKind kind = CloudKind::Olt;
  Point pos;
  double b_ul = 1.0;       // link throughput caps (bit/s)
  double b_dl = 1.0;
  double g_ul = 1.0;       // compute caps (GOPS/slot)
  double g_dl = 1.0;
  double burst_interval_s = 31.25e-6;
  int owner_mno = -1;      // Edge sites: MNO of the co-located macro cell
  int level1 = -1;         // Edge sites: splitter subtree; -1 for OLT
  int co = -1;             // OLT sites: index of the hosting CO; -1 for Edge
};

struct Splitter {
  Point pos;
  std::vector<int> members;
};

struct DeploymentSpec {
  enum class Placement { Grid, UniformRandom };
  double area_side_km = 5.0;
  int n_macro = 8;
  int n_small = 30;
  std::vector<double> mno_shares = {0.2, 0.3, 0.5};
  int n_level1 = 6;
  std::uint64_t seed = 1;
  Placement placement = Placement::Grid;
};

/// Knobs the deployment generator needs beyond the geometry spec.
struct NetworkParams {
  double edge_gops = 1.5e4;   // per direction, GOPS/slot
  double edge_bps = 50e9;     // per direction, bit/s
  double olt_gops = 4.5e4;
  double olt_bps = 600e9;
  double burst_interval_s = 31.25e-6;
  double queue_delay_s = 15e-6;
  double theta_tti_s = 500e-6;
  double fh_bound_s = 100e-6;
  double rdc_urllc_s = 325e-6;
  double rdc_embb_s = 975e-6;
  double default_cost = 100.0;
  double urllc_fraction = 0.25;
};

/// The three split-parameter sets and burst framing that derive RU demands.
struct RadioConfig {
  SplitParams uplink;    // low-PHY split, drives W^UL
  SplitParams downlink;  // post-modulation split, drives W^DL
  SplitParams effort;    // processing-effort calibration
  BurstConfig burst;
  double ru_proc_ratio = 0.3;  // eta/H at the base demand point
};

struct Topology {
  std::vector<RadioUnit> rus;
  std::vector<CloudSite> clouds;
  std::vector<Splitter> level1;   // members: RU ids
  std::vector<Splitter> level2;   // members: level-1 indices
  std::vector<Point> co_positions;
  std::vector<int> ru_level1;     // RU id -> level-1 index
  std::vector<int> ru_co;         // RU id -> CO index
  std::vector<std::vector<std::uint8_t>> z;       // |R| x |Y|
  std::vector<std::vector<double>> dist_km;       // |R| x |Y|, inf when !z
  std::vector<std::vector<double>> queue_delay_s; // |R| x |Y|
  double theta_tti_s = 500e-6;
  int n_mnos = 1;

  bool connected(int r, int y) const { return z[r][y] != 0; }
  int n_rus() const { return static_cast<int>(rus.size()); }
  int n_sites() const { return static_cast<int>(clouds.size()); }
};

void validate(const DeploymentSpec& spec);

/// Builds the deployment: COs at (0,0) and (D,D), macro/small cells placed on
/// a grid or uniformly at random, level-1 splitters by k-means over the RU
/// positions, one level-2 splitter at the area center, Edge sites co-located
/// with macro cells, demands derived from the radio config. Deterministic
/// for a given spec.
Topology generate_topology(const DeploymentSpec& spec, const RadioConfig& radio,
                           const NetworkParams& net);

/// Recomputes the connectivity matrix from the splitter structure: an RU
/// reaches an Edge site in its own level-1 subtree or across the shared
/// level-2 splitter, and the OLT site of its own CO.
std::vector<std::vector<std::uint8_t>> connectivity(const Topology& topo);

/// Fiber path length along the splitter tree (km). Throws NotConnectedError
/// when no virtual-PON path exists.
double fiber_distance(const Topology& topo, int r, int y);

/// Rescales every RU's demand so the raw uplink rate equals `raw_ul_bps`
/// (downlink and DU-CU effort co-scale from the calibrated base point).
void set_demand_level(Topology& topo, const RadioConfig& radio,
                      double raw_ul_bps);

/// Multiplies all W/Gamma demand fields by `factor` (externally supplied
/// deployments have no calibrated base point to rescale from).
void scale_demands(Topology& topo, double factor);

/// Deterministic Lloyd k-means with index-spread seeding; ties to the lowest
/// cluster index, empty clusters keep their previous centroid.
struct KmeansResult {
  std::vector<Point> centroids;
  std::vector<int> membership;
};
KmeansResult kmeans(const std::vector<Point>& pts, int k, int max_iter = 100);

}  // namespace oran
