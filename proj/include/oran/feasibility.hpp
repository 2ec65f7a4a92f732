#pragma once

#include <vector>

#include "oran/topology.hpp"

namespace oran {

inline constexpr double kFiberKmPerS = 2.0e5;  // light speed in fiber
inline constexpr double kShareEpsilon = 1e-9;  // proportional-share denominator guard
inline constexpr double kLatencyTol = 1e-12;   // latency comparison slack (s)

enum class Direction { Ul, Dl };
enum class Sharing { Proportional, Uniform };

/// Demand vector actually used by the allocators; equals the topology's RU
/// fields for truthful runs, or the submitted bids in the auction.
struct Demand {
  double w_ul = 0.0;
  double w_dl = 0.0;
  double gops_ul = 0.0;
  double gops_dl = 0.0;
};
using Demands = std::vector<Demand>;

Demands demands_of(const Topology& topo);

/// Partial RU -> cloud map. Value type; copying is cheap at the scales the
/// simulator runs at.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int n_rus, int n_sites);

  void assign(int r, int y);
  void unassign(int r);
  int site_of(int r) const { return site_of_[static_cast<std::size_t>(r)]; }
  bool assigned(int r) const { return site_of(r) >= 0; }
  const std::vector<int>& tenants(int y) const {
    return tenants_[static_cast<std::size_t>(y)];
  }
  int occupancy(int y) const {
    return static_cast<int>(tenants_[static_cast<std::size_t>(y)].size());
  }
  std::vector<int> active_sites() const;
  int n_assigned() const { return n_assigned_; }
  int n_rus() const { return static_cast<int>(site_of_.size()); }
  int n_sites() const { return static_cast<int>(tenants_.size()); }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.site_of_ == b.site_of_;
  }

 private:
  std::vector<int> site_of_;
  std::vector<std::vector<int>> tenants_;
  int n_assigned_ = 0;
};

struct CostModel {
  double c_default = 100.0;
  double c_lambda = 0.5e-9;  // currency per bit/s
  double c_p = 1.5;          // currency per GOPS/slot
  // Discount on the compute term, per (RU, site); empty means no discount.
  std::vector<std::vector<double>> gamma;

  double gamma_at(int r, int y) const {
    if (gamma.empty()) return 1.0;
    return gamma[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
  }
};

void validate(const CostModel& cost);

/// Cost of a site's whole resource block: c_lambda*(B_ul+B_dl) + c_p*(G_ul+G_dl).
double site_cost(const Topology& topo, const CostModel& cost, int y);

/// Aggregate demand of a site's tenants.
struct SiteLoad {
  double w_ul = 0.0;
  double w_dl = 0.0;
  double gops_ul = 0.0;
  double gops_dl = 0.0;
};
SiteLoad site_load(const Demands& dem, const Assignment& asg, int y);
SiteLoad operator+(SiteLoad load, const Demand& d);

/// Latency/ratio left-hand sides evaluated against an explicit tenant load
/// (the load must already include RU r when evaluating a candidate join).
double uplink_fh_latency(const Topology& topo, int r, int y, const SiteLoad& load);
double downlink_fh_latency(const Topology& topo, int r, int y, const SiteLoad& load);
double proc_latency_ratio(const Topology& topo, int r, int y, Direction dir,
                          const SiteLoad& load);

/// Spec-shaped accessors for an existing assignment; throw NotAssignedError
/// when r is not mapped to y.
double uplink_fh_latency(const Topology& topo, const Demands& dem,
                         const Assignment& asg, int r, int y);
double downlink_fh_latency(const Topology& topo, const Demands& dem,
                           const Assignment& asg, int r, int y);
double proc_latency_ratio(const Topology& topo, const Demands& dem,
                          const Assignment& asg, int r, int y, Direction dir);

/// Allocated resource shares for RU r on its site.
double share_throughput(const Topology& topo, const Demands& dem,
                        const Assignment& asg, int r, int y,
                        Sharing sharing = Sharing::Proportional,
                        double eps = kShareEpsilon);
double share_gops(const Topology& topo, const Demands& dem,
                  const Assignment& asg, int r, int y,
                  Sharing sharing = Sharing::Proportional,
                  double eps = kShareEpsilon);

enum class ConstraintKind {
  Connectivity,
  UplinkFhLatency,
  DownlinkFhLatency,
  UplinkProc,
  DownlinkProc,
};

struct Violation {
  ConstraintKind kind = ConstraintKind::Connectivity;
  int ru = -1;  // the RU whose bound fails; -1 for connectivity
};

struct CheckResult {
  bool ok = false;
  std::vector<Violation> violations;
  explicit operator bool() const { return ok; }
};

/// True iff r may join y: the pair is connected and, with r added, the four
/// latency constraints hold for every RU currently on y (including r).
CheckResult check_assignable(const Topology& topo, const Demands& dem,
                             const Assignment& asg, int r, int y);

/// Per-RU OPEX: default cost plus priced resource shares; 0 when unassigned.
double ru_opex(const Topology& topo, const Demands& dem, const Assignment& asg,
               const CostModel& cost, int r,
               Sharing sharing = Sharing::Proportional,
               double eps = kShareEpsilon);

/// Full post-hoc audit of an assignment: every mapped pair must be connected
/// and every assigned RU must satisfy all four latency constraints.
std::vector<Violation> audit(const Topology& topo, const Demands& dem,
                             const Assignment& asg);

}  // namespace oran
