#pragma once

#include <cstdint>

namespace oran {

/// Parameters of the 5G low-PHY functional split feeding the datarate and
/// processing-effort formulas. Defaults are neutral; calibrated values live
/// in the scenario config.
struct SplitParams {
  int n_ports = 1;              // antenna ports
  int n_layers = 1;             // spatial layers
  int n_rb = 1;                 // resource blocks
  int sc_per_rb = 12;           // sub-carriers per RB
  int sym_per_subframe = 14;    // OFDM symbols per sub-frame
  double subframe_s = 1e-3;     // sub-frame duration (s)
  double utilization = 1.0;     // RB utilization, (0, 1]
  int quantizer_bits = 1;       // bits per I/Q dimension
  double overhead = 1.0;        // fronthaul overhead multiplier, >= 1
  double resource_overhead = 0.0;  // control/reference overhead, [0, 1)
  int mod_order = 4;            // modulation order, one of {4, 16, 64, 256}
  int n_antennas = 1;           // MIMO antennas
  double mod_bits = 0.0;        // modulation bits per symbol (effort model)
  double code_rate = 1.0;       // coding rate, [0, 1]
};

/// Ethernet burst framing of front/mid-haul flows.
struct BurstConfig {
  double payload_bits = 1500.0 * 8;  // frame payload
  double frame_bits = 1542.0 * 8;    // frame on the wire
  double interval_s = 31.25e-6;      // burst interval
};

enum class Split { S72, S73 };

struct EffortShares {
  double ru = 0.0;    // processed on the radio unit
  double ducu = 0.0;  // processed at the DU-CU host
};

/// Throws InvalidParameterError when an invariant is violated.
void validate(const SplitParams& p);
void validate(const BurstConfig& b);

/// Low-PHY split uplink/downlink datarate (bit/s): frequency-domain I/Q
/// samples, two quantized dimensions per resource element.
double split72_rate(const SplitParams& p);

/// Post-modulation split datarate (bit/s): layer-mapped constellation bits.
double split73_rate(const SplitParams& p);

/// Baseband processing effort per slot (GOPS/slot).
double rdc_effort(const SplitParams& p);

/// Split the total effort between the RU and the DU-CU host: 40/60 for the
/// low-PHY split, 50/50 for the post-modulation split.
EffortShares split_fraction(double effort, Split split);

/// Number of Ethernet frames needed per burst interval at the given rate.
std::int64_t burst_frames(double rate_bps, const BurstConfig& cfg);

/// Wire throughput of a burst of `frames` full-size frames (bit/s).
double effective_throughput(std::int64_t frames, const BurstConfig& cfg);

/// Raw rate -> burst-framed wire demand.
double framed_demand(double rate_bps, const BurstConfig& cfg);

}  // namespace oran
