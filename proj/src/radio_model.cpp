#include "oran/radio_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oran/errors.hpp"

namespace oran {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameterError("invalid-parameter: " + what);
}

}  // namespace

void validate(const SplitParams& p) {
  require(p.n_ports >= 1, "n_ports >= 1");
  require(p.n_layers >= 1, "n_layers >= 1");
  require(p.n_rb >= 1, "n_rb >= 1");
  require(p.sc_per_rb >= 1, "sc_per_rb >= 1");
  require(p.sym_per_subframe >= 1, "sym_per_subframe >= 1");
  require(p.subframe_s > 0.0, "subframe_s > 0");
  require(p.utilization > 0.0 && p.utilization <= 1.0, "utilization in (0, 1]");
  require(p.quantizer_bits >= 1, "quantizer_bits >= 1");
  require(p.overhead >= 1.0, "overhead >= 1");
  require(p.resource_overhead >= 0.0 && p.resource_overhead < 1.0,
          "resource_overhead in [0, 1)");
  require(p.mod_order == 4 || p.mod_order == 16 || p.mod_order == 64 ||
              p.mod_order == 256,
          "mod_order in {4, 16, 64, 256}");
  require(p.n_antennas >= 1, "n_antennas >= 1");
  require(p.mod_bits >= 0.0, "mod_bits >= 0");
  require(p.code_rate >= 0.0 && p.code_rate <= 1.0, "code_rate in [0, 1]");
}

void validate(const BurstConfig& b) {
  require(b.payload_bits > 0.0, "payload_bits > 0");
  require(b.frame_bits >= b.payload_bits, "frame_bits >= payload_bits");
  require(b.interval_s > 0.0, "interval_s > 0");
}

double split72_rate(const SplitParams& p) {
  validate(p);
  return static_cast<double>(p.n_ports) * p.n_rb * p.sc_per_rb *
         p.sym_per_subframe / p.subframe_s * p.utilization *
         p.quantizer_bits * 2.0 * p.overhead;
}

double split73_rate(const SplitParams& p) {
  validate(p);
  return static_cast<double>(p.n_layers) * p.n_rb * p.sc_per_rb *
         p.sym_per_subframe / p.subframe_s * p.utilization *
         (1.0 - p.resource_overhead) * p.quantizer_bits *
         std::log2(static_cast<double>(p.mod_order)) * p.overhead;
}

double rdc_effort(const SplitParams& p) {
  validate(p);
  const double a = static_cast<double>(p.n_antennas);
  return (3.0 * a + a * a + p.mod_bits * p.code_rate * p.n_layers / 3.0) *
         p.n_rb / 5.0;
}

EffortShares split_fraction(double effort, Split split) {
  const double ru_part = (split == Split::S72) ? 0.40 : 0.50;
  return EffortShares{ru_part * effort, effort - ru_part * effort};
}

std::int64_t burst_frames(double rate_bps, const BurstConfig& cfg) {
  validate(cfg);
  if (rate_bps <= 0.0) return 0;
  const double x = rate_bps * cfg.interval_s / cfg.payload_bits;
  // Guard against float dust pushing an exact integer over the ceiling.
  const auto frames = static_cast<std::int64_t>(std::ceil(x - 1e-12));
  return std::max<std::int64_t>(1, frames);
}

double effective_throughput(std::int64_t frames, const BurstConfig& cfg) {
  validate(cfg);
  if (frames < 0) throw InvalidParameterError("invalid-parameter: frames >= 0");
  return static_cast<double>(frames) * cfg.frame_bits / cfg.interval_s;
}

double framed_demand(double rate_bps, const BurstConfig& cfg) {
  return effective_throughput(burst_frames(rate_bps, cfg), cfg);
}

}  // namespace oran
