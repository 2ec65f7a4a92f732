#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oran/errors.hpp"
#include "oran/radio_model.hpp"
#include "oran/rng.hpp"
#include "oran/scenario.hpp"

using namespace oran;

namespace {

SplitParams reference_params() {
  SplitParams p;
  p.n_ports = 2;
  p.n_layers = 2;
  p.n_rb = 270;
  p.sc_per_rb = 12;
  p.sym_per_subframe = 14;
  p.subframe_s = 1e-3;
  p.utilization = 1.0;
  p.quantizer_bits = 1;
  p.overhead = 1.0;
  p.resource_overhead = 0.0;
  p.mod_order = 64;
  p.n_antennas = 2;
  p.mod_bits = 6.0;
  p.code_rate = 0.64;
  return p;
}

}  // namespace

TEST_CASE("low-PHY split rate matches the closed form") {
  SplitParams p = reference_params();
  p.quantizer_bits = 7;
  p.overhead = 1.3;
  // 2*270*12*14*1000 * 1 * 7 * 2 * 1.3 = 1.8144e8 * 7 * 1.3
  CHECK(split72_rate(p) == doctest::Approx(1.8144e8 * 7 * 1.3).epsilon(1e-12));
}

TEST_CASE("zero utilization is rejected") {
  SplitParams p = reference_params();
  p.utilization = 0.0;
  CHECK_THROWS_AS(split72_rate(p), InvalidParameterError);
}

TEST_CASE("calibrated uplink reproduces the 2.304 Gbps point within 2%") {
  const ScenarioConfig cfg = default_config();
  const double rate = split72_rate(cfg.radio.uplink);
  CHECK(std::abs(rate - 2.304e9) / 2.304e9 < 0.02);
}

TEST_CASE("full resource overhead is rejected") {
  SplitParams p = reference_params();
  p.resource_overhead = 1.0;
  CHECK_THROWS_AS(split73_rate(p), InvalidParameterError);
}

TEST_CASE("post-modulation rate is linear in the layer count") {
  SplitParams p = reference_params();
  const double base = split73_rate(p);
  p.n_layers *= 2;
  CHECK(split73_rate(p) == doctest::Approx(2.0 * base).epsilon(1e-12));
}

TEST_CASE("calibrated downlink reproduces the 0.432 Gbps point within 2%") {
  const ScenarioConfig cfg = default_config();
  const double rate = split73_rate(cfg.radio.downlink);
  CHECK(std::abs(rate - 0.432e9) / 0.432e9 < 0.02);
}

TEST_CASE("processing effort matches the closed form") {
  SplitParams p = reference_params();
  // (3*2 + 4 + (1/3)*6*0.64*2) * 270/5 = (10 + 2.56) * 54
  CHECK(rdc_effort(p) == doctest::Approx(678.24).epsilon(1e-12));
}

TEST_CASE("effort with one antenna and no coding term") {
  SplitParams p = reference_params();
  p.n_antennas = 1;
  p.mod_bits = 0.0;
  CHECK(rdc_effort(p) == doctest::Approx(4.0 * p.n_rb / 5.0).epsilon(1e-12));
}

TEST_CASE("calibrated effort lands near 550 GOPS/slot within 10%") {
  const ScenarioConfig cfg = default_config();
  const double effort = rdc_effort(cfg.radio.effort);
  CHECK(std::abs(effort - 550.0) / 550.0 < 0.10);
}

TEST_CASE("effort split between RU and DU-CU host") {
  const EffortShares s72 = split_fraction(550.0, Split::S72);
  CHECK(s72.ru == doctest::Approx(220.0));
  CHECK(s72.ducu == doctest::Approx(330.0));
  const EffortShares zero = split_fraction(0.0, Split::S73);
  CHECK(zero.ru == 0.0);
  CHECK(zero.ducu == 0.0);
  const EffortShares s73 = split_fraction(100.0, Split::S73);
  CHECK(s73.ru == doctest::Approx(50.0));
  CHECK(s73.ducu == doctest::Approx(50.0));
}

TEST_CASE("split shares always sum back to the input effort") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double effort = rng.uniform(0.0, 2000.0);
    for (Split s : {Split::S72, Split::S73}) {
      const EffortShares sh = split_fraction(effort, s);
      CHECK(sh.ru + sh.ducu == doctest::Approx(effort).epsilon(1e-12));
    }
  }
}

TEST_CASE("burst frame count") {
  BurstConfig cfg;
  cfg.payload_bits = 12000;
  cfg.frame_bits = 12336;
  cfg.interval_s = 31.25e-6;
  CHECK(burst_frames(2.304e9, cfg) == 6);  // ceil(72000/12000)
  CHECK(burst_frames(0.0, cfg) == 0);
  CHECK(burst_frames(1.0, cfg) == 1);
}

TEST_CASE("burst throughput on the wire") {
  BurstConfig cfg;
  cfg.payload_bits = 12000;
  cfg.frame_bits = 12336;
  cfg.interval_s = 31.25e-6;
  CHECK(effective_throughput(6, cfg) == doctest::Approx(2.368512e9).epsilon(1e-12));
  CHECK(effective_throughput(0, cfg) == 0.0);
}

TEST_CASE("framing never shrinks the demand") {
  BurstConfig cfg;  // defaults have frame >= payload
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const double rate = rng.uniform(1.0, 6e9);
    CHECK(framed_demand(rate, cfg) >= rate);
  }
}

TEST_CASE("burst frame count is monotone in the rate") {
  BurstConfig cfg;
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.0, 5e9);
    const double b = a + rng.uniform(0.0, 1e9);
    CHECK(burst_frames(a, cfg) <= burst_frames(b, cfg));
  }
}

TEST_CASE("rates are linear in each multiplicative factor") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    SplitParams p = reference_params();
    p.quantizer_bits = 1 + static_cast<int>(rng.below(16));
    p.overhead = rng.uniform(1.0, 1.5);
    p.utilization = rng.uniform(0.1, 1.0);
    const double r72 = split72_rate(p);
    const double r73 = split73_rate(p);
    SplitParams q = p;
    q.n_rb *= 3;
    CHECK(split72_rate(q) == doctest::Approx(3.0 * r72).epsilon(1e-12));
    CHECK(split73_rate(q) == doctest::Approx(3.0 * r73).epsilon(1e-12));
    q = p;
    q.overhead = p.overhead * 1.25;
    CHECK(split72_rate(q) == doctest::Approx(1.25 * r72).epsilon(1e-12));
    q = p;
    q.utilization = p.utilization / 2;
    CHECK(split73_rate(q) == doctest::Approx(0.5 * r73).epsilon(1e-12));
  }
}
