// Copyright 2026 The icmac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "icmac/decoding.h"
#include "icmac/minpic.h"
#include "icmac/random_scenario.h"
#include "icmac/region.h"
#include "oracles.h"

namespace icmac {
namespace {

TEST(MinPowerFixed, SingleUser) {
  const Channel ch = Channel::FromRows({{1.0}}, {1.0});
  RateAllocation t(1);
  t(0, 0) = 2.0;
  const FixedPointResult r = min_power_fixed(own_only_config(ch), t, ch);
  ASSERT_TRUE(r.converged());
  EXPECT_NEAR(r.powers(0, 0), 3.0, 1e-9);
}

TEST(MinPowerFixed, DecoupledUsers) {
  const Channel ch = Channel::FromRows({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0});
  RateAllocation t(2);
  t(0, 0) = 1.0;
  t(1, 1) = 1.0;
  const FixedPointResult r = min_power_fixed(own_only_config(ch), t, ch);
  ASSERT_TRUE(r.converged());
  EXPECT_NEAR(r.powers(0, 0), 1.0, 1e-9);
  EXPECT_NEAR(r.powers(1, 1), 1.0, 1e-9);
  EXPECT_NEAR(r.powers.total(), 2.0, 1e-9);
}

TEST(MinPowerFixed, ZeroGainIsInfeasible) {
  const Channel ch = Channel::FromRows({{0.0}}, {1.0});
  RateAllocation t(1);
  t(0, 0) = 1.0;
  EXPECT_EQ(min_power_fixed(own_only_config(ch), t, ch).status,
            FixedPointStatus::kZeroGain);
  t(0, 0) = 0.0;
  EXPECT_TRUE(min_power_fixed(own_only_config(ch), t, ch).converged());
}

TEST(MinPowerFixed, DivergesWhenInterferenceTooStrong) {
  // Both users need 3 bits against a cross gain equal to the direct gain.
  const Channel ch = Channel::FromRows({{1.0, 1.0}, {1.0, 1.0}}, {1.0, 1.0});
  RateAllocation t(2);
  t(0, 0) = 3.0;
  t(1, 1) = 3.0;
  EXPECT_EQ(min_power_fixed(own_only_config(ch), t, ch).status,
            FixedPointStatus::kDiverged);
}

TEST(MinPowerFixed, RejectsNegativeTargets) {
  const Channel ch = Channel::FromRows({{1.0}}, {1.0});
  RateAllocation t(1);
  t(0, 0) = -1.0;
  EXPECT_THROW(min_power_fixed(own_only_config(ch), t, ch),
               std::invalid_argument);
}

TEST(MinPowerFixed, MatchesLinearSolveOnOwnOnlyConfigs) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Scenario sc = random_scenario(seed, 2);
    Lcg rng(seed + 1000);
    DecodingConfig cfg = own_only_config(sc.channel);
    if (rng.Uniform() < 0.5) std::swap(cfg.receivers[0].order[0], cfg.receivers[0].order[1]);
    if (rng.Uniform() < 0.5) std::swap(cfg.receivers[1].order[0], cfg.receivers[1].order[1]);
    RateAllocation t(2);
    for (double& v : t.values()) v = rng.Uniform(0.0, 0.8);
    FixedPointOptions options;
    options.tolerance = 1e-14;
    options.max_iterations = 100000;
    const FixedPointResult r = min_power_fixed(cfg, t, sc.channel, options);
    const auto oracle = testing::linear_solve_power(cfg, t, sc.channel);
    if (!r.converged()) {
      EXPECT_FALSE(oracle.has_value()) << "seed " << seed;
      continue;
    }
    ASSERT_TRUE(oracle.has_value()) << "seed " << seed;
    for (int f = 0; f < 4; ++f) {
      EXPECT_NEAR(r.powers.flat(f), oracle->flat(f), 1e-8) << "seed " << seed;
    }
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(MinPowerFixed, IteratesAreMonotone) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Scenario sc = random_scenario(seed, 2);
    Lcg rng(seed);
    const DecodingConfig cfg =
        config_from_id(rng.NextU64() % config_count(2), 2);
    RateAllocation t(2);
    for (double& v : t.values()) v = rng.Uniform(0.0, 0.6);
    PowerAllocation previous;
    bool monotone = true;
    FixedPointOptions options;
    options.on_iterate = [&](const PowerAllocation& p) {
      if (previous.num_users() == 2) {
        for (int f = 0; f < 4; ++f) {
          if (p.flat(f) < previous.flat(f)) monotone = false;
        }
      }
      previous = p;
    };
    min_power_fixed(cfg, t, sc.channel, options);
    EXPECT_TRUE(monotone) << "seed " << seed;
  }
}

TEST(MinPowerFixed, ResultMeetsCapsExactly) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scenario sc = random_scenario(seed, 2);
    Lcg rng(seed + 77);
    const DecodingConfig cfg =
        config_from_id(rng.NextU64() % config_count(2), 2);
    RateAllocation t(2);
    for (double& v : t.values()) v = rng.Uniform(0.0, 0.5);
    FixedPointOptions options;
    options.tolerance = 1e-13;
    const FixedPointResult r = min_power_fixed(cfg, t, sc.channel, options);
    if (!r.converged()) continue;
    EXPECT_TRUE(ic_membership(t, r.powers, sc.channel, 1e-8));
    // Each positive-target stream is tight at some receiver.
    const SicCaps caps = sic_caps(cfg, r.powers, sc.channel);
    RateAllocation tightest(2, INFINITY);
    for (const auto& rx : caps) {
      for (const DecodedCap& c : rx) {
        tightest[c.sub_user] = std::min(tightest[c.sub_user], c.bits);
      }
    }
    for (int f = 0; f < 4; ++f) {
      if (t.flat(f) > 0.0) EXPECT_NEAR(tightest.flat(f), t.flat(f), 1e-8);
    }
  }
}

TEST(MinPowerFixed, AbortIsExactLowerBound) {
  const Scenario sc = random_scenario(2, 2);
  const DecodingConfig cfg = own_only_config(sc.channel);
  const RateAllocation t = uniform_split(sc.rate_min);
  const FixedPointResult full = min_power_fixed(cfg, t, sc.channel);
  ASSERT_TRUE(full.converged());
  FixedPointOptions options;
  options.abort_total_above = 0.5 * full.powers.total();
  EXPECT_EQ(min_power_fixed(cfg, t, sc.channel, options).status,
            FixedPointStatus::kAborted);
  options.abort_total_above = full.powers.total() * (1 + 1e-9);
  EXPECT_TRUE(min_power_fixed(cfg, t, sc.channel, options).converged());
}

TEST(FixedPointStatus, Names) {
  EXPECT_STREQ(ToString(FixedPointStatus::kConverged), "converged");
  EXPECT_STREQ(ToString(FixedPointStatus::kDiverged), "diverged");
}

}  // namespace
}  // namespace icmac
