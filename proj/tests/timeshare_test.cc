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
#include "icmac/timeshare.h"
#include "oracles.h"

namespace icmac {
namespace {

VertexPoint Vertex(std::vector<double> rates, double power) {
  VertexPoint v;
  v.rates = std::move(rates);
  v.power = power;
  return v;
}

TEST(TimeShare, SymmetricPair) {
  const auto s = solve_timeshare_lp({Vertex({2, 0}, 3), Vertex({0, 2}, 3)},
                                    {1.0, 1.0});
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR(s->theta[0], 0.5, 1e-12);
  EXPECT_NEAR(s->theta[1], 0.5, 1e-12);
  EXPECT_NEAR(s->avg_power, 3.0, 1e-12);
  EXPECT_NEAR(s->avg_rates[0], 1.0, 1e-12);
}

TEST(TimeShare, AsymmetricPair) {
  const auto s = solve_timeshare_lp({Vertex({2, 0}, 2), Vertex({0, 2}, 4)},
                                    {1.0, 1.0});
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR(s->theta[0], 0.5, 1e-12);
  EXPECT_NEAR(s->theta[1], 0.5, 1e-12);
  EXPECT_NEAR(s->avg_power, 3.0, 1e-12);
}

TEST(TimeShare, SingleMeetingVertex) {
  const auto s = solve_timeshare_lp(
      {Vertex({0.5, 0.5}, 6), Vertex({1.2, 1.1}, 5), Vertex({3, 0}, 9)},
      {1.0, 1.0});
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR(s->theta[1], 1.0, 1e-12);
  EXPECT_NEAR(s->avg_power, 5.0, 1e-12);
  EXPECT_EQ(s->basis, (std::vector<int>{1}));
}

TEST(TimeShare, InfeasibleAndEmpty) {
  EXPECT_FALSE(solve_timeshare_lp({Vertex({0.5, 0.5}, 1)}, {1.0, 1.0}));
  EXPECT_THROW(solve_timeshare_lp({}, {1.0}), std::invalid_argument);
  EXPECT_THROW(solve_timeshare_lp({Vertex({1.0}, 1)}, {1.0, 1.0}),
               std::invalid_argument);
}

TEST(TimeShare, MatchesBasisEnumeration) {
  Lcg rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VertexPoint> vs;
    const int count = 2 + static_cast<int>(rng.NextU64() % 6);
    for (int v = 0; v < count; ++v) {
      vs.push_back(Vertex({rng.Uniform(0, 2), rng.Uniform(0, 2)},
                          rng.Uniform(0.5, 5)));
    }
    const std::vector<double> need = {rng.Uniform(0, 1.2), rng.Uniform(0, 1.2)};
    const auto lp = solve_timeshare_lp(vs, need);
    const auto oracle = testing::timeshare_by_enumeration(vs, need);
    ASSERT_EQ(lp.has_value(), oracle.has_value()) << "trial " << trial;
    if (!lp) continue;
    EXPECT_NEAR(lp->avg_power, *oracle, 1e-9) << "trial " << trial;
    double sum = 0.0;
    for (double t : lp->theta) {
      EXPECT_GE(t, 0.0);
      sum += t;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_LE(lp->basis.size(), 3u);
  }
}

TEST(BuildVertices, SingleUser) {
  Scenario sc;
  sc.channel = Channel::FromRows({{1.0}}, {1.0});
  sc.rate_min = {2.0};
  const auto vs = build_vertices(sc, {own_only_config(sc.channel)}, {{2.0}});
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_NEAR(vs[0].power, 3.0, 1e-8);
  EXPECT_EQ(vs[0].rates, (std::vector<double>{2.0}));
  EXPECT_EQ(vs[0].config_id, 0u);
}

TEST(BuildVertices, InfeasibleTargetsGiveNothing) {
  Scenario sc;
  sc.channel = Channel::FromRows({{0.0}}, {1.0});
  sc.rate_min = {1.0};
  EXPECT_TRUE(build_vertices(sc, {own_only_config(sc.channel)}, {{1.0}}).empty());
}

TEST(BuildVertices, DecoupledClosedForm) {
  Scenario sc;
  sc.channel = Channel::FromRows({{1.0, 0.0}, {0.0, 2.0}}, {1.0, 0.5});
  sc.rate_min = {1.0, 2.0};
  const auto targets = default_rate_targets(sc.rate_min);
  ASSERT_EQ(targets.size(), 5u);
  const auto vs = build_vertices(sc, {own_only_config(sc.channel)}, targets);
  ASSERT_EQ(vs.size(), 5u);
  for (const VertexPoint& v : vs) {
    // Each user splits its rate evenly over two streams decoded with SIC;
    // the pair costs (2^R - 1) sigma^2 / g, like a single stream.
    const double p1 = std::exp2(v.rates[0]) - 1.0;
    const double p2 = (std::exp2(v.rates[1]) - 1.0) * 0.5 / 2.0;
    EXPECT_NEAR(v.power, p1 + p2, 1e-8);
  }
}

TEST(Neighbourhood, StartsWithConfig) {
  const DecodingConfig cfg = config_from_id(100, 2);
  const auto configs = neighbourhood_configs(cfg, 2);
  EXPECT_EQ(configs.front(), cfg);
  EXPECT_EQ(configs.size(), 1 + local_moves(cfg, 2).size());
}

TEST(TimeShare, NeverWorseThanBestVertex) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Scenario sc = random_scenario(seed, 2);
    const Solution sol = minpic_solve(sc);
    if (!sol.feasible) continue;
    auto vs = build_vertices(sc, neighbourhood_configs(sol.config, 2),
                             default_rate_targets(sc.rate_min));
    vs.push_back(vertex_from_solution(sol));
    double best = INFINITY;
    for (const VertexPoint& v : vs) {
      if (v.rates[0] >= sc.rate_min[0] - 1e-12 &&
          v.rates[1] >= sc.rate_min[1] - 1e-12) {
        best = std::min(best, v.power);
      }
    }
    const auto s = solve_timeshare_lp(vs, sc.rate_min);
    ASSERT_TRUE(s.has_value());
    EXPECT_LE(s->avg_power, best + 1e-9);
    EXPECT_LE(s->avg_power, sol.total_power + 1e-9);
  }
}

}  // namespace
}  // namespace icmac
