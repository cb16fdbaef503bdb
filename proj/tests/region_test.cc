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

#include <bit>
#include <cmath>

#include "icmac/random_scenario.h"
#include "icmac/region.h"
#include "oracles.h"

namespace icmac {
namespace {

TEST(ConstraintCount, ClosedForm) {
  EXPECT_EQ(constraint_count(1), 1u);
  EXPECT_EQ(constraint_count(2), 24u);
  EXPECT_EQ(constraint_count(3), 1344u);
  EXPECT_THROW(constraint_count(6), std::overflow_error);
}

TEST(DecodedSets, EnumerationShape) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < n; ++i) {
      const auto sets = enumerate_decoded_sets(i, n);
      EXPECT_EQ(sets.size(), std::size_t{1} << (n * n - n));
      for (std::size_t t = 0; t < sets.size(); ++t) {
        EXPECT_EQ(sets[t] & own_mask(i, n), own_mask(i, n));
        if (t > 0) {
          EXPECT_LT(sets[t - 1], sets[t]);
        }
      }
    }
  }
  EXPECT_THROW(enumerate_decoded_sets(0, 5), SizeLimitError);
}

TEST(PartialMac, SubsetCountPerDecodedSet) {
  const Scenario sc = random_scenario(3, 3);
  for (int n : {2, 3}) {
    const Channel ch = n == 3 ? sc.channel : random_scenario(3, 2).channel;
    PowerAllocation pn(n, 1.0);
    for (int i = 0; i < n; ++i) {
      for (SubUserMask a : enumerate_decoded_sets(i, n)) {
        const auto poly = partial_mac_constraints(i, a, pn, ch);
        const int size = std::popcount(a);
        EXPECT_EQ(poly.constraints.size(),
                  (std::size_t{1} << size) - (std::size_t{1} << (size - n)));
        for (const RateConstraint& c : poly.constraints) {
          EXPECT_NE(c.subset & own_mask(i, n), 0u);
          EXPECT_EQ(c.subset & ~a, 0u);
        }
      }
    }
  }
}

TEST(PartialMac, RightHandSides) {
  const Channel ch = Channel::FromRows({{1.0, 0.5}, {0.3, 2.0}}, {1.0, 0.5});
  PowerAllocation p(2);
  p(0, 0) = 1.0;
  p(0, 1) = 0.5;
  p(1, 0) = 2.0;
  p(1, 1) = 0.25;
  const SubUserMask a = 0b0111;  // own pair plus (1,0)
  const auto poly = partial_mac_constraints(0, a, p, ch);
  const double noise = 1.0 + 0.5 * 0.25;
  for (const RateConstraint& c : poly.constraints) {
    double signal = 0.0;
    for (int f = 0; f < 4; ++f) {
      if ((c.subset >> f) & 1U) signal += ch.gain(0, f / 2) * p.flat(f);
    }
    EXPECT_NEAR(c.rhs, std::log2(1.0 + signal / noise), 1e-14);
  }
  EXPECT_THROW(partial_mac_constraints(0, 0b0101, p, ch),
               std::invalid_argument);
}

TEST(Membership, SingleUser) {
  const Channel ch = Channel::FromRows({{1.0}}, {1.0});
  PowerAllocation p(1);
  p(0, 0) = 3.0;
  RateAllocation r(1);
  r(0, 0) = 2.0;
  EXPECT_TRUE(ic_membership(r, p, ch));
  r(0, 0) = 2.0 + 1e-6;
  EXPECT_FALSE(ic_membership(r, p, ch));
}

TEST(Membership, WitnessIsOwnSetWhenEnough) {
  const Channel ch = Channel::FromRows({{1.0, 0.1}, {0.1, 1.0}}, {1.0, 1.0});
  PowerAllocation p(2, 1.0);
  RateAllocation r(2, 0.01);
  const MembershipResult m = receiver_membership(0, r, p, ch);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(*m.witness, own_mask(0, 2));
}

TEST(Membership, AgreesWithSicEnumeration) {
  int members = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Channel ch = random_scenario(seed, 2).channel;
    for (std::uint64_t t = 0; t < 30; ++t) {
      const testing::RateSample s = testing::sample_rates(seed * 1000 + t, ch);
      const bool expected =
          testing::sic_enumeration_member(s.rates, s.powers, ch, 1e-9);
      EXPECT_EQ(ic_membership(s.rates, s.powers, ch, 1e-9), expected)
          << "seed " << seed << " sample " << t;
      members += expected;
      ++total;
    }
  }
  // Both outcomes must be exercised.
  EXPECT_GT(members, 0);
  EXPECT_LT(members, total);
}

TEST(Boundary, DegenerateMacCorners) {
  const Channel ch = Channel::FromRows({{1.0, 1.0}, {1.0, 1.0}}, {1.0, 1.0});
  const BoundarySample b = boundary_scan_2user(ch, 3.0, 24);
  ASSERT_FALSE(b.points.empty());
  bool corner1 = false;
  bool corner2 = false;
  for (const BoundaryPoint& p : b.points) {
    EXPECT_LE(p.r1 + p.r2, 2.0 + 1e-9);
    corner1 |= std::abs(p.r1 - 2.0) < 1e-6 && std::abs(p.r2) < 1e-6;
    corner2 |= std::abs(p.r2 - 2.0) < 1e-6 && std::abs(p.r1) < 1e-6;
    EXPECT_NEAR(p.powers.total(), 3.0, 1e-9);
    EXPECT_TRUE(ic_membership(p.rates, p.powers, ch, 1e-9));
    const auto rates = user_rates(p.rates);
    EXPECT_NEAR(rates[0], p.r1, 1e-12);
    EXPECT_NEAR(rates[1], p.r2, 1e-12);
  }
  EXPECT_TRUE(corner1);
  EXPECT_TRUE(corner2);
}

TEST(Boundary, ParetoOrdered) {
  const Channel ch = random_scenario(5, 2).channel;
  const BoundarySample b = boundary_scan_2user(ch, 4.0, 12);
  ASSERT_GE(b.points.size(), 2u);
  for (std::size_t t = 1; t < b.points.size(); ++t) {
    EXPECT_GT(b.points[t].r1, b.points[t - 1].r1);
    EXPECT_LT(b.points[t].r2, b.points[t - 1].r2);
  }
}

TEST(Boundary, Preconditions) {
  const Channel ch = Channel::FromRows({{1.0, 1.0}, {1.0, 1.0}}, {1.0, 1.0});
  const BoundarySample zero = boundary_scan_2user(ch, 0.0, 8);
  ASSERT_EQ(zero.points.size(), 1u);
  EXPECT_EQ(zero.points[0].r1, 0.0);
  EXPECT_THROW(boundary_scan_2user(ch, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(boundary_scan_2user(Channel::FromRows({{1.0}}, {1.0}), 1.0, 8),
               std::invalid_argument);
}

}  // namespace
}  // namespace icmac
