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

// Partial-MAC achievable region of the interference channel.
//
// Receiver i must decode its own U sub-users and may additionally decode any
// subset of foreign ones; the rest is noise. For a decoded set A the region
// at receiver i is the polytope
//
//   sum_{s in S} R_s <= log2(1 + sum_{s in S} g[i][s.user] p_s / N_i(A))
//
// for every S subset of A that meets Own_i, where N_i(A) is the noise plus
// the power of every stream outside A. Subsets made only of foreign streams
// carry no constraint. The receiver region is the union over A, and the
// channel region is the intersection over receivers.

#ifndef ICMAC_REGION_H_
#define ICMAC_REGION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "icmac/model.h"

namespace icmac {

struct RateConstraint {
  int receiver = 0;
  SubUserMask subset = 0;
  double rhs = 0.0;  // bits per channel use
};

struct PartialMacPolytope {
  int receiver = 0;
  SubUserMask decoded = 0;
  std::vector<RateConstraint> constraints;
};

// All decoded sets A with Own_i <= A <= all sub-users, in increasing mask
// order. There are 2^(U^2 - U) of them. Throws SizeLimitError for U > 4.
std::vector<SubUserMask> enumerate_decoded_sets(int receiver, int num_users);

// One constraint per subset of `decoded` meeting Own_i, subsets in
// increasing mask order.
PartialMacPolytope partial_mac_constraints(int receiver, SubUserMask decoded,
                                           const PowerAllocation& p,
                                           const Channel& ch);

// U (2^(U^2) - 2^(U^2 - U)): the constraint total over all receivers at full
// decoded sets. Throws std::overflow_error for U > 5.
std::uint64_t constraint_count(int num_users);

struct MembershipResult {
  bool member = false;
  // First decoded set (enumeration order) whose polytope holds the rates.
  std::optional<SubUserMask> witness;
};

MembershipResult receiver_membership(int receiver, const RateAllocation& r,
                                     const PowerAllocation& p,
                                     const Channel& ch,
                                     double tol = kDefaultRateTolerance);

bool ic_membership(const RateAllocation& r, const PowerAllocation& p,
                   const Channel& ch, double tol = kDefaultRateTolerance);

struct BoundaryPoint {
  double r1 = 0.0;
  double r2 = 0.0;
  std::uint64_t config_id = 0;
  PowerAllocation powers;
  RateAllocation rates;
};

// Upper-right convex hull of two-user operating points, sorted by r1.
struct BoundarySample {
  std::vector<BoundaryPoint> points;
};

// Sweeps the simplex of sub-user power splits (resolution total_power /
// grid_n) and every decoding configuration, collects the user rate pairs
// given by the SIC caps, and returns their time-sharing closure.
BoundarySample boundary_scan_2user(const Channel& ch, double total_power,
                                   int grid_n);

}  // namespace icmac

#endif  // ICMAC_REGION_H_
