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


// Time sharing between decoding configurations. Each vertex is the operating
// point of one configuration at one rate target; a schedule mixes vertices
// so the average rates meet the requirements at least average power.

#ifndef ICMAC_TIMESHARE_H_
#define ICMAC_TIMESHARE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "icmac/minpic.h"
#include "icmac/model.h"

namespace icmac {

struct VertexPoint {
  // Mixed-radix configuration id, or the position in the input list when the
  // id does not fit in 64 bits.
  std::uint64_t config_id = 0;
  std::vector<double> rates;  // per user, bits per use
  double power = 0.0;
  DecodingConfig config;
  PowerAllocation powers;
  RateAllocation allocation;  // per sub-user rates behind `rates`
};

// rate_min first, then for every user k rate_min with entry k scaled by 0.5
// and by 1.5.
std::vector<std::vector<double>> default_rate_targets(
    const std::vector<double>& rate_min);

// One vertex per feasible (config, target) pair, in input order with targets
// varying fastest. Each target is split evenly over the user's sub-users.
std::vector<VertexPoint> build_vertices(
    const Scenario& sc, const std::vector<DecodingConfig>& configs,
    const std::vector<std::vector<double>>& rate_targets,
    const FixedPointOptions& options = {});

// The configurations used by the cli: the solution's configuration followed
// by its local-search neighbours.
std::vector<DecodingConfig> neighbourhood_configs(const DecodingConfig& cfg,
                                                  int num_users);

// Vertex for a solved operating point. `sol` must be feasible.
VertexPoint vertex_from_solution(const Solution& sol);

struct TimeShareSchedule {
  std::vector<double> theta;  // one weight per vertex
  double avg_power = 0.0;
  std::vector<double> avg_rates;
  std::vector<int> basis;  // vertices basic at the optimum
};

// Minimum average power mix meeting rate_min on average. Empty when no mix
// of the vertices meets the requirements.
std::optional<TimeShareSchedule> solve_timeshare_lp(
    const std::vector<VertexPoint>& vertices,
    const std::vector<double>& rate_min);

}  // namespace icmac

#endif  // ICMAC_TIMESHARE_H_
