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

// Minimum sum-power allocation under per-user rate requirements.
//
//   min  sum_{k,j} p[k][j]
//   s.t. R_k >= rate_min[k]                      for every user k
//        (R_{k,j}) inside the partial-MAC region  at every receiver
//
// Three layers:
//  * min_power_fixed: for a fixed decoding configuration and fixed sub-user
//    rate targets, the least power vector meeting every SIC cap. The map
//    p -> max_i (2^r - 1) N_i(p) / g is a standard interference function, so
//    iterating it from zero climbs monotonically to the least fixed point.
//  * minpic_solve: Lagrangian-guided search that never enumerates orders
//    exhaustively. Rate splits are tuned by projected gradient on each user's
//    simplex, duals track the rate deficits, and configurations move by
//    single-stream toggles and adjacent SIC swaps.
//  * brute_force_solve: exhaustive reference over every (decoded set, SIC
//    order) per receiver and a lattice of rate splits.

#ifndef ICMAC_MINPIC_H_
#define ICMAC_MINPIC_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "icmac/model.h"

namespace icmac {

enum class FixedPointStatus {
  kConverged,
  kZeroGain,        // positive target on a link with zero gain
  kDiverged,        // some power exceeded the divergence cap
  kIterationLimit,  // no convergence within max_iterations
  kAborted,         // total power exceeded abort_total_above
};

const char* ToString(FixedPointStatus status);

struct FixedPointOptions {
  int max_iterations = 10'000;
  // Stop once sum |p' - p| <= tolerance * sum p'.
  double tolerance = 1e-10;
  // Divergence cap is divergence_factor * max noise variance.
  double divergence_factor = 1e9;
  // Iterates only grow, so their total is a lower bound on the answer and
  // the solve can stop as soon as it passes this value.
  double abort_total_above = std::numeric_limits<double>::infinity();
  // Called with every iterate, starting with the all-zero vector.
  std::function<void(const PowerAllocation&)> on_iterate;
};

struct FixedPointResult {
  FixedPointStatus status = FixedPointStatus::kIterationLimit;
  PowerAllocation powers;  // last iterate
  int iterations = 0;

  bool converged() const { return status == FixedPointStatus::kConverged; }
};

FixedPointResult min_power_fixed(const DecodingConfig& cfg,
                                 const RateAllocation& targets,
                                 const Channel& ch,
                                 const FixedPointOptions& options = {});

struct DualState {
  std::vector<double> lambda;  // power per bit, one per user
  double step = 0.05;
};

// sum p + sum_k lambda_k (rate_min_k - R_k).
double lagrangian_value(const PowerAllocation& p, const DualState& lam,
                        const RateAllocation& r,
                        const std::vector<double>& rate_min);

// Projected subgradient ascent step on the duals.
DualState dual_update(const DualState& lam, const RateAllocation& r,
                      const std::vector<double>& rate_min);

// Rate split with every user's requirement spread evenly over its
// sub-users. Each row sums to rate_min[k].
RateAllocation uniform_split(const std::vector<double>& rate_min);

// Euclidean projection of `values` onto {x >= 0, sum x = total}.
void project_onto_simplex(std::span<double> values, double total);

// Single-move neighbours of `cfg`: for every receiver, toggling each foreign
// sub-user (a newly decoded stream is tried at every SIC position), then
// swapping every adjacent pair in the order.
std::vector<DecodingConfig> local_moves(const DecodingConfig& cfg,
                                        int num_users);

struct Solution {
  DecodingConfig config;
  PowerAllocation powers;
  RateAllocation rates;
  double total_power = std::numeric_limits<double>::infinity();
  bool feasible = false;
  std::int64_t inner_iterations = 0;  // fixed-point solves performed
  std::int64_t configs_evaluated = 0;
  std::vector<double> lambda;
};

struct MinPicSettings {
  // A move must lower total power by more than this to be accepted; also
  // ends a split optimisation.
  double tol = 1e-7;
  double fd_step = 1e-5;  // bits
  double dual_step = 0.05;
  int max_gradient_steps = 500;
  int max_local_search_passes = 200;
  // Consecutive moves to an equal-power neighbour allowed when no move
  // improves.
  int max_sideways_moves = 1;
  FixedPointOptions fixed_point;
};

Solution minpic_solve(const Scenario& sc, const MinPicSettings& settings = {});

// Configurations the brute-force solver will visit; throws SizeLimitError
// above kBruteForceConfigLimit.
inline constexpr std::uint64_t kBruteForceConfigLimit = 10'000'000;
std::uint64_t brute_force_config_count(int num_users);

struct BruteForceSettings {
  int split_grid = 32;
  // Configurations whose best lattice split is within this relative margin
  // of the overall best get a continuous split refinement.
  double polish_margin = 0.02;
  FixedPointOptions fixed_point;
};

Solution brute_force_solve(const Scenario& sc,
                           const BruteForceSettings& settings = {});

}  // namespace icmac

#endif  // ICMAC_MINPIC_H_
