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

// Precompiled form of one decoding configuration for repeated power-control
// solves. Internal to the library.

#ifndef ICMAC_SRC_FIXED_POINT_PLAN_H_
#define ICMAC_SRC_FIXED_POINT_PLAN_H_

#include <span>
#include <vector>

#include "icmac/minpic.h"
#include "icmac/model.h"

namespace icmac::internal {

class FixedPointPlan {
 public:
  FixedPointPlan(const DecodingConfig& cfg, const Channel& ch);

  // Least fixed point for flat sub-user rate targets; `powers` receives the
  // last iterate (size U^2).
  FixedPointStatus Solve(std::span<const double> targets,
                         const FixedPointOptions& options,
                         std::vector<double>& powers, int* iterations);

 private:
  struct Receiver {
    double noise = 0.0;
    std::vector<int> order;
    std::vector<double> order_gain;
    std::vector<int> undecoded;
    std::vector<double> undecoded_gain;
    std::vector<double> coef;  // (2^r - 1) / g per order position
  };

  int num_users_ = 0;
  double divergence_cap_ = 0.0;
  std::vector<Receiver> receivers_;
  std::vector<double> next_;
};

}  // namespace icmac::internal

#endif  // ICMAC_SRC_FIXED_POINT_PLAN_H_
