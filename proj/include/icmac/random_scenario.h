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

// Seeded scenario generator. The generator is a plain 64-bit LCG so that the
// same seed produces the same scenario on any platform:
//
//   x <- 6364136223846793005 * x + 1442695040888963407   (mod 2^64)
//   u  = (x >> 11) * 2^-53                                in [0, 1)
//
// The state starts at the seed and is advanced once before the first draw.

#ifndef ICMAC_RANDOM_SCENARIO_H_
#define ICMAC_RANDOM_SCENARIO_H_

#include <cstdint>

#include "icmac/model.h"

namespace icmac {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextU64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

 private:
  std::uint64_t state_;
};

// Draws, in this order: the gain matrix row by row (direct gains in
// [0.5, 2], cross gains in [0.05, 1.5]), the noise variances in [0.5, 1.5]
// and the rate requirements in [0.25, 1.5] bits. No bandwidth or budget.
Scenario random_scenario(std::uint64_t seed, int num_users);

}  // namespace icmac

#endif  // ICMAC_RANDOM_SCENARIO_H_
