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


// Orthogonal multiple access baseline. User k transmits alone during a
// fraction alpha_k of the time, so its average power is
//
//   alpha_k * sigma_k^2 * (2^(rate_min_k / alpha_k) - 1) / g_kk.

#ifndef ICMAC_BASELINE_H_
#define ICMAC_BASELINE_H_

#include <vector>

#include "icmac/model.h"

namespace icmac {

struct OmaSolution {
  std::vector<double> fractions;
  std::vector<double> user_power;
  double total_power = 0.0;
};

// Throws std::invalid_argument for negative fractions or a sum above one,
// and InfeasibleError when a user with a positive requirement gets no time
// or has no direct gain.
OmaSolution oma_min_power(const Scenario& sc,
                          const std::vector<double>& alphas);

// Grid search over {sum alpha = 1} with spacing 1/grid_n, then pairwise
// golden-section refinement. Throws InfeasibleError if every grid point is.
OmaSolution oma_optimize_fractions(const Scenario& sc, int grid_n);

}  // namespace icmac

#endif  // ICMAC_BASELINE_H_
