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


// Derivative-free refinement of a rate split. Internal to the library.

#ifndef ICMAC_SRC_SPLIT_POLISH_H_
#define ICMAC_SRC_SPLIT_POLISH_H_

#include <functional>
#include <span>
#include <vector>

namespace icmac::internal {

// Compass search over flat splits (row k = user k). A move shifts rate from
// one component of a user to another; up to two users move at once so that
// ridges where two receivers bind the same stream can still be followed.
// `total` must return +inf for infeasible splits. Improves `split` and
// `value` in place.
void PolishSplit(const std::vector<double>& rate_min, double initial_step,
                 const std::function<double(std::span<const double>)>& total,
                 std::vector<double>& split, double& value);

}  // namespace icmac::internal

#endif  // ICMAC_SRC_SPLIT_POLISH_H_
