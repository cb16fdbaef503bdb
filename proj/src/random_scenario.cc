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


#include "icmac/random_scenario.h"

#include <stdexcept>

namespace icmac {

Scenario random_scenario(std::uint64_t seed, int num_users) {
  if (num_users < 1 || num_users > kMaxUsers) {
    throw std::invalid_argument("num_users out of range");
  }
  const int n = num_users;
  Lcg rng(seed);
  std::vector<double> gain(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      gain[static_cast<std::size_t>(i * n + k)] =
          i == k ? rng.Uniform(0.5, 2.0) : rng.Uniform(0.05, 1.5);
    }
  }
  std::vector<double> noise(static_cast<std::size_t>(n));
  for (double& v : noise) v = rng.Uniform(0.5, 1.5);
  Scenario sc;
  sc.channel = Channel(n, std::move(gain), std::move(noise));
  sc.rate_min.resize(static_cast<std::size_t>(n));
  for (double& r : sc.rate_min) r = rng.Uniform(0.25, 1.5);
  return sc;
}

}  // namespace icmac
