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


#include "split_polish.h"

#include <algorithm>

namespace icmac::internal {

namespace {

constexpr int kMaxSweeps = 2000;

struct Transfer {
  int user;
  int from;
  int to;
};

}  // namespace

void PolishSplit(const std::vector<double>& rate_min, double initial_step,
                 const std::function<double(std::span<const double>)>& total,
                 std::vector<double>& split, double& value) {
  const int n = static_cast<int>(rate_min.size());
  if (n == 1) return;
  std::vector<Transfer> single;
  for (int k = 0; k < n; ++k) {
    if (rate_min[static_cast<std::size_t>(k)] <= 0.0) continue;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) single.push_back({k, a, b});
      }
    }
  }
  std::vector<std::vector<Transfer>> moves;
  for (const Transfer& t : single) moves.push_back({t});
  for (std::size_t x = 0; x < single.size(); ++x) {
    for (std::size_t y = x + 1; y < single.size(); ++y) {
      if (single[x].user != single[y].user) {
        moves.push_back({single[x], single[y]});
      }
    }
  }
  if (moves.empty()) return;

  const double max_rate = *std::max_element(rate_min.begin(), rate_min.end());
  double step = initial_step;
  std::vector<double> cand;
  int sweeps = 0;
  while (step > 1e-10 * max_rate && ++sweeps <= kMaxSweeps) {
    bool moved = false;
    for (const auto& move : moves) {
      cand = split;
      bool valid = true;
      for (const Transfer& t : move) {
        const std::size_t a = static_cast<std::size_t>(t.user * n + t.from);
        const std::size_t b = static_cast<std::size_t>(t.user * n + t.to);
        const double shift = std::min(step, cand[a]);
        if (shift <= 0.0) valid = false;
        cand[a] -= shift;
        cand[b] += shift;
      }
      if (!valid) continue;
      const double v = total(cand);
      if (v < value - 1e-14 * value) {
        value = v;
        split.swap(cand);
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
}

}  // namespace icmac::internal
