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

#include <algorithm>
#include <cmath>

#include "fixed_point_plan.h"
#include "icmac/minpic.h"

namespace icmac {

const char* ToString(FixedPointStatus status) {
  switch (status) {
    case FixedPointStatus::kConverged:
      return "converged";
    case FixedPointStatus::kZeroGain:
      return "zero gain";
    case FixedPointStatus::kDiverged:
      return "diverged";
    case FixedPointStatus::kIterationLimit:
      return "iteration limit";
    case FixedPointStatus::kAborted:
      return "aborted";
  }
  return "unknown";
}

namespace internal {

FixedPointPlan::FixedPointPlan(const DecodingConfig& cfg, const Channel& ch)
    : num_users_(ch.num_users()) {
  cfg.Validate(num_users_);
  const int n = num_users_;
  const int flat_count = n * n;
  divergence_cap_ = ch.max_noise();
  receivers_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ReceiverDecoding& rx = cfg.receivers[static_cast<std::size_t>(i)];
    Receiver& out = receivers_[static_cast<std::size_t>(i)];
    out.noise = ch.noise(i);
    out.order = rx.order;
    for (int f : rx.order) out.order_gain.push_back(ch.gain(i, f / n));
    for (int f = 0; f < flat_count; ++f) {
      if (((rx.decoded >> f) & 1U) == 0) {
        out.undecoded.push_back(f);
        out.undecoded_gain.push_back(ch.gain(i, f / n));
      }
    }
    out.coef.assign(out.order.size(), 0.0);
  }
  next_.assign(static_cast<std::size_t>(flat_count), 0.0);
}

FixedPointStatus FixedPointPlan::Solve(std::span<const double> targets,
                                       const FixedPointOptions& options,
                                       std::vector<double>& powers,
                                       int* iterations) {
  const std::size_t flat_count = next_.size();
  powers.assign(flat_count, 0.0);
  if (iterations != nullptr) *iterations = 0;

  for (Receiver& rx : receivers_) {
    for (std::size_t m = 0; m < rx.order.size(); ++m) {
      const double target = targets[static_cast<std::size_t>(rx.order[m])];
      if (target <= 0.0) {
        rx.coef[m] = 0.0;
      } else if (rx.order_gain[m] <= 0.0) {
        return FixedPointStatus::kZeroGain;
      } else {
        rx.coef[m] = std::expm1(target * std::log(2.0)) / rx.order_gain[m];
      }
    }
  }

  const double cap = options.divergence_factor * divergence_cap_;
  PowerAllocation view;
  if (options.on_iterate) {
    view = PowerAllocation(num_users_);
    options.on_iterate(view);
  }

  for (int it = 1; it <= options.max_iterations; ++it) {
    std::fill(next_.begin(), next_.end(), 0.0);
    for (const Receiver& rx : receivers_) {
      double floor = rx.noise;
      for (std::size_t u = 0; u < rx.undecoded.size(); ++u) {
        floor += rx.undecoded_gain[u] *
                 powers[static_cast<std::size_t>(rx.undecoded[u])];
      }
      double later = 0.0;
      for (std::size_t m = rx.order.size(); m-- > 0;) {
        const std::size_t f = static_cast<std::size_t>(rx.order[m]);
        const double needed = rx.coef[m] * (floor + later);
        if (needed > next_[f]) next_[f] = needed;
        later += rx.order_gain[m] * powers[f];
      }
    }

    double change = 0.0;
    double total = 0.0;
    bool over_cap = false;
    for (std::size_t f = 0; f < flat_count; ++f) {
      change += std::abs(next_[f] - powers[f]);
      total += next_[f];
      if (!(next_[f] <= cap)) over_cap = true;
    }
    powers.swap(next_);
    if (iterations != nullptr) *iterations = it;
    if (options.on_iterate) {
      std::copy(powers.begin(), powers.end(), view.values().begin());
      options.on_iterate(view);
    }
    if (over_cap) return FixedPointStatus::kDiverged;
    if (total > options.abort_total_above) return FixedPointStatus::kAborted;
    if (change <= options.tolerance * total) return FixedPointStatus::kConverged;
  }
  return FixedPointStatus::kIterationLimit;
}

}  // namespace internal

FixedPointResult min_power_fixed(const DecodingConfig& cfg,
                                 const RateAllocation& targets,
                                 const Channel& ch,
                                 const FixedPointOptions& options) {
  if (targets.num_users() != ch.num_users()) {
    throw std::invalid_argument("targets size does not match the channel");
  }
  targets.Validate("rate target");
  internal::FixedPointPlan plan(cfg, ch);
  std::vector<double> flat;
  FixedPointResult result;
  result.status = plan.Solve(targets.values(), options, flat, &result.iterations);
  result.powers = PowerAllocation(ch.num_users());
  if (!flat.empty()) {
    std::copy(flat.begin(), flat.end(), result.powers.values().begin());
  }
  return result;
}

}  // namespace icmac
