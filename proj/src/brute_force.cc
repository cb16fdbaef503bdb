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
#include <limits>
#include <string>

#include "fixed_point_plan.h"
#include "icmac/decoding.h"
#include "icmac/minpic.h"
#include "split_polish.h"

namespace icmac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compositions of `units` into `parts` nonnegative integers, in
// lexicographic order.
void Compositions(int units, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(units);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= units; ++first) {
    prefix.push_back(first);
    Compositions(units - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Lattice of splits for each user: rows of length U summing to rate_min[k].
std::vector<std::vector<std::vector<double>>> SplitLattice(
    const std::vector<double>& rate_min, int grid) {
  const int n = static_cast<int>(rate_min.size());
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  Compositions(grid - 1, n, prefix, comps);
  std::vector<std::vector<std::vector<double>>> lattice(rate_min.size());
  for (int k = 0; k < n; ++k) {
    const double r = rate_min[static_cast<std::size_t>(k)];
    auto& rows = lattice[static_cast<std::size_t>(k)];
    if (r <= 0.0) {
      rows.emplace_back(static_cast<std::size_t>(n), 0.0);
      continue;
    }
    for (const std::vector<int>& c : comps) {
      std::vector<double> row(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] =
            r * c[static_cast<std::size_t>(j)] / (grid - 1);
      }
      rows.push_back(std::move(row));
    }
  }
  return lattice;
}

struct ConfigBest {
  std::uint64_t id = 0;
  double total = kInf;
  std::vector<double> split;  // flat
};

class Evaluator {
 public:
  explicit Evaluator(const FixedPointOptions& base) : options_(base) {
    options_.on_iterate = nullptr;
  }

  double Total(internal::FixedPointPlan& plan, std::span<const double> split,
               double abort_above) {
    ++solves_;
    options_.abort_total_above = abort_above;
    if (plan.Solve(split, options_, buffer_, nullptr) !=
        FixedPointStatus::kConverged) {
      return kInf;
    }
    double total = 0.0;
    for (double p : buffer_) total += p;
    return total;
  }

  std::int64_t solves() const { return solves_; }

 private:
  FixedPointOptions options_;
  std::vector<double> buffer_;
  std::int64_t solves_ = 0;
};

}  // namespace

std::uint64_t brute_force_config_count(int num_users) {
  if (num_users < 1 || num_users > 3) {
    throw SizeLimitError("brute force supports 1 to 3 users, got " +
                         std::to_string(num_users));
  }
  return config_count(num_users);
}

Solution brute_force_solve(const Scenario& sc,
                           const BruteForceSettings& settings) {
  sc.Validate();
  if (settings.split_grid < 2) {
    throw std::invalid_argument("split_grid must be at least 2");
  }
  const int n = sc.num_users();
  const std::uint64_t count = brute_force_config_count(n);
  if (count > kBruteForceConfigLimit) {
    throw SizeLimitError("brute force would visit " + std::to_string(count) +
                         " configurations, above the limit of " +
                         std::to_string(kBruteForceConfigLimit));
  }

  std::vector<std::vector<ReceiverDecoding>> options;
  for (int i = 0; i < n; ++i) options.push_back(receiver_options(i, n));

  const auto lattice = SplitLattice(sc.rate_min, settings.split_grid);
  std::size_t split_count = 1;
  for (const auto& rows : lattice) split_count *= rows.size();

  Evaluator eval(settings.fixed_point);
  const double margin = 1.0 + settings.polish_margin;
  double incumbent = kInf;
  std::vector<ConfigBest> candidates;
  std::vector<double> split(static_cast<std::size_t>(n * n));

  for (std::uint64_t id = 0; id < count; ++id) {
    DecodingConfig cfg;
    cfg.receivers.resize(static_cast<std::size_t>(n));
    std::uint64_t rest = id;
    for (int i = n - 1; i >= 0; --i) {
      const auto& opts = options[static_cast<std::size_t>(i)];
      cfg.receivers[static_cast<std::size_t>(i)] = opts[rest % opts.size()];
      rest /= opts.size();
    }
    internal::FixedPointPlan plan(cfg, sc.channel);

    ConfigBest best{id, kInf, {}};
    for (std::size_t s = 0; s < split_count; ++s) {
      std::size_t r = s;
      for (int k = n - 1; k >= 0; --k) {
        const auto& rows = lattice[static_cast<std::size_t>(k)];
        const auto& row = rows[r % rows.size()];
        r /= rows.size();
        std::copy(row.begin(), row.end(),
                  split.begin() + static_cast<std::ptrdiff_t>(k * n));
      }
      const double total = eval.Total(plan, split, incumbent * margin);
      if (total < best.total) {
        best.total = total;
        best.split = split;
      }
    }
    if (!std::isfinite(best.total)) continue;
    incumbent = std::min(incumbent, best.total);
    candidates.push_back(std::move(best));
  }

  Solution sol;
  sol.configs_evaluated = static_cast<std::int64_t>(count);
  sol.powers = PowerAllocation(n);
  sol.rates = RateAllocation(n);
  sol.lambda.assign(static_cast<std::size_t>(n), 0.0);

  ConfigBest winner;
  for (ConfigBest& c : candidates) {
    if (c.total > incumbent * margin) continue;
    DecodingConfig cfg = config_from_id(c.id, n);
    internal::FixedPointPlan plan(cfg, sc.channel);
    const double max_rate =
        *std::max_element(sc.rate_min.begin(), sc.rate_min.end());
    internal::PolishSplit(
        sc.rate_min, max_rate / (settings.split_grid - 1),
        [&](std::span<const double> s) { return eval.Total(plan, s, kInf); },
        c.split, c.total);
    if (c.total < winner.total ||
        (c.total == winner.total && c.id < winner.id)) {
      winner = c;
    }
  }
  sol.inner_iterations = eval.solves();
  if (!std::isfinite(winner.total)) {
    sol.config = own_only_config(sc.channel);
    return sol;
  }

  sol.config = config_from_id(winner.id, n);
  std::copy(winner.split.begin(), winner.split.end(),
            sol.rates.values().begin());
  const FixedPointResult fp =
      min_power_fixed(sol.config, sol.rates, sc.channel, settings.fixed_point);
  sol.powers = fp.powers;
  sol.total_power = sol.powers.total();
  sol.feasible = !sc.power_budget || sol.total_power <= *sc.power_budget;
  return sol;
}

}  // namespace icmac
