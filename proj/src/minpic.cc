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

#include "icmac/minpic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "fixed_point_plan.h"
#include "icmac/decoding.h"
#include "split_polish.h"

namespace icmac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckRateShape(const RateAllocation& r, const std::vector<double>& rate_min) {
  if (static_cast<int>(rate_min.size()) != r.num_users()) {
    throw std::invalid_argument("rate_min size does not match the allocation");
  }
}

// Canonical key of a configuration for the evaluation cache.
std::vector<int> ConfigKey(const DecodingConfig& cfg) {
  std::vector<int> key;
  for (const ReceiverDecoding& rx : cfg.receivers) {
    key.push_back(static_cast<int>(rx.decoded));
    key.insert(key.end(), rx.order.begin(), rx.order.end());
    key.push_back(-1);
  }
  return key;
}

struct ConfigEval {
  double total = kInf;
  RateAllocation split;
  std::vector<double> powers;
};

// Runs the inner power control and the split search of minpic for one
// decoding configuration.
class SplitSearch {
 public:
  SplitSearch(const Scenario& sc, const MinPicSettings& settings)
      : sc_(sc), settings_(settings), n_(sc.num_users()) {
    fixed_point_ = settings.fixed_point;
    fixed_point_.on_iterate = nullptr;
  }

  std::int64_t solves() const { return solves_; }

  ConfigEval Run(const DecodingConfig& cfg, const RateAllocation& hint) {
    internal::FixedPointPlan plan(cfg, sc_.channel);
    const RateAllocation warm =
        hint.num_users() == n_ ? hint : uniform_split(sc_.rate_min);

    std::vector<RateAllocation> starts = {warm, uniform_split(sc_.rate_min)};
    for (int k = 0; k < n_; ++k) {
      if (sc_.rate_min[static_cast<std::size_t>(k)] <= 0.0 || n_ == 1) continue;
      for (int j = 0; j < n_; ++j) {
        RateAllocation s = warm;
        for (int c = 0; c < n_; ++c) s(k, c) = 0.0;
        s(k, j) = sc_.rate_min[static_cast<std::size_t>(k)];
        starts.push_back(std::move(s));
      }
    }
    // The split landscape is not convex across kinks, so every start is
    // refined and the best result kept.
    ConfigEval best;
    for (const RateAllocation& s : starts) {
      ConfigEval trial;
      trial.split = s;
      trial.total = Evaluate(plan, s, nullptr);
      if (!std::isfinite(trial.total)) continue;
      Descend(plan, trial);
      Polish(plan, trial);
      if (trial.total < best.total) best = std::move(trial);
    }
    if (!std::isfinite(best.total)) return best;
    Evaluate(plan, best.split, &best.powers);
    return best;
  }

 private:
  void Polish(internal::FixedPointPlan& plan, ConfigEval& state) {
    if (n_ == 1) return;
    std::vector<double> flat(state.split.values().begin(),
                             state.split.values().end());
    const double max_rate =
        *std::max_element(sc_.rate_min.begin(), sc_.rate_min.end());
    internal::PolishSplit(
        sc_.rate_min, 0.05 * max_rate,
        [&](std::span<const double> s) {
          return Evaluate(plan, s, nullptr, state.total);
        },
        flat, state.total);
    std::copy(flat.begin(), flat.end(), state.split.values().begin());
  }

  // Returns +inf when infeasible or once the total passes `abort_above`.
  double Evaluate(internal::FixedPointPlan& plan, const RateAllocation& split,
                  std::vector<double>* powers, double abort_above = kInf) {
    return Evaluate(plan, split.values(), powers, abort_above);
  }
  double Evaluate(internal::FixedPointPlan& plan, std::span<const double> split,
                  std::vector<double>* powers, double abort_above = kInf) {
    ++solves_;
    fixed_point_.abort_total_above = abort_above;
    const FixedPointStatus status =
        plan.Solve(split, fixed_point_, buffer_, nullptr);
    if (status != FixedPointStatus::kConverged) return kInf;
    double total = 0.0;
    for (double p : buffer_) total += p;
    if (powers != nullptr) *powers = buffer_;
    return total;
  }

  // Projected gradient descent on the product of the users' rate simplices
  // with forward-difference gradients and step halving.
  void Descend(internal::FixedPointPlan& plan, ConfigEval& state) {
    if (n_ == 1) return;
    const double h = settings_.fd_step;
    const double max_rate =
        *std::max_element(sc_.rate_min.begin(), sc_.rate_min.end());
    double eta = 0.25 * max_rate;
    RateAllocation grad(n_);
    for (int step = 0; step < settings_.max_gradient_steps; ++step) {
      double gmax = 0.0;
      for (int k = 0; k < n_; ++k) {
        if (sc_.rate_min[static_cast<std::size_t>(k)] <= 0.0) continue;
        for (int j = 0; j < n_; ++j) {
          RateAllocation probe = state.split;
          probe(k, j) += h;
          const double total =
              Evaluate(plan, probe, nullptr, 2.0 * state.total + 1.0);
          // An infeasible probe means this component is at its limit.
          grad(k, j) = std::isfinite(total) ? (total - state.total) / h : 1e12;
        }
        // Only differences within a user's simplex move the point.
        double mean = 0.0;
        for (int j = 0; j < n_; ++j) mean += grad(k, j);
        mean /= n_;
        for (int j = 0; j < n_; ++j) {
          gmax = std::max(gmax, std::abs(grad(k, j) - mean));
        }
      }
      if (gmax == 0.0) return;

      bool accepted = false;
      double improvement = 0.0;
      for (double trial = eta; trial >= 1e-12 * max_rate; trial *= 0.5) {
        RateAllocation cand = state.split;
        for (int k = 0; k < n_; ++k) {
          const double total_rate = sc_.rate_min[static_cast<std::size_t>(k)];
          if (total_rate <= 0.0) continue;
          for (int j = 0; j < n_; ++j) cand(k, j) -= trial * grad(k, j) / gmax;
          project_onto_simplex(
              cand.values().subspan(static_cast<std::size_t>(k * n_),
                                    static_cast<std::size_t>(n_)),
              total_rate);
        }
        const double total = Evaluate(plan, cand, nullptr, state.total);
        if (total < state.total) {
          improvement = state.total - total;
          state.total = total;
          state.split = std::move(cand);
          eta = std::min(2.0 * trial, max_rate);
          accepted = true;
          break;
        }
      }
      if (!accepted || improvement < settings_.tol) return;
    }
  }

  const Scenario& sc_;
  const MinPicSettings& settings_;
  int n_;
  FixedPointOptions fixed_point_;
  std::vector<double> buffer_;
  std::int64_t solves_ = 0;
};

// Per-user rates actually supported by `powers` under `cfg`: each sub-user
// gets the smallest cap among the receivers that decode it.
RateAllocation SupportedRates(const DecodingConfig& cfg,
                              const PowerAllocation& powers,
                              const Channel& ch) {
  const int n = ch.num_users();
  RateAllocation supported(n, kInf);
  for (const auto& rx : sic_caps(cfg, powers, ch)) {
    for (const DecodedCap& c : rx) {
      supported[c.sub_user] = std::min(supported[c.sub_user], c.bits);
    }
  }
  return supported;
}

}  // namespace

double lagrangian_value(const PowerAllocation& p, const DualState& lam,
                        const RateAllocation& r,
                        const std::vector<double>& rate_min) {
  CheckRateShape(r, rate_min);
  if (lam.lambda.size() != rate_min.size()) {
    throw std::invalid_argument("lambda size does not match rate_min");
  }
  const std::vector<double> rates = user_rates(r);
  double value = p.total();
  for (std::size_t k = 0; k < rate_min.size(); ++k) {
    value += lam.lambda[k] * (rate_min[k] - rates[k]);
  }
  return value;
}

DualState dual_update(const DualState& lam, const RateAllocation& r,
                      const std::vector<double>& rate_min) {
  CheckRateShape(r, rate_min);
  if (lam.lambda.size() != rate_min.size()) {
    throw std::invalid_argument("lambda size does not match rate_min");
  }
  const std::vector<double> rates = user_rates(r);
  DualState next = lam;
  for (std::size_t k = 0; k < rate_min.size(); ++k) {
    next.lambda[k] =
        std::max(0.0, lam.lambda[k] + lam.step * (rate_min[k] - rates[k]));
  }
  return next;
}

RateAllocation uniform_split(const std::vector<double>& rate_min) {
  const int n = static_cast<int>(rate_min.size());
  RateAllocation split(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) split(k, j) = rate_min[static_cast<std::size_t>(k)] / n;
  }
  return split;
}

void project_onto_simplex(std::span<double> values, double total) {
  if (values.empty()) return;
  if (total <= 0.0) {
    std::fill(values.begin(), values.end(), 0.0);
    return;
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    cumulative += sorted[t];
    const double candidate = (cumulative - total) / static_cast<double>(t + 1);
    if (sorted[t] - candidate > 0.0) shift = candidate;
  }
  for (double& v : values) v = std::max(0.0, v - shift);
  // Put the rounding residue on the largest entry so the row sums exactly.
  double sum = 0.0;
  for (double v : values) sum += v;
  auto largest = std::max_element(values.begin(), values.end());
  *largest = std::max(0.0, *largest + (total - sum));
}

std::vector<DecodingConfig> local_moves(const DecodingConfig& cfg,
                                        int num_users) {
  cfg.Validate(num_users);
  std::vector<DecodingConfig> moves;
  for (int i = 0; i < num_users; ++i) {
    const ReceiverDecoding& rx = cfg.receivers[static_cast<std::size_t>(i)];
    const SubUserMask own = own_mask(i, num_users);
    for (int f = 0; f < num_users * num_users; ++f) {
      const SubUserMask bit = SubUserMask{1} << f;
      if ((own & bit) != 0) continue;
      if ((rx.decoded & bit) != 0) {
        DecodingConfig next = cfg;
        ReceiverDecoding& out = next.receivers[static_cast<std::size_t>(i)];
        out.decoded &= ~bit;
        out.order.erase(std::find(out.order.begin(), out.order.end(), f));
        moves.push_back(std::move(next));
        continue;
      }
      for (std::size_t pos = 0; pos <= rx.order.size(); ++pos) {
        DecodingConfig next = cfg;
        ReceiverDecoding& out = next.receivers[static_cast<std::size_t>(i)];
        out.decoded |= bit;
        out.order.insert(out.order.begin() + static_cast<std::ptrdiff_t>(pos),
                         f);
        moves.push_back(std::move(next));
      }
    }
    for (std::size_t m = 0; m + 1 < rx.order.size(); ++m) {
      DecodingConfig next = cfg;
      auto& order = next.receivers[static_cast<std::size_t>(i)].order;
      std::swap(order[m], order[m + 1]);
      moves.push_back(std::move(next));
    }
  }
  return moves;
}

Solution minpic_solve(const Scenario& sc, const MinPicSettings& settings) {
  sc.Validate();
  const int n = sc.num_users();
  const Channel& ch = sc.channel;

  SplitSearch search(sc, settings);
  std::map<std::vector<int>, ConfigEval> cache;
  DualState dual{std::vector<double>(static_cast<std::size_t>(n), 0.0),
                 settings.dual_step};
  std::vector<double> last_deficit(static_cast<std::size_t>(n), 0.0);

  auto evaluate = [&](const DecodingConfig& c, const RateAllocation& warm) {
    const std::vector<int> key = ConfigKey(c);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, search.Run(c, warm)).first;
    return it->second;
  };

  auto descend = [&](DecodingConfig& cfg, ConfigEval& best) {
    std::set<std::vector<int>> expanded;
    int sideways = 0;
    for (int pass = 0; pass < settings.max_local_search_passes; ++pass) {
      expanded.insert(ConfigKey(cfg));
      bool improved = false;
      std::optional<DecodingConfig> level;
      for (DecodingConfig& candidate : local_moves(cfg, n)) {
        const ConfigEval eval = evaluate(candidate, best.split);
        if (eval.total < best.total - settings.tol) {
          cfg = std::move(candidate);
          best = eval;
          improved = true;
          sideways = 0;
          break;
        }
        if (!level && std::abs(eval.total - best.total) <= settings.tol &&
            !expanded.contains(ConfigKey(candidate))) {
          level = candidate;
        }
      }
      // Ties are common because a zero sub-user rate makes several
      // configurations equivalent; a limited number of level moves lets the
      // search leave such plateaus.
      bool moved_level = false;
      if (!improved && level && sideways < settings.max_sideways_moves) {
        best = evaluate(*level, best.split);
        cfg = std::move(*level);
        ++sideways;
        moved_level = true;
      }

      if (std::isfinite(best.total)) {
        PowerAllocation powers(n);
        std::copy(best.powers.begin(), best.powers.end(),
                  powers.values().begin());
        const RateAllocation supported = SupportedRates(cfg, powers, ch);
        RateAllocation achieved(n);
        for (int f = 0; f < n * n; ++f) {
          achieved.flat(f) = std::min(supported.flat(f), best.split.flat(f));
        }
        const std::vector<double> rates = user_rates(achieved);
        bool oscillating = false;
        for (std::size_t k = 0; k < rates.size(); ++k) {
          const double deficit = sc.rate_min[k] - rates[k];
          if (deficit * last_deficit[k] < 0.0) oscillating = true;
          last_deficit[k] = deficit;
        }
        if (oscillating) dual.step *= 0.5;
        dual = dual_update(dual, achieved, sc.rate_min);
      }
      if (!improved && !moved_level) break;
    }
  };

  // Two descents: one from the own-only configuration, one from decoding
  // every stream. The second catches optima that need several joint moves.
  DecodingConfig cfg = own_only_config(ch);
  ConfigEval best = evaluate(cfg, uniform_split(sc.rate_min));
  descend(cfg, best);
  if (n > 1) {
    DecodingConfig alt;
    for (int i = 0; i < n; ++i) {
      alt.receivers.push_back(
          {all_mask(n), strongest_gain_first(i, all_mask(n), ch)});
    }
    ConfigEval alt_best = evaluate(alt, best.split);
    descend(alt, alt_best);
    if (alt_best.total < best.total - settings.tol) {
      cfg = std::move(alt);
      best = std::move(alt_best);
    }
  }

  Solution sol;
  sol.config = cfg;
  sol.inner_iterations = search.solves();
  sol.configs_evaluated = static_cast<std::int64_t>(cache.size());
  sol.lambda = dual.lambda;
  sol.powers = PowerAllocation(n);
  sol.rates = RateAllocation(n);
  if (std::isfinite(best.total)) {
    std::copy(best.powers.begin(), best.powers.end(),
              sol.powers.values().begin());
    sol.rates = best.split;
    sol.total_power = sol.powers.total();
    sol.feasible = !sc.power_budget || sol.total_power <= *sc.power_budget;
  }
  return sol;
}

}  // namespace icmac
