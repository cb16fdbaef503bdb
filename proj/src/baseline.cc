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


#include "icmac/baseline.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace icmac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double UserPower(const Scenario& sc, int k, double alpha) {
  const double r = sc.rate_min[static_cast<std::size_t>(k)];
  if (r <= 0.0) return 0.0;
  const double g = sc.channel.gain(k, k);
  if (alpha <= 0.0 || g <= 0.0) return kInf;
  return alpha * sc.channel.noise(k) * std::expm1(r / alpha * std::log(2.0)) / g;
}

double Total(const Scenario& sc, const std::vector<double>& alphas) {
  double total = 0.0;
  for (int k = 0; k < sc.num_users(); ++k) {
    total += UserPower(sc, k, alphas[static_cast<std::size_t>(k)]);
  }
  return total;
}

void GridSearch(const Scenario& sc, int grid_n, int k, int remaining,
                std::vector<double>& alphas, std::vector<double>& best,
                double& best_total) {
  const int n = sc.num_users();
  if (k == n - 1) {
    alphas[static_cast<std::size_t>(k)] = static_cast<double>(remaining) / grid_n;
    const double total = Total(sc, alphas);
    if (total < best_total) {
      best_total = total;
      best = alphas;
    }
    return;
  }
  for (int units = 0; units <= remaining; ++units) {
    alphas[static_cast<std::size_t>(k)] = static_cast<double>(units) / grid_n;
    GridSearch(sc, grid_n, k + 1, remaining - units, alphas, best, best_total);
  }
}

}  // namespace

OmaSolution oma_min_power(const Scenario& sc,
                          const std::vector<double>& alphas) {
  sc.Validate();
  const int n = sc.num_users();
  if (static_cast<int>(alphas.size()) != n) {
    throw std::invalid_argument("one time fraction per user is required");
  }
  double sum = 0.0;
  for (double a : alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("time fractions must be finite and >= 0");
    }
    sum += a;
  }
  if (sum > 1.0 + 1e-9) {
    throw std::invalid_argument("time fractions sum above 1");
  }
  OmaSolution sol;
  sol.fractions = alphas;
  for (int k = 0; k < n; ++k) {
    const double p = UserPower(sc, k, alphas[static_cast<std::size_t>(k)]);
    if (!std::isfinite(p)) {
      throw InfeasibleError("user " + std::to_string(k + 1) +
                            " cannot meet its rate in its time slice");
    }
    sol.user_power.push_back(p);
    sol.total_power += p;
  }
  return sol;
}

OmaSolution oma_optimize_fractions(const Scenario& sc, int grid_n) {
  sc.Validate();
  if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
  const int n = sc.num_users();
  std::vector<double> alphas(static_cast<std::size_t>(n), 0.0);
  std::vector<double> best;
  double best_total = kInf;
  GridSearch(sc, grid_n, 0, grid_n, alphas, best, best_total);
  if (!std::isfinite(best_total)) {
    throw InfeasibleError("no time-fraction grid point meets the rates");
  }

  // The objective is separable and convex in alpha, so exact line searches
  // along pairwise exchanges converge to the optimum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int sweep = 0; sweep < 200 && n > 1; ++sweep) {
    const double before = best_total;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const std::size_t ia = static_cast<std::size_t>(a);
        const std::size_t ib = static_cast<std::size_t>(b);
        const double pool = best[ia] + best[ib];
        auto f = [&](double x) {
          return UserPower(sc, a, x) + UserPower(sc, b, pool - x);
        };
        double lo = 0.0;
        double hi = pool;
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = f(x1);
        double f2 = f(x2);
        while (hi - lo > 1e-13) {
          if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
          } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
          }
        }
        const double x = 0.5 * (lo + hi);
        if (f(x) < f(best[ia])) {
          best[ia] = x;
          best[ib] = pool - x;
          best_total = Total(sc, best);
        }
      }
    }
    if (before - best_total <= 1e-15 * before) break;
  }
  return oma_min_power(sc, best);
}

}  // namespace icmac
