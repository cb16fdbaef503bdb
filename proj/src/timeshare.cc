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


#include "icmac/timeshare.h"

#include <cmath>
#include <stdexcept>

#include "icmac/decoding.h"
#include "icmac/simplex.h"

namespace icmac {

namespace {

std::uint64_t IdOrIndex(const DecodingConfig& cfg, int num_users,
                        std::size_t index) {
  try {
    return config_id(cfg, num_users);
  } catch (const SizeLimitError&) {
    return index;
  }
}

}  // namespace

std::vector<std::vector<double>> default_rate_targets(
    const std::vector<double>& rate_min) {
  std::vector<std::vector<double>> targets = {rate_min};
  for (std::size_t k = 0; k < rate_min.size(); ++k) {
    for (double scale : {0.5, 1.5}) {
      std::vector<double> t = rate_min;
      t[k] *= scale;
      targets.push_back(std::move(t));
    }
  }
  return targets;
}

std::vector<VertexPoint> build_vertices(
    const Scenario& sc, const std::vector<DecodingConfig>& configs,
    const std::vector<std::vector<double>>& rate_targets,
    const FixedPointOptions& options) {
  sc.Validate();
  const int n = sc.num_users();
  for (const auto& t : rate_targets) {
    if (static_cast<int>(t.size()) != n) {
      throw std::invalid_argument("rate target size does not match users");
    }
    for (double r : t) {
      if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("rate targets must be finite and >= 0");
      }
    }
  }
  std::vector<VertexPoint> vertices;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const DecodingConfig& cfg = configs[c];
    const std::uint64_t id = IdOrIndex(cfg, n, c);
    for (const auto& target : rate_targets) {
      const RateAllocation split = uniform_split(target);
      const FixedPointResult fp = min_power_fixed(cfg, split, sc.channel, options);
      if (!fp.converged()) continue;
      VertexPoint v;
      v.config_id = id;
      v.rates = target;
      v.power = fp.powers.total();
      v.config = cfg;
      v.powers = fp.powers;
      v.allocation = split;
      vertices.push_back(std::move(v));
    }
  }
  return vertices;
}

std::vector<DecodingConfig> neighbourhood_configs(const DecodingConfig& cfg,
                                                  int num_users) {
  std::vector<DecodingConfig> configs = {cfg};
  for (DecodingConfig& m : local_moves(cfg, num_users)) {
    configs.push_back(std::move(m));
  }
  return configs;
}

VertexPoint vertex_from_solution(const Solution& sol) {
  if (!sol.feasible) {
    throw std::invalid_argument("vertex_from_solution needs a feasible solution");
  }
  const int n = sol.rates.num_users();
  VertexPoint v;
  v.config_id = IdOrIndex(sol.config, n, 0);
  v.rates = user_rates(sol.rates);
  v.power = sol.total_power;
  v.config = sol.config;
  v.powers = sol.powers;
  v.allocation = sol.rates;
  return v;
}

std::optional<TimeShareSchedule> solve_timeshare_lp(
    const std::vector<VertexPoint>& vertices,
    const std::vector<double>& rate_min) {
  if (vertices.empty()) {
    throw std::invalid_argument("time sharing needs at least one vertex");
  }
  const std::size_t nv = vertices.size();
  LinearProgram lp;
  for (const VertexPoint& v : vertices) {
    if (v.rates.size() != rate_min.size()) {
      throw std::invalid_argument("vertex rates do not match rate_min");
    }
    lp.objective.push_back(v.power);
  }
  for (std::size_t k = 0; k < rate_min.size(); ++k) {
    LpRow row;
    row.sense = RowSense::kGreaterEqual;
    row.rhs = rate_min[k];
    for (const VertexPoint& v : vertices) row.coefficients.push_back(v.rates[k]);
    lp.rows.push_back(std::move(row));
  }
  lp.rows.push_back({std::vector<double>(nv, 1.0), RowSense::kEqual, 1.0});

  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;

  TimeShareSchedule s;
  s.theta = r.x;
  // Renormalize away rounding so the weights sum to one.
  double sum = 0.0;
  for (double w : s.theta) sum += w;
  for (double& w : s.theta) w /= sum;
  s.avg_rates.assign(rate_min.size(), 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    s.avg_power += s.theta[v] * vertices[v].power;
    for (std::size_t k = 0; k < rate_min.size(); ++k) {
      s.avg_rates[k] += s.theta[v] * vertices[v].rates[k];
    }
  }
  s.basis = r.basis;
  return s;
}

}  // namespace icmac
