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


#include "icmac/simplex.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icmac {

namespace {

constexpr double kEps = 1e-11;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols),
        cells_(static_cast<std::size_t>((rows + 1) * (cols + 1)), 0.0),
        basis_(static_cast<std::size_t>(rows), -1) {}

  // Row `rows_` is the reduced-cost row; column `cols_` is the right side.
  double& at(int r, int c) {
    return cells_[static_cast<std::size_t>(r * (cols_ + 1) + c)];
  }
  double& cost(int c) { return at(rows_, c); }
  double& rhs(int r) { return at(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Installs `costs` (one per column) as the objective, priced out against
  // the current basis.
  void SetObjective(const std::vector<double>& costs) {
    for (int j = 0; j < cols_; ++j) cost(j) = costs[static_cast<std::size_t>(j)];
    cost(cols_) = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double cb = costs[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  // Bland's rule iterations; columns with allowed[c] == false never enter.
  LpStatus Run(const std::vector<bool>& allowed, int max_pivots, int& pivots) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && cost(j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a <= kEps) continue;
        const double ratio = rhs(i) / a;
        if (leave < 0 || ratio < best_ratio - kEps ||
            (ratio <= best_ratio + kEps &&
             basis_[static_cast<std::size_t>(i)] <
                 basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      if (pivots >= max_pivots) return LpStatus::kIterationLimit;
      Pivot(leave, enter);
      ++pivots;
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, int max_pivots) {
  const int n = static_cast<int>(lp.objective.size());
  const int m = static_cast<int>(lp.rows.size());
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective");
  }
  int slack_count = 0;
  int artificial_count = 0;
  for (const LpRow& row : lp.rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw std::invalid_argument("LP row length does not match objective");
    }
    for (double a : row.coefficients) {
      if (!std::isfinite(a)) throw std::invalid_argument("non-finite LP row");
    }
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("non-finite rhs");
    RowSense sense = row.sense;
    if (row.rhs < 0.0 && sense != RowSense::kEqual) {
      sense = sense == RowSense::kLessEqual ? RowSense::kGreaterEqual
                                            : RowSense::kLessEqual;
    }
    if (sense != RowSense::kEqual) ++slack_count;
    if (sense != RowSense::kLessEqual) ++artificial_count;
  }

  // Columns: originals, slacks/surpluses, artificials.
  const int cols = n + slack_count + artificial_count;
  Tableau t(m, cols);
  std::vector<double> phase1(static_cast<std::size_t>(cols), 0.0);
  int next_slack = n;
  int next_artificial = n + slack_count;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = lp.rows[static_cast<std::size_t>(i)];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    RowSense sense = row.sense;
    if (sign < 0.0 && sense != RowSense::kEqual) {
      sense = sense == RowSense::kLessEqual ? RowSense::kGreaterEqual
                                            : RowSense::kLessEqual;
    }
    for (int j = 0; j < n; ++j) {
      t.at(i, j) = sign * row.coefficients[static_cast<std::size_t>(j)];
    }
    t.rhs(i) = sign * row.rhs;
    if (sense == RowSense::kLessEqual) {
      t.at(i, next_slack) = 1.0;
      t.basis()[static_cast<std::size_t>(i)] = next_slack++;
    } else {
      if (sense == RowSense::kGreaterEqual) t.at(i, next_slack++) = -1.0;
      t.at(i, next_artificial) = 1.0;
      phase1[static_cast<std::size_t>(next_artificial)] = 1.0;
      t.basis()[static_cast<std::size_t>(i)] = next_artificial++;
    }
  }

  LpResult result;
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);
  if (artificial_count > 0) {
    t.SetObjective(phase1);
    const LpStatus s1 = t.Run(allowed, max_pivots, result.pivots);
    if (s1 == LpStatus::kIterationLimit) {
      result.status = s1;
      return result;
    }
    if (-t.cost(cols) > 1e-9) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive remaining artificials out of the basis where possible; a row
    // with no usable pivot is redundant and keeps its zero artificial.
    for (int i = 0; i < m; ++i) {
      if (t.basis()[static_cast<std::size_t>(i)] < n + slack_count) continue;
      for (int j = 0; j < n + slack_count; ++j) {
        if (std::abs(t.at(i, j)) > 1e-9) {
          t.Pivot(i, j);
          break;
        }
      }
    }
    for (int j = n + slack_count; j < cols; ++j) {
      allowed[static_cast<std::size_t>(j)] = false;
    }
  }

  std::vector<double> costs(static_cast<std::size_t>(cols), 0.0);
  std::copy(lp.objective.begin(), lp.objective.end(), costs.begin());
  t.SetObjective(costs);
  result.status = t.Run(allowed, max_pivots, result.pivots);
  if (result.status != LpStatus::kOptimal) return result;

  result.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = t.basis()[static_cast<std::size_t>(i)];
    if (b < n) {
      result.x[static_cast<std::size_t>(b)] = std::max(0.0, t.rhs(i));
      result.basis.push_back(b);
    }
  }
  std::sort(result.basis.begin(), result.basis.end());
  for (int j = 0; j < n; ++j) {
    result.objective += lp.objective[static_cast<std::size_t>(j)] *
                        result.x[static_cast<std::size_t>(j)];
  }
  return result;
}

}  // namespace icmac
