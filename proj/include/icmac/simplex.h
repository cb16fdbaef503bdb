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


// Small dense linear programs:
//
//   minimize  c^T x   subject to  each row  a^T x (<=, >=, =) b,  x >= 0
//
// solved with a two-phase tableau simplex using Bland's rule, which cannot
// cycle. Meant for tens of variables.

#ifndef ICMAC_SIMPLEX_H_
#define ICMAC_SIMPLEX_H_

#include <vector>

namespace icmac {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LpRow {
  std::vector<double> coefficients;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;  // one entry per variable
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  // Original variables that are basic at the optimum, ascending.
  std::vector<int> basis;
  int pivots = 0;
};

// Throws std::invalid_argument on shape mismatches or non-finite input.
LpResult solve_lp(const LinearProgram& lp, int max_pivots = 10'000);

}  // namespace icmac

#endif  // ICMAC_SIMPLEX_H_
