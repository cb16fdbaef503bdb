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


// Command-line front end. Subcommands:
//
//   region      boundary points of the 2-user rate region (needs power_budget)
//   minpic      minimum sum power via local search
//   brute       minimum sum power by exhaustive enumeration (U <= 3)
//   timeshare   time-sharing schedule around the minpic configuration
//   oma         orthogonal multiple access baseline
//   compare     one report row per method
//   epi-bounds  sum-rate bounds in nats and bits
//
// Common flags: --scenario PATH (default: random 2-user scenario from
// --seed), --out PATH (default: stdout), --tol, --seed, --grid.
// Exit codes: 0 success, 2 invalid input, 3 infeasible.

#ifndef ICMAC_CLI_H_
#define ICMAC_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace icmac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;

// `args` excludes the program name. CSV goes to --out or `out`; diagnostics
// and timings go to `err`.
int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err);

}  // namespace icmac

#endif  // ICMAC_CLI_H_
