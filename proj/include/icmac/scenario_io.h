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


// JSON scenario files:
//
//   {"num_users": 2, "gain": [[1, 0.1], [0.1, 1]], "noise": [1, 1],
//    "rate_min_bits": [1, 1], "bandwidth_hz": 2e7, "power_budget": 10}
//
// gain row i is receiver i. bandwidth_hz and power_budget are optional.
// Unknown keys are rejected.

#ifndef ICMAC_SCENARIO_IO_H_
#define ICMAC_SCENARIO_IO_H_

#include <stdexcept>
#include <string>

#include "icmac/model.h"

namespace icmac {

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& message)
      : std::invalid_argument(key.empty() ? message : key + ": " + message),
        key_(std::move(key)) {}
  // The offending key; empty for document-level problems.
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Canonical document that parse_scenario_text maps back to `sc`. Numbers are
// written with round-trip precision.
std::string scenario_to_json(const Scenario& sc);

}  // namespace icmac

#endif  // ICMAC_SCENARIO_IO_H_
