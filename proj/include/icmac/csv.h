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


// Deterministic CSV output: header first, LF line endings, numbers with nine
// significant digits.

#ifndef ICMAC_CSV_H_
#define ICMAC_CSV_H_

#include <string>
#include <vector>

namespace icmac {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws std::invalid_argument if the row width differs from the header.
  void AddRow(std::vector<std::string> row);
};

// printf "%.9g".
std::string format_number(double value);

std::string to_csv(const CsvTable& table);

// Throws std::runtime_error if the file cannot be written.
void export_csv(const CsvTable& table, const std::string& path);

}  // namespace icmac

#endif  // ICMAC_CSV_H_
