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


#include "icmac/csv.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace icmac {

namespace {

std::string Escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void AppendLine(const std::vector<std::string>& cells, std::string& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += Escape(cells[i]);
  }
  out += '\n';
}

}  // namespace

void CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("CSV row has " + std::to_string(row.size()) +
                                " cells, header has " +
                                std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  AppendLine(table.header, out);
  for (const auto& row : table.rows) AppendLine(row, out);
  return out;
}

void export_csv(const CsvTable& table, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path);
  const std::string text = to_csv(table);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw std::runtime_error("cannot write " + path);
}

}  // namespace icmac
