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


#include "icmac/scenario_io.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace icmac {

namespace {

using Json = nlohmann::json;

const Json& Require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(key, "missing required key");
  return *it;
}

double Number(const Json& v, const std::string& key) {
  if (!v.is_number()) throw ValidationError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(key, "must be finite");
  return x;
}

std::vector<double> Vector(const Json& v, const std::string& key,
                           std::size_t expected) {
  if (!v.is_array()) throw ValidationError(key, "expected an array");
  if (v.size() != expected) {
    throw ValidationError(key, "expected " + std::to_string(expected) +
                                   " entries, got " + std::to_string(v.size()));
  }
  std::vector<double> out;
  for (const Json& x : v) out.push_back(Number(x, key));
  return out;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("", "expected a JSON object");

  static const std::set<std::string> kKnown = {
      "num_users", "gain", "noise", "rate_min_bits", "bandwidth_hz",
      "power_budget"};
  for (const auto& item : doc.items()) {
    if (!kKnown.contains(item.key())) {
      throw ValidationError(item.key(), "unknown key");
    }
  }

  const Json& users = Require(doc, "num_users");
  if (!users.is_number_integer()) {
    throw ValidationError("num_users", "expected an integer");
  }
  const long long n = users.get<long long>();
  if (n < 1 || n > kMaxUsers) {
    throw ValidationError("num_users", "must be between 1 and " +
                                           std::to_string(kMaxUsers));
  }
  const std::size_t un = static_cast<std::size_t>(n);

  const Json& gain_rows = Require(doc, "gain");
  if (!gain_rows.is_array() || gain_rows.size() != un) {
    throw ValidationError("gain", "expected " + std::to_string(n) + " rows");
  }
  std::vector<double> gain;
  for (const Json& row : gain_rows) {
    for (double g : Vector(row, "gain", un)) {
      if (g < 0.0) throw ValidationError("gain", "entries must be >= 0");
      gain.push_back(g);
    }
  }
  std::vector<double> noise = Vector(Require(doc, "noise"), "noise", un);
  for (double v : noise) {
    if (v <= 0.0) throw ValidationError("noise", "entries must be positive");
  }
  std::vector<double> rates =
      Vector(Require(doc, "rate_min_bits"), "rate_min_bits", un);
  for (double r : rates) {
    if (r < 0.0) throw ValidationError("rate_min_bits", "entries must be >= 0");
  }

  Scenario sc;
  sc.channel = Channel(static_cast<int>(n), std::move(gain), std::move(noise));
  sc.rate_min = std::move(rates);
  for (const char* key : {"bandwidth_hz", "power_budget"}) {
    auto it = doc.find(key);
    if (it == doc.end()) continue;
    const double v = Number(*it, key);
    if (v <= 0.0) throw ValidationError(key, "must be positive");
    (std::string(key) == "bandwidth_hz" ? sc.bandwidth_hz : sc.power_budget) = v;
  }
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("", "cannot read scenario file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

std::string scenario_to_json(const Scenario& sc) {
  sc.Validate();
  const int n = sc.num_users();
  Json doc = Json::object();
  doc["num_users"] = n;
  Json gain = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < n; ++k) row.push_back(sc.channel.gain(i, k));
    gain.push_back(row);
  }
  doc["gain"] = gain;
  doc["noise"] = std::vector<double>(sc.channel.noises().begin(),
                                     sc.channel.noises().end());
  doc["rate_min_bits"] = sc.rate_min;
  if (sc.bandwidth_hz) doc["bandwidth_hz"] = *sc.bandwidth_hz;
  if (sc.power_budget) doc["power_budget"] = *sc.power_budget;
  return doc.dump(2) + "\n";
}

}  // namespace icmac
