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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "icmac/csv.h"
#include "icmac/random_scenario.h"
#include "icmac/scenario_io.h"

namespace icmac {
namespace {

std::string ErrorKey(const std::string& text) {
  try {
    parse_scenario_text(text);
  } catch (const ValidationError& e) {
    return e.key();
  }
  return "<none>";
}

TEST(ParseScenario, MinimalSingleUser) {
  const Scenario sc = parse_scenario_text(
      R"({"num_users": 1, "gain": [[1]], "noise": [1], "rate_min_bits": [2]})");
  EXPECT_EQ(sc.num_users(), 1);
  EXPECT_EQ(sc.rate_min, (std::vector<double>{2.0}));
  EXPECT_EQ(sc.channel.gain(0, 0), 1.0);
  EXPECT_FALSE(sc.power_budget.has_value());
  EXPECT_FALSE(sc.bandwidth_hz.has_value());
}

TEST(ParseScenario, OptionalFields) {
  const Scenario sc = parse_scenario_text(R"({
    "num_users": 2, "gain": [[1, 0.1], [0.2, 1]], "noise": [1, 2],
    "rate_min_bits": [1, 0.5], "bandwidth_hz": 2e7, "power_budget": 10})");
  EXPECT_EQ(sc.channel.gain(1, 0), 0.2);
  EXPECT_EQ(sc.channel.noise(1), 2.0);
  EXPECT_EQ(*sc.bandwidth_hz, 2e7);
  EXPECT_EQ(*sc.power_budget, 10.0);
}

TEST(ParseScenario, ErrorsNameTheKey) {
  EXPECT_EQ(ErrorKey(R"({"num_users": 2, "gain": [[1, 0.1], [0.1]],
      "noise": [1, 1], "rate_min_bits": [1, 1]})"), "gain");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[1]], "noise": [0],
      "rate_min_bits": [1]})"), "noise");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[1]], "noise": [1],
      "rate_min_bits": [-1]})"), "rate_min_bits");
  EXPECT_EQ(ErrorKey(R"({"num_users": 9, "gain": [[1]], "noise": [1],
      "rate_min_bits": [1]})"), "num_users");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1.5, "gain": [[1]], "noise": [1],
      "rate_min_bits": [1]})"), "num_users");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[1]], "noise": [1],
      "rate_min_bits": [1], "extra": 3})"), "extra");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[1]], "noise": [1]})"),
            "rate_min_bits");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[1]], "noise": [1],
      "rate_min_bits": [1], "power_budget": 0})"), "power_budget");
  EXPECT_EQ(ErrorKey(R"({"num_users": 1, "gain": [[-1]], "noise": [1],
      "rate_min_bits": [1]})"), "gain");
  EXPECT_THROW(parse_scenario_text("{not json"), ValidationError);
  EXPECT_THROW(parse_scenario_text("[1, 2]"), ValidationError);
}

TEST(ParseScenario, MissingFile) {
  EXPECT_THROW(parse_scenario_file("/nonexistent/scenario.json"),
               ValidationError);
}

TEST(ScenarioJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Scenario sc = random_scenario(seed, 1 + static_cast<int>(seed % 4));
    if (seed % 2 == 0) {
      sc.power_budget = 12.5;
      sc.bandwidth_hz = 8e7;
    }
    const Scenario back = parse_scenario_text(scenario_to_json(sc));
    EXPECT_EQ(back.channel, sc.channel);
    EXPECT_EQ(back.rate_min, sc.rate_min);
    EXPECT_EQ(back.power_budget, sc.power_budget);
    EXPECT_EQ(back.bandwidth_hz, sc.bandwidth_hz);
    EXPECT_EQ(scenario_to_json(back), scenario_to_json(sc));
  }
}

TEST(ScenarioJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "icmac_io_test.json";
  const Scenario sc = random_scenario(3, 2);
  {
    std::ofstream f(path);
    f << scenario_to_json(sc);
  }
  EXPECT_EQ(parse_scenario_file(path.string()).channel, sc.channel);
  std::filesystem::remove(path);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(1e-12), "1e-12");
}

TEST(Csv, HeaderOnlyAndRows) {
  CsvTable t{{"a", "b"}, {}};
  EXPECT_EQ(to_csv(t), "a,b\n");
  t.AddRow({"1", "x,y"});
  EXPECT_EQ(to_csv(t), "a,b\n1,\"x,y\"\n");
  EXPECT_THROW(t.AddRow({"1"}), std::invalid_argument);
}

TEST(Csv, ExportWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "icmac_csv_test.csv";
  CsvTable t{{"r1_bits", "r2_bits"}, {{"1", "2"}}};
  export_csv(t, path.string());
  std::ifstream f(path);
  const std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(text, "r1_bits,r2_bits\n1,2\n");
  std::filesystem::remove(path);
  EXPECT_THROW(export_csv(t, "/nonexistent/dir/out.csv"), std::runtime_error);
}

}  // namespace
}  // namespace icmac
