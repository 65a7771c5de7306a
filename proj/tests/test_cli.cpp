// Copyright 2026 The qdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qdisc/bounds.hpp"
#include "qdisc/cli.hpp"
#include "qdisc/states.hpp"

namespace qdisc {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

// Parses CSV output: comment lines start with '#', then one header row.
struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  for (const auto& line : split(text, '\n')) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      EXPECT_TRUE(csv.header.empty()) << "comment after header: " << line;
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line, ',');
    } else {
      const auto cells = split(line, ',');
      EXPECT_EQ(cells.size(), csv.header.size()) << line;
      std::map<std::string, std::string> row;
      for (std::size_t k = 0; k < cells.size() && k < csv.header.size(); ++k) {
        row[csv.header[k]] = cells[k];
      }
      csv.rows.push_back(row);
    }
  }
  return csv;
}

double num(const std::map<std::string, std::string>& row, const std::string& key) {
  return std::stod(row.at(key));
}

TEST(CliBounds, Example1TwoCopies) {
  const auto r = run({"bounds", "--family", "example1", "--v", "0.5", "--M", "2", "--q", "0.5",
                      "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_NEAR(num(csv.rows[0], "helstrom"), 0.25, 1e-12);
  for (const char* col : {"M", "helstrom", "kappa", "s_star", "R", "epsilon_M",
                          "epsilon_prime_M", "one_minus_R"}) {
    EXPECT_TRUE(csv.rows[0].count(col)) << col;
  }
}

TEST(CliBounds, OrthogonalPureStates) {
  const auto r = run({"bounds", "--family", "example2", "--v", "0", "--alpha", "1.5707963", "--M",
                      "1", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(num(parse_csv(r.out).rows[0], "helstrom"), 0.0, 1e-12);
}

TEST(CliBounds, MaximallyMixed) {
  const auto r = run({"bounds", "--family", "example1", "--v", "1", "--M", "5", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto row = parse_csv(r.out).rows.at(0);
  EXPECT_NEAR(num(row, "helstrom"), 0.5, 1e-12);
  EXPECT_NEAR(num(row, "kappa"), 1.0, 1e-12);
}

TEST(CliBounds, EchoesConfiguration) {
  const auto r = run({"bounds", "--family", "example1", "--v", "0.5", "--M", "3"});
  ASSERT_EQ(r.code, kExitOk);
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.comments.at(0), std::string("# qdisc ") + kToolVersion);
  EXPECT_EQ(csv.comments.at(1), "# command = bounds");
  EXPECT_NE(r.out.find("# v = 0.5"), std::string::npos);
  EXPECT_NE(r.out.find("# M = 3"), std::string::npos);
}

TEST(CliBounds, AlphaDegreesMatchRadians) {
  const auto deg = run({"bounds", "--family", "example2", "--v", "0.2", "--alpha-deg", "45",
                        "--M", "2", "--format", "csv"});
  const auto rad = run({"bounds", "--family", "example2", "--v", "0.2", "--alpha",
                        "0.785398163397448", "--M", "2", "--format", "csv"});
  ASSERT_EQ(deg.code, kExitOk);
  ASSERT_EQ(rad.code, kExitOk);
  EXPECT_EQ(parse_csv(deg.out).rows, parse_csv(rad.out).rows);
}

TEST(CliBounds, TwelveSignificantDigits) {
  const auto r = run({"bounds", "--family", "example1", "--v", "0.3", "--M", "4", "--format",
                      "csv"});
  const std::string h = parse_csv(r.out).rows.at(0).at("helstrom");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", helstrom_example1(0.3, 4));
  EXPECT_EQ(h, buf);
}

TEST(CliBounds, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "qdisc_cli_bounds.csv";
  const auto r = run({"bounds", "--family", "example1", "--v", "0.5", "--M", "2", "--format",
                      "csv", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NEAR(num(parse_csv(ss.str()).rows.at(0), "helstrom"), 0.25, 1e-12);
  std::filesystem::remove(path);
}

TEST(CliConfig, FileValuesAndFlagPrecedence) {
  const auto path = std::filesystem::temp_directory_path() / "qdisc_cli_config.toml";
  {
    std::ofstream cfg(path);
    cfg << "[bounds]\nfamily = \"example1\"\nv = 0.5\nM = 2\nformat = \"csv\"\n";
  }
  const auto from_file = run({"bounds", "--config", path.string()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NEAR(num(parse_csv(from_file.out).rows.at(0), "helstrom"), 0.25, 1e-12);

  const auto flag_wins = run({"bounds", "--config", path.string(), "--v", "1"});
  ASSERT_EQ(flag_wins.code, kExitOk) << flag_wins.err;
  EXPECT_NEAR(num(parse_csv(flag_wins.out).rows.at(0), "helstrom"), 0.5, 1e-12);
  std::filesystem::remove(path);
}

TEST(CliExit, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--family", "example1", "--v", "1.5", "--M", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--family", "example2", "--alpha", "0.1", "--alpha-deg", "10"}).code,
            kExitUsage);
  EXPECT_EQ(run({"figure", "11"}).code, kExitUsage);
  EXPECT_EQ(run({"circuit-opt", "--M", "3"}).code, kExitUsage);  // --seed is required
  EXPECT_EQ(run({"strategy", "--kind", "locc", "--family", "example2", "--M", "11"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "--only", "99"}).code, kExitUsage);
}

TEST(CliExit, HelpIsSuccess) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(CliStrategy, LoccSaturatesTwoCopyHelstrom) {
  const auto r = run({"strategy", "--kind", "locc", "--family", "example2", "--v", "0.1",
                      "--alpha", "0.7853982", "--M", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto row = parse_csv(r.out).rows.at(0);
  const double ph = helstrom_general(build_example2({0.1, 0.7853982}), 2);
  EXPECT_NEAR(num(row, "error"), ph, 1e-10);
  EXPECT_NEAR(num(row, "P_H"), ph, 1e-11);
}

TEST(CliStrategy, BranchListing) {
  const auto r = run({"strategy", "--kind", "first-local", "--family", "example2", "--v", "0.1",
                      "--alpha", "0.7853982", "--M", "3", "--phi", "0.3", "--branches"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("posterior"), std::string::npos);
}

TEST(CliCircuit, DeterministicOutput) {
  const std::vector<std::string> args = {"circuit-opt", "--M",    "3", "--final", "1",
                                         "--layers",    "2",      "--hops", "2", "--iters",
                                         "40",          "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# seed = 42"), std::string::npos);
  EXPECT_NE(a.out.find("# best_angles = "), std::string::npos);
}

TEST(CliCircuit, TraceFile) {
  const auto path = std::filesystem::temp_directory_path() / "qdisc_cli_trace.csv";
  const auto r = run({"circuit-opt", "--M", "2", "--final", "1", "--hops", "3", "--iters", "40",
                      "--seed", "1", "--trace", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto csv = parse_csv(ss.str());
  EXPECT_EQ(csv.header, (std::vector<std::string>{"hop", "iterations", "best_value"}));
  EXPECT_EQ(csv.rows.size(), 3u);
  std::filesystem::remove(path);
}

TEST(CliFigure, Figure2Columns) {
  const auto r = run({"figure", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"v", "M", "one_minus_R", "delta_M_plus_2"}));
  EXPECT_FALSE(csv.rows.empty());
}

TEST(CliFigure, Figure4StaysBelowChernoff) {
  const auto r = run({"figure", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  ASSERT_FALSE(csv.rows.empty());
  for (const auto& row : csv.rows) EXPECT_GT(num(row, "one_minus_R"), 0.0);
}

TEST(CliFigure, Figure7Columns) {
  const auto r = run({"figure", "7", "--phi-points", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"M", "phi", "P_first_local",
                                                  "P_helstrom_then_local", "P_LOCC", "P_H"}));
  EXPECT_EQ(csv.rows.size(), 15u);
  for (const auto& row : csv.rows) {
    EXPECT_LE(num(row, "P_H"), num(row, "P_LOCC") + 1e-11);
    EXPECT_LE(num(row, "P_H"), num(row, "P_first_local") + 1e-11);
  }
}

TEST(CliSweep, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> base = {"sweep",   "--family", "example2", "--v", "0.1,0.4",
                                         "--alpha", "0.3,0.9",  "--M-min",  "1",   "--M-max",
                                         "4",       "--outputs", "helstrom,chernoff,R,strategies",
                                         "--format", "csv"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const auto a = run(one);
  const auto b = run(four);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_csv(a.out).rows.size(), 16u);
}

TEST(CliVerify, SingleCriterion) {
  const auto r = run({"verify", "--only", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace qdisc
