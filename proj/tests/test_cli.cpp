// Copyright 2026 The partex Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "partex/cli.hpp"

using namespace partex;
using Json = nlohmann::ordered_json;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_captured(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(PARTEX_GOLDEN_DIR) + "/" + name); }

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "partex_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(main, version) {
  Captured c = run_captured({"--version"});
  EXPECT_EQ(c.code, cli::kExitOk);
  EXPECT_NE(c.out.find("0.1.0"), std::string::npos);
}

TEST(main, usage_errors) {
  EXPECT_EQ(run_captured({}).code, cli::kExitUsage);
  EXPECT_EQ(run_captured({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_captured({"construct", "--name", "W_r"}).code, cli::kExitUsage);
  EXPECT_EQ(run_captured({"construct", "--name", "E", "--r", "3", "--n", "3", "--s", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_captured({"search", "--mode", "matching", "--s", "2", "--r", "3", "--n", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run_captured({"analyze", temp_path("missing.txt").string()}).code, cli::kExitUsage);
}

TEST(main, construct_golden) {
  Captured c = run_captured({"construct", "--name", "W_r", "--r", "3", "--n", "3"});
  EXPECT_EQ(c.code, cli::kExitOk);
  EXPECT_EQ(c.out, golden("construct_W_r_3_3.txt"));
}

TEST(main, search_json_golden) {
  Captured c = run_captured({"--json", "search", "--mode", "matching", "--s", "1", "--sizes", "3,2,2"});
  ASSERT_EQ(c.code, cli::kExitOk) << c.err;
  Json j = Json::parse(c.out);
  EXPECT_EQ(j["schema"], cli::kReportSchema);
  EXPECT_EQ(j["header"]["version"], cli::kVersion);
  EXPECT_TRUE(j["header"]["wall_seconds"].is_number());
  EXPECT_EQ(j["body"].dump(2) + "\n", golden("search_matching_s1_322.json"));
}

TEST(main, bodies_are_deterministic) {
  std::vector<std::string> args{"--json", "search", "--mode", "intersecting", "--t", "2", "--r", "4", "--n", "2"};
  Json a = Json::parse(run_captured(args).out);
  Json b = Json::parse(run_captured(args).out);
  EXPECT_EQ(a["body"], b["body"]);
  EXPECT_EQ(a["body"]["results"]["optimum"], 5);
}

TEST(main, text_header_line) {
  Captured c = run_captured({"search", "--mode", "intersecting", "--t", "1", "--r", "3", "--n", "2"});
  ASSERT_EQ(c.code, cli::kExitOk);
  EXPECT_EQ(c.out.rfind("# partex 0.1.0 search wall=", 0), 0u);
  EXPECT_NE(c.out.find("optimum 4 (proven)"), std::string::npos);
}

TEST(main, file_pipeline) {
  auto fam = temp_path("e331.txt");
  ASSERT_EQ(run_captured({"construct", "--name", "E", "--r", "3", "--n", "3", "--s", "1", "--out", fam.string()}).code,
            cli::kExitOk);
  Captured a = run_captured({"--json", "analyze", fam.string(), "--s", "1"});
  ASSERT_EQ(a.code, cli::kExitOk);
  Json ja = Json::parse(a.out)["body"]["results"];
  EXPECT_EQ(ja["nu"], 1);
  EXPECT_EQ(ja["tau"], 2);
  EXPECT_EQ(ja["nontrivial_matching"], true);

  Captured b = run_captured({"--json", "base", fam.string(), "--s", "1"});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;

  auto shifted = temp_path("e331_shifted.txt");
  Captured s = run_captured({"--json", "shift", fam.string(), "--t", "1", "--out", shifted.string()});
  ASSERT_EQ(s.code, cli::kExitOk) << s.err;
  EXPECT_TRUE(std::filesystem::exists(shifted));
}

TEST(main, base_rejects_trivial_family) {
  auto fam = temp_path("star.txt");
  std::ofstream(fam) << "PARTITE 3\nSIZES 2 2 2\n1 1 1\n1 2 2\n1 1 2\n";
  EXPECT_EQ(run_captured({"base", fam.string(), "--s", "1"}).code, cli::kExitUsage);
}

TEST(main, verify_theorems_all_n) {
  Captured c = run_captured({"--json", "verify-theorems", "--suite", "all-n", "--max-vectors", "16"});
  ASSERT_EQ(c.code, cli::kExitOk) << c.err;
  Json rows = Json::parse(c.out)["body"]["results"]["rows"];
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_EQ(row["status"], "EQUAL");
}
