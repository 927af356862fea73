// Copyright 2026 The forbid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "forbid/cli.hpp"

namespace forbid::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "forbid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "forbid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("forbid_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(ParseArgs, SearchCode) {
  const RunConfig c = parse({"search", "--n", "4", "--q", "2", "--forbid", "2"});
  EXPECT_EQ(c.subcommand, Subcommand::search);
  EXPECT_EQ(c.kind, "code");
  EXPECT_EQ(*c.n, 4U);
  EXPECT_EQ(*c.q, 2U);
  EXPECT_EQ(c.forbid, (std::vector<std::uint64_t>{2}));
}

TEST(ParseArgs, ListsAndRationals) {
  const RunConfig c = parse({"search", "--n", "5", "--q", "3", "--forbid", "1,3", "--seed", "9"});
  EXPECT_EQ(c.forbid, (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(c.seed, 9U);
  const RunConfig e = parse({"bounds", "ledger", "--eps", "0.25", "--context", "sunflower"});
  EXPECT_EQ(*e.eps, Rational(1, 4));
  EXPECT_EQ(e.context, "sunflower");
}

TEST(ParseArgs, MissingOptionNamesFlag) {
  try {
    parse({"search", "--n", "4"});
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("--q"), std::string::npos);
  }
  EXPECT_THROW(parse({"bounds", "fw", "--n", "7", "--k", "3"}), UsageError);
  EXPECT_THROW(parse({"extract", "--cube", "--n", "4", "--q", "2", "--d", "2"}), UsageError);
  EXPECT_THROW(parse({"construct", "parity", "--n", "4", "--format", "json"}), UsageError);
}

TEST(ParseArgs, MalformedValues) {
  EXPECT_THROW(parse({"bounds", "fw", "--n", "seven", "--k", "3", "--l", "1"}), UsageError);
  EXPECT_THROW(parse({"bounds", "cfw", "--eps", "1/0"}), UsageError);
  EXPECT_THROW(parse({"bounds", "cfw", "--eps", "abc"}), UsageError);
  EXPECT_THROW(parse({"bounds", "nonsense"}), UsageError);
  EXPECT_THROW(parse({"search", "--n", "4", "--q", "2", "--forbid", "2", "--format", "xml"}), UsageError);
  EXPECT_THROW(parse({}), UsageError);
}

TEST(Run, BoundsTextOutput) {
  const Outcome o = invoke({"bounds", "fw", "--n", "7", "--k", "3", "--l", "1"});
  EXPECT_EQ(o.code, kSuccess);
  EXPECT_NE(o.out.find("value: 7\n"), std::string::npos) << o.out;
}

TEST(Run, JsonCarriesInvocationAndSeed) {
  const Outcome o = invoke({"search", "--n", "4", "--q", "2", "--forbid", "2", "--seed", "5", "--format", "json"});
  ASSERT_EQ(o.code, kSuccess);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["invocation"], "forbid search --n 4 --q 2 --forbid 2 --seed 5 --format json");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["optimum"], 4);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"search", "--n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
  const std::string parity = temp_file("parity.code", "2 3\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
  EXPECT_EQ(invoke({"pairs", "--input", parity, "--d", "2"}).code, kSuccess);
  const Outcome absent = invoke({"pairs", "--input", parity, "--d", "1"});
  EXPECT_EQ(absent.code, kAbsent);
  EXPECT_NE(absent.out.find("count: 0"), std::string::npos);
  const Outcome budget =
      invoke({"search", "--n", "6", "--q", "2", "--forbid", "3", "--budget-nodes", "1", "--threads", "1"});
  EXPECT_EQ(budget.code, kBudget) << budget.out << budget.err;
  std::remove(parity.c_str());
}

TEST(Run, ParseErrorsReportLines) {
  const std::string bad = temp_file("bad.code", "2 3\n0 0 0\n0 2 0\n");
  const Outcome o = invoke({"pairs", "--input", bad, "--d", "1"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
  EXPECT_EQ(invoke({"pairs", "--input", "/nonexistent/forbid.code", "--d", "1"}).code, kUsage);
  std::remove(bad.c_str());
}

TEST(Run, ConstructWritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "forbid_cli_parity_out.code").string();
  const Outcome o = invoke({"construct", "parity", "--n", "4", "--output", path, "--format", "json"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  EXPECT_EQ(Json::parse(o.out)["size"], 8);
  EXPECT_EQ(read_code(path).code, parity_code(4));
  std::remove(path.c_str());
}

TEST(Run, ExtractOnCubeFindsPair) {
  const Outcome o =
      invoke({"extract", "--cube", "--n", "6", "--q", "2", "--d", "2", "--eps", "1/10", "--format", "json"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_TRUE(j["found"].get<bool>());
  EXPECT_EQ(j["pair"]["distance"], 2);
}

TEST(Run, SupersatDeterministicAcrossThreads) {
  auto run = [](const char* threads) {
    Json j = Json::parse(invoke({"supersat", "--cube", "--n", "4", "--q", "3", "--d", "2", "--eta", "2/5", "--trials",
                                 "200", "--seed", "7", "--threads", threads, "--format", "json"})
                             .out);
    j.erase("invocation");
    return j;
  };
  EXPECT_EQ(run("1"), run("3"));
}

TEST(Run, CrossAgainstFile) {
  const std::string d = temp_file("d.code", "2 4\n1 1 1 1\n");
  const Outcome o = invoke({"cross", "--cube", "--n", "4", "--q", "2", "--against", d, "--d", "3", "--gamma", "1"});
  EXPECT_EQ(o.code, kSuccess) << o.err;
  std::remove(d.c_str());
}

}  // namespace
}  // namespace forbid::cli
