// Copyright 2026 The hyperiso Authors.
//
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

#include "hyperiso/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "hyperiso/text_format.h"

namespace hyperiso {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun run;
  run.code = CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hyperiso_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

int CountDataRows(const std::string& csv) {
  std::istringstream in(csv);
  int rows = -1;  // header row
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  return rows;
}

TEST_F(CliTest, IsoSelfIsExitZero) {
  const std::string a = Write("a.txt", "3 6 3\n0 1 2\n0 3 4\n1 3 5\n");
  const CliRun run = Cli({"iso", a, a});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("verdict isomorphic"), std::string::npos);
}

TEST_F(CliTest, IsoFallsBackToOracleOnlyWhenAllowed) {
  const std::string k4 = Write("k4.txt", "3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  const CliRun with = Cli({"iso", k4, k4});
  EXPECT_EQ(with.code, kExitOk);
  EXPECT_NE(with.out.find("decided-by oracle"), std::string::npos);
  const CliRun without = Cli({"iso", "--no-oracle", k4, k4});
  EXPECT_EQ(without.code, kExitInconclusive);
  EXPECT_NE(without.out.find("both-ambiguous"), std::string::npos);
}

TEST_F(CliTest, IsoDetectsEdgeCountDifference) {
  const std::string a = Write("a.txt", "3 5 1\n0 1 2\n");
  const std::string b = Write("b.txt", "3 5 2\n0 1 2\n0 3 4\n");
  const CliRun run = Cli({"iso", a, b});
  EXPECT_EQ(run.code, kExitNegative);
  EXPECT_NE(run.out.find("decided-by edge-count"), std::string::npos);
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  const CliRun run = Cli({"frobnicate"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_NE(run.err.find("Usage"), std::string::npos);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"exp", "no-such-kind"}).code, kExitUsage);
}

TEST_F(CliTest, HelpIsExitZero) {
  const CliRun run = Cli({"--help"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(run.out.find("regprofile"), std::string::npos);
  EXPECT_EQ(Cli({"canon", "--help"}).code, kExitOk);
}

TEST_F(CliTest, MissingAndMalformedFiles) {
  EXPECT_EQ(Cli({"canon", Path("missing.txt")}).code, kExitNoInput);
  const std::string bad = Write("bad.txt", "3 4 1\n0 1\n");
  const CliRun run = Cli({"canon", bad});
  EXPECT_EQ(run.code, kExitDataError);
  EXPECT_NE(run.err.find("line 2"), std::string::npos) << run.err;
}

TEST_F(CliTest, GenThenCanon) {
  const std::string file = Path("h.txt");
  const CliRun gen = Cli({"gen", "--model", "binomial", "--n", "30", "--k", "3",
                       "--p", "0.3", "--seed", "5", "--out", file});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  EXPECT_NE(gen.err.find("in-regime"), std::string::npos);
  EXPECT_NO_THROW(ReadHypergraphFile(file));
  const CliRun canon = Cli({"canon", file});
  EXPECT_TRUE(canon.code == kExitOk || canon.code == kExitInconclusive);
  EXPECT_EQ(canon.out.rfind("status ", 0), 0u);
  if (canon.code == kExitOk) {
    EXPECT_NE(canon.out.find("certificate 031e"), std::string::npos);
  }
  // Same seed, same bytes.
  const CliRun again = Cli({"gen", "--model", "binomial", "--n", "30", "--p",
                         "0.3", "--seed", "5"});
  std::ifstream in(file);
  std::stringstream saved;
  saved << in.rdbuf();
  EXPECT_EQ(again.out, saved.str());
}

TEST_F(CliTest, GenConfigEmitsPartition) {
  const std::string blocks = Path("blocks.txt");
  const CliRun run = Cli({"gen", "--model", "config", "--n", "6", "--r", "2",
                       "--k", "3", "--seed", "1", "--emit-config", blocks});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(run.out.rfind("3 6 ", 0), 0u);
  std::ifstream in(blocks);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines.back(), "owner 0 0 1 1 2 2 3 3 4 4 5 5");
}

TEST_F(CliTest, GenRegularSimpleImpossibleIsGuard) {
  const CliRun run = Cli({"gen", "--model", "regular-simple", "--n", "3", "--r",
                       "2", "--k", "3", "--max-tries", "50"});
  EXPECT_EQ(run.code, kExitGuard);
}

TEST_F(CliTest, RegProfile) {
  const std::string file = Write("d.txt", "3 3 1 multi\n0 1 2 x2\n");
  const CliRun run = Cli({"regprofile", file, "--r", "2"});
  EXPECT_EQ(run.code, kExitInconclusive);
  EXPECT_NE(run.out.find("rho 2"), std::string::npos);
  EXPECT_NE(run.out.find("lstar 1"), std::string::npos);
  EXPECT_NE(run.out.find("0: 2\n"), std::string::npos);
  const CliRun csv = Cli({"regprofile", file, "--r", "2", "--csv"});
  EXPECT_NE(csv.out.find("vertex,d1,label\n0,2,\n"), std::string::npos);
}

TEST_F(CliTest, OraclePj) {
  const CliRun run = Cli({"oracle", "pj", "--mu", "5", "--r", "2", "--s", "3"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("2\t1/3\t"), std::string::npos);
  EXPECT_NE(run.out.find("3\t2/3\t"), std::string::npos);
  EXPECT_NE(run.out.find("total\t1\t"), std::string::npos);
}

TEST_F(CliTest, OracleSubcommands) {
  const std::string k4 = Write("k4.txt", "3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  const CliRun aut = Cli({"oracle", "aut", k4});
  EXPECT_NE(aut.out.find("nontrivial"), std::string::npos);
  const CliRun ek = Cli({"oracle", "ek", k4});
  EXPECT_NE(ek.out.find("collisions 6"), std::string::npos);
  EXPECT_EQ(Cli({"oracle", "--max-n", "3", "aut", k4}).code, kExitGuard);
  EXPECT_EQ(Cli({"oracle", "iso", k4, k4}).code, kExitOk);
}

TEST_F(CliTest, ExpRowCountContract) {
  const CliRun run = Cli({"exp", "labeling-rate", "--n", "60", "--k", "3", "--p",
                       "0.3", "--trials", "100", "--seed", "7"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(run.out.rfind("# hyperiso-exp v1 labeling-rate\n", 0), 0u);
  EXPECT_EQ(CountDataRows(run.out), 100);
}

TEST_F(CliTest, ExpConfigFileWithOverridesAndGuard) {
  const std::string cfg =
      Write("exp.cfg", "kind=occupancy\nmu=5\nr=2\ns=3\ntrials=40\nseed=3\n");
  const CliRun run = Cli({"exp", "occupancy", "--config", cfg, "--trials", "25"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(CountDataRows(run.out), 25);
  EXPECT_NE(run.out.find("exact_P2=1/3"), std::string::npos);

  const CliRun guard = Cli({"exp", "ek-rate", "--n", "50", "--p", "0.3"});
  EXPECT_EQ(guard.code, kExitGuard);
  EXPECT_NE(guard.err.find("oracle size guard"), std::string::npos);
}

}  // namespace
}  // namespace hyperiso
