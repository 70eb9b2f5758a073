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

#include "hyperiso/experiment.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hyperiso/random.h"

namespace hyperiso {
namespace {

ExperimentConfig Config(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.seed = 7;
  c.trials = 12;
  switch (kind) {
    case ExperimentKind::kLabelingRate:
      c.n = 20;
      c.p = 0.3;
      break;
    case ExperimentKind::kRegularRate:
    case ExperimentKind::kDensityScan:
    case ExperimentKind::kDispensable:
      c.n = 60;
      break;
    case ExperimentKind::kEkRate:
      c.n = 12;
      c.p = 0.4;
      break;
    case ExperimentKind::kOccupancy:
      c.mu = 5;
      c.r = 2;
      c.s = 3;
      break;
  }
  return c;
}

const std::vector<ExperimentKind> kAllKinds = {
    ExperimentKind::kLabelingRate, ExperimentKind::kRegularRate,
    ExperimentKind::kEkRate,       ExperimentKind::kDensityScan,
    ExperimentKind::kDispensable,  ExperimentKind::kOccupancy};

// CSV with the segregated wall-time column and timing line removed.
std::string DeterministicCsv(const ExperimentResult& result) {
  std::ostringstream raw;
  WriteCsv(raw, result);
  std::istringstream in(raw.str());
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# timing", 0) == 0) continue;
    if (line[0] != '#') line = line.substr(0, line.rfind(','));
    out << line << '\n';
  }
  return out.str();
}

std::string Lookup(const KeyValues& kv, const std::string& key) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  return "<missing>";
}

TEST(ExperimentConfigTest, TextRoundTrip) {
  for (ExperimentKind kind : kAllKinds) {
    ExperimentConfig c = Config(kind);
    c.p = 0.1 + 0.2;  // not exactly representable in short decimal
    c.seed = 18446744073709551615ULL;
    EXPECT_EQ(ExperimentConfig::FromText(c.ToText()), c);
    EXPECT_EQ(ParseExperimentKind(ToString(kind)), kind);
  }
}

TEST(ExperimentConfigTest, FromTextRejectsGarbage) {
  EXPECT_THROW(ExperimentConfig::FromText("bogus=1\n"), std::invalid_argument);
  EXPECT_THROW(ExperimentConfig::FromText("n\n"), std::invalid_argument);
  EXPECT_THROW(ExperimentConfig::FromText("n=abc\n"), std::invalid_argument);
  EXPECT_THROW(ParseExperimentKind("nope"), std::invalid_argument);
  const auto c = ExperimentConfig::FromText("# comment\n\nkind=ek-rate\nn=9\n");
  EXPECT_EQ(c.kind, ExperimentKind::kEkRate);
  EXPECT_EQ(c.n, 9);
}

void ExpectGuard(ExperimentConfig c, const std::string& guard) {
  try {
    CheckGuards(c);
    ADD_FAILURE() << "no guard fired; expected " << guard;
  } catch (const ExperimentGuardError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(guard, 0), 0u) << e.what();
  }
}

TEST(CheckGuardsTest, NamesTheGuard) {
  auto c = Config(ExperimentKind::kEkRate);
  c.n = 40;
  ExpectGuard(c, "oracle size guard");
  c = Config(ExperimentKind::kLabelingRate);
  c.n = 5000;
  ExpectGuard(c, "labeling size guard");
  c = Config(ExperimentKind::kLabelingRate);
  c.p = 2;
  ExpectGuard(c, "binomial-model guard");
  c = Config(ExperimentKind::kDensityScan);
  c.tmax = 9;
  ExpectGuard(c, "density-scan tmax guard");
  c = Config(ExperimentKind::kRegularRate);
  c.n = 59;
  c.r = 2;  // 118 points do not split into triples
  ExpectGuard(c, "regular-model guard");
  c = Config(ExperimentKind::kOccupancy);
  c.s = 11;
  ExpectGuard(c, "occupancy guard");
  c = Config(ExperimentKind::kOccupancy);
  c.trials = 0;
  ExpectGuard(c, "trial-count guard");
  c = Config(ExperimentKind::kRegularRate);
  c.r = 1;
  ExpectGuard(c, "profile-depth guard");
  EXPECT_THROW(RunExperiment(c, 1), ExperimentGuardError);
}

TEST(RunExperimentTest, RowsFollowTrialOrderAndDerivedSeeds) {
  for (ExperimentKind kind : kAllKinds) {
    const ExperimentConfig c = Config(kind);
    const ExperimentResult result = RunExperiment(c, 3);
    ASSERT_EQ(result.rows.size(), c.trials);
    EXPECT_EQ(result.columns, ColumnsFor(kind));
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      EXPECT_EQ(result.rows[t].trial, t);
      EXPECT_EQ(result.rows[t].seed, DeriveSeed(c.seed, t));
      EXPECT_EQ(result.rows[t].fields.size(), result.columns.size());
      EXPECT_EQ(result.rows[t].fields, RunTrial(c, t).fields);
    }
  }
}

TEST(RunExperimentTest, CsvReproducibleAcrossWorkerCounts) {
  for (ExperimentKind kind : kAllKinds) {
    const ExperimentConfig c = Config(kind);
    EXPECT_EQ(DeterministicCsv(RunExperiment(c, 1)),
              DeterministicCsv(RunExperiment(c, 4)))
        << ToString(kind);
  }
}

TEST(RunExperimentTest, SummaryRecomputesFromRows) {
  for (ExperimentKind kind : kAllKinds) {
    const ExperimentResult result = RunExperiment(Config(kind), 2);
    EXPECT_EQ(Summarize(result.config, result.rows), result.summary);
    EXPECT_EQ(Lookup(result.summary, "trials"),
              std::to_string(result.rows.size()));
  }
}

TEST(RunExperimentTest, LabelingSummaryCountsSuccesses) {
  ExperimentConfig c = Config(ExperimentKind::kLabelingRate);
  c.n = 30;
  c.trials = 20;
  const ExperimentResult result = RunExperiment(c, 2);
  int ok = 0;
  for (const auto& row : result.rows) ok += row.fields[1] == "success";
  EXPECT_EQ(Lookup(result.summary, "successes"), std::to_string(ok));
}

TEST(RunExperimentTest, OccupancySummaryEchoesExactValues) {
  ExperimentConfig c = Config(ExperimentKind::kOccupancy);
  c.trials = 2000;
  const ExperimentResult result = RunExperiment(c, 2);
  EXPECT_EQ(Lookup(result.summary, "exact_P2"), "1/3");
  EXPECT_EQ(Lookup(result.summary, "exact_P3"), "2/3");
  EXPECT_NEAR(std::stod(Lookup(result.summary, "mc_P2")), 1.0 / 3, 0.05);
}

TEST(WriteCsvTest, Layout) {
  const ExperimentConfig c = Config(ExperimentKind::kEkRate);
  std::ostringstream out;
  WriteCsv(out, RunExperiment(c, 1));
  std::istringstream in(out.str());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3 + c.trials + 2);
  EXPECT_EQ(lines[0], "# hyperiso-exp v1 ek-rate");
  EXPECT_EQ(lines[1].rfind("# config kind=ek-rate n=12", 0), 0u);
  EXPECT_EQ(lines[2], "trial,seed,edges,collisions,wall_ms");
  EXPECT_EQ(lines[3].rfind("0," + std::to_string(DeriveSeed(7, 0)) + ",", 0),
            0u);
  EXPECT_EQ(lines[lines.size() - 2].rfind("# summary trials=12", 0), 0u);
  EXPECT_EQ(lines.back().rfind("# timing wall_ms_p50=", 0), 0u);
}

}  // namespace
}  // namespace hyperiso
