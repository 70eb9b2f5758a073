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

// Seeded trial campaigns with CSV output.
//
// Trial t runs on seed DeriveSeed(config.seed, t), so every row can be
// regenerated from (config, t) alone. The CSV layout is
//
//   # hyperiso-exp v1 <kind>
//   # config <key=value ...>
//   <header row>            trial,seed,...,wall_ms
//   <one row per trial>     in trial order
//   # summary <key=value ...>
//   # timing <key=value ...>
//
// wall_ms and the timing line are the only nondeterministic content.

#ifndef HYPERISO_EXPERIMENT_H_
#define HYPERISO_EXPERIMENT_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperiso {

enum class ExperimentKind {
  kLabelingRate,
  kRegularRate,
  kEkRate,
  kDensityScan,
  kDispensable,
  kOccupancy,
};

const char* ToString(ExperimentKind kind);
// Throws std::invalid_argument for unknown names.
ExperimentKind ParseExperimentKind(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kLabelingRate;
  int n = 0;
  int k = 3;
  double p = 0.0;
  int r = 3;
  int mu = 0;
  int s = 0;
  int tmax = 4;
  int max_tries = 10000;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  // Flat "key=value" lines.
  std::string ToText() const;
  static ExperimentConfig FromText(const std::string& text);

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// A named refusal: the message starts with the guard's name.
class ExperimentGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ExperimentGuardError when the config is out of range for its kind.
void CheckGuards(const ExperimentConfig& config);

struct TrialRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  // Experiment-specific columns, already formatted.
  std::vector<std::string> fields;
  double wall_ms = 0.0;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::string> columns;  // experiment-specific column names
  std::vector<TrialRow> rows;
  KeyValues summary;
  KeyValues timing;
};

std::vector<std::string> ColumnsFor(ExperimentKind kind);

// Runs one trial; deterministic apart from wall_ms.
TrialRow RunTrial(const ExperimentConfig& config, std::uint64_t trial);

// Deterministic summary of the rows.
KeyValues Summarize(const ExperimentConfig& config,
                    const std::vector<TrialRow>& rows);

// Worker count: `workers` if positive, else HYPERISO_WORKERS, else the
// available hardware parallelism.
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               int workers = 0);

void WriteCsv(std::ostream& out, const ExperimentResult& result);

}  // namespace hyperiso

#endif  // HYPERISO_EXPERIMENT_H_
