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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hyperiso/canon.h"
#include "hyperiso/hypergraph.h"
#include "hyperiso/models.h"
#include "hyperiso/oracle.h"
#include "hyperiso/random.h"
#include "hyperiso/regcanon.h"

namespace hyperiso {
namespace {

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::kLabelingRate, "labeling-rate"},
    {ExperimentKind::kRegularRate, "regular-rate"},
    {ExperimentKind::kEkRate, "ek-rate"},
    {ExperimentKind::kDensityScan, "density-scan"},
    {ExperimentKind::kDispensable, "dispensable"},
    {ExperimentKind::kOccupancy, "occupancy"},
};

constexpr int kLabelingMaxN = 400;
constexpr int kRegularMaxN = 1000000;
constexpr int kDensityMaxT = 6;
constexpr std::uint64_t kMaxTrials = 10000000;

std::string FormatDouble(double v, const char* fmt = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

double Mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / xs.size();
}

double Max(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
}

// floor(n^exponent), nudged so exact powers are not lost to rounding.
std::size_t FloorPower(int n, double exponent) {
  return static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), exponent) + 1e-9));
}

std::size_t ColumnIndex(ExperimentKind kind, const std::string& name) {
  const auto cols = ColumnsFor(kind);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == name) return i;
  }
  throw std::logic_error("no column " + name);
}

std::vector<double> NumericColumn(const ExperimentConfig& config,
                                  const std::vector<TrialRow>& rows,
                                  const std::string& name) {
  const std::size_t i = ColumnIndex(config.kind, name);
  std::vector<double> out;
  for (const auto& row : rows) {
    if (row.fields[i] == "none" || row.fields[i] == "-") continue;
    out.push_back(std::stod(row.fields[i]));
  }
  return out;
}

std::size_t CountEqual(const ExperimentConfig& config,
                       const std::vector<TrialRow>& rows,
                       const std::string& name, const std::string& value) {
  const std::size_t i = ColumnIndex(config.kind, name);
  return std::count_if(rows.begin(), rows.end(), [&](const TrialRow& row) {
    return row.fields[i] == value;
  });
}

}  // namespace

const char* ToString(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ExperimentKind ParseExperimentKind(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw std::invalid_argument("unknown experiment kind '" + name + "'");
}

std::string ExperimentConfig::ToText() const {
  std::ostringstream out;
  out << "kind=" << hyperiso::ToString(kind) << '\n'
      << "n=" << n << '\n'
      << "k=" << k << '\n'
      << "p=" << FormatDouble(p, "%.17g") << '\n'
      << "r=" << r << '\n'
      << "mu=" << mu << '\n'
      << "s=" << s << '\n'
      << "tmax=" << tmax << '\n'
      << "max_tries=" << max_tries << '\n'
      << "trials=" << trials << '\n'
      << "seed=" << seed << '\n';
  return out.str();
}

ExperimentConfig ExperimentConfig::FromText(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "kind") {
        config.kind = ParseExperimentKind(value);
      } else if (key == "n") {
        config.n = std::stoi(value);
      } else if (key == "k") {
        config.k = std::stoi(value);
      } else if (key == "p") {
        config.p = std::stod(value);
      } else if (key == "r") {
        config.r = std::stoi(value);
      } else if (key == "mu") {
        config.mu = std::stoi(value);
      } else if (key == "s") {
        config.s = std::stoi(value);
      } else if (key == "tmax") {
        config.tmax = std::stoi(value);
      } else if (key == "max_tries") {
        config.max_tries = std::stoi(value);
      } else if (key == "trials") {
        config.trials = std::stoull(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return config;
}

void CheckGuards(const ExperimentConfig& c) {
  auto refuse = [](const std::string& guard, const std::string& detail) {
    throw ExperimentGuardError(guard + ": " + detail);
  };
  if (c.trials < 1 || c.trials > kMaxTrials) {
    refuse("trial-count guard", "trials must lie in [1, 10^7]");
  }
  auto check_regular = [&] {
    try {
      Validate(RegularParams{c.n, c.k, c.r, 0});
    } catch (const std::invalid_argument& e) {
      refuse("regular-model guard", e.what());
    }
    if (c.n > kRegularMaxN) refuse("regular-model guard", "n exceeds 10^6");
    if (c.max_tries < 1) refuse("regular-model guard", "max_tries must be >= 1");
  };
  switch (c.kind) {
    case ExperimentKind::kLabelingRate:
    case ExperimentKind::kEkRate:
      try {
        Validate(BinomialParams{c.n, c.k, c.p, 0});
      } catch (const std::invalid_argument& e) {
        refuse("binomial-model guard", e.what());
      }
      if (c.kind == ExperimentKind::kLabelingRate && c.n > kLabelingMaxN) {
        refuse("labeling size guard", "n exceeds " +
                                          std::to_string(kLabelingMaxN));
      }
      if (c.kind == ExperimentKind::kEkRate) {
        if (c.k < 3) refuse("link guard", "links need k >= 3");
        if (c.n - 1 > kDefaultOracleMaxN) {
          refuse("oracle size guard",
                 "links have " + std::to_string(c.n - 1) +
                     " vertices, above the oracle limit of " +
                     std::to_string(kDefaultOracleMaxN));
        }
      }
      break;
    case ExperimentKind::kRegularRate:
      check_regular();
      if (Rho(c.r, c.k) < 2) {
        refuse("profile-depth guard", "rho = (r-1)(k-1) must be >= 2");
      }
      if (c.n < 2) refuse("profile-depth guard", "n must be >= 2");
      break;
    case ExperimentKind::kDensityScan:
      check_regular();
      if (c.tmax < 1 || c.tmax > kDensityMaxT) {
        refuse("density-scan tmax guard",
               "tmax must lie in [1, " + std::to_string(kDensityMaxT) + "]");
      }
      break;
    case ExperimentKind::kDispensable:
      check_regular();
      if (c.n < 2) refuse("regular-model guard", "n must be >= 2");
      break;
    case ExperimentKind::kOccupancy:
      if (c.mu < 1 || c.r < 1 || c.s < 1 ||
          static_cast<long>(c.s) > static_cast<long>(c.r) * c.mu) {
        refuse("occupancy guard", "need mu, r >= 1 and 1 <= s <= r*mu");
      }
      if (c.mu > kRegularMaxN) refuse("occupancy guard", "mu exceeds 10^6");
      break;
  }
}

std::vector<std::string> ColumnsFor(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kLabelingRate:
      return {"edges", "status", "reason", "tied_classes"};
    case ExperimentKind::kRegularRate:
      return {"tries", "status", "tied_classes"};
    case ExperimentKind::kEkRate:
      return {"edges", "collisions"};
    case ExperimentKind::kDensityScan:
      return {"tries", "witness_edges", "witness_vertices"};
    case ExperimentKind::kDispensable:
      return {"budget_small", "dispensable_small", "budget_large",
              "dispensable_large"};
    case ExperimentKind::kOccupancy:
      return {"x_s", "max_in_block"};
  }
  return {};
}

TrialRow RunTrial(const ExperimentConfig& c, std::uint64_t trial) {
  TrialRow row;
  row.trial = trial;
  row.seed = DeriveSeed(c.seed, trial);
  const auto start = std::chrono::steady_clock::now();
  auto& f = row.fields;
  switch (c.kind) {
    case ExperimentKind::kLabelingRate: {
      const Hypergraph h = GenBinomial({c.n, c.k, c.p, row.seed});
      const LabelingOutcome outcome = CanonicalLabeling(h);
      f = {std::to_string(h.num_edges()), ToString(outcome.status),
           ToString(outcome.reason), std::to_string(outcome.tied_classes)};
      break;
    }
    case ExperimentKind::kRegularRate: {
      const RegularShape shape = MakeRegularShape(c.n, c.r, c.k);
      try {
        const RegularDraw draw =
            GenRegularSimple({c.n, c.k, c.r, row.seed}, c.max_tries);
        const LabelingOutcome outcome =
            RegularCanonicalLabeling(draw.hypergraph, shape);
        f = {std::to_string(draw.tries), ToString(outcome.status),
             std::to_string(outcome.tied_classes)};
      } catch (const RejectionExhausted&) {
        f = {std::to_string(c.max_tries), "rejected", "-"};
      }
      break;
    }
    case ExperimentKind::kEkRate: {
      const Hypergraph h = GenBinomial({c.n, c.k, c.p, row.seed});
      f = {std::to_string(h.num_edges()),
           std::to_string(LinkCollisionPairs(h).size())};
      break;
    }
    case ExperimentKind::kDensityScan: {
      try {
        const RegularDraw draw =
            GenRegularSimple({c.n, c.k, c.r, row.seed}, c.max_tries);
        const auto witness = FindDenseWitness(draw.hypergraph, c.tmax);
        f = {std::to_string(draw.tries),
             witness ? std::to_string(witness->edges.size()) : "none",
             witness ? std::to_string(witness->vertices.size()) : "none"};
      } catch (const RejectionExhausted&) {
        f = {std::to_string(c.max_tries), "-", "-"};
      }
      break;
    }
    case ExperimentKind::kDispensable: {
      const ConfigurationDraw draw =
          GenConfiguration({c.n, c.k, c.r, row.seed});
      const std::size_t small = std::max<std::size_t>(1, FloorPower(c.n, 0.4));
      const std::size_t large = std::max<std::size_t>(1, FloorPower(c.n, 0.6));
      f = {std::to_string(small),
           std::to_string(CountDispensable(draw.projected, 0, small)),
           std::to_string(large),
           std::to_string(CountDispensable(draw.projected, 0, large))};
      break;
    }
    case ExperimentKind::kOccupancy: {
      const auto [x, max_in_block] = DrawOccupancy(c.mu, c.r, c.s, row.seed);
      f = {std::to_string(x), std::to_string(max_in_block)};
      break;
    }
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

KeyValues Summarize(const ExperimentConfig& c,
                    const std::vector<TrialRow>& rows) {
  KeyValues out;
  const double trials = static_cast<double>(rows.size());
  auto frac = [&](std::size_t count) {
    return FormatDouble(trials > 0 ? count / trials : 0.0);
  };
  out.emplace_back("trials", std::to_string(rows.size()));
  switch (c.kind) {
    case ExperimentKind::kLabelingRate: {
      const auto ok = CountEqual(c, rows, "status", "success");
      out.emplace_back("successes", std::to_string(ok));
      out.emplace_back("success_fraction", frac(ok));
      out.emplace_back("mean_edges",
                       FormatDouble(Mean(NumericColumn(c, rows, "edges"))));
      out.emplace_back("max_tied_classes",
                       FormatDouble(Max(NumericColumn(c, rows, "tied_classes")),
                                    "%.0f"));
      break;
    }
    case ExperimentKind::kRegularRate: {
      const auto ok = CountEqual(c, rows, "status", "success");
      const auto shape = MakeRegularShape(c.n, c.r, c.k);
      out.emplace_back("rho", std::to_string(shape.rho));
      out.emplace_back("lstar", std::to_string(shape.lstar));
      out.emplace_back("lzero", std::to_string(shape.lzero));
      out.emplace_back("successes", std::to_string(ok));
      out.emplace_back("success_fraction", frac(ok));
      out.emplace_back("rejected",
                       std::to_string(CountEqual(c, rows, "status", "rejected")));
      out.emplace_back("mean_tries",
                       FormatDouble(Mean(NumericColumn(c, rows, "tries"))));
      const auto tied = NumericColumn(c, rows, "tied_classes");
      out.emplace_back("mean_tied_classes", FormatDouble(Mean(tied)));
      out.emplace_back("max_tied_classes", FormatDouble(Max(tied), "%.0f"));
      break;
    }
    case ExperimentKind::kEkRate: {
      const auto free = CountEqual(c, rows, "collisions", "0");
      const auto col = NumericColumn(c, rows, "collisions");
      out.emplace_back("collision_free", std::to_string(free));
      out.emplace_back("collision_free_fraction", frac(free));
      out.emplace_back("mean_collisions", FormatDouble(Mean(col)));
      out.emplace_back("max_collisions", FormatDouble(Max(col), "%.0f"));
      break;
    }
    case ExperimentKind::kDensityScan: {
      const auto sizes = NumericColumn(c, rows, "witness_edges");
      const auto rejected = CountEqual(c, rows, "witness_edges", "-");
      out.emplace_back("tmax", std::to_string(c.tmax));
      out.emplace_back("witnesses_found", std::to_string(sizes.size()));
      out.emplace_back("witness_fraction", frac(sizes.size()));
      out.emplace_back("rejected", std::to_string(rejected));
      out.emplace_back(
          "min_witness_edges",
          sizes.empty()
              ? "none"
              : FormatDouble(*std::min_element(sizes.begin(), sizes.end()),
                             "%.0f"));
      break;
    }
    case ExperimentKind::kDispensable: {
      const auto small = NumericColumn(c, rows, "dispensable_small");
      const auto large = NumericColumn(c, rows, "dispensable_large");
      const double quarter = std::pow(static_cast<double>(c.n), 0.25);
      const auto over20 =
          std::count_if(small.begin(), small.end(), [](double x) { return x > 20; });
      const auto over_quarter = std::count_if(
          large.begin(), large.end(), [&](double x) { return x > quarter; });
      out.emplace_back("mean_dispensable_small", FormatDouble(Mean(small)));
      out.emplace_back("max_dispensable_small", FormatDouble(Max(small), "%.0f"));
      out.emplace_back("small_above_20", std::to_string(over20));
      out.emplace_back("mean_dispensable_large", FormatDouble(Mean(large)));
      out.emplace_back("max_dispensable_large", FormatDouble(Max(large), "%.0f"));
      out.emplace_back("large_above_n_quarter", std::to_string(over_quarter));
      break;
    }
    case ExperimentKind::kOccupancy: {
      const auto xs = NumericColumn(c, rows, "x_s");
      const auto maxes = NumericColumn(c, rows, "max_in_block");
      const OccupancyDist exact = OccupancyExact(c.mu, c.r, c.s);
      std::map<int, std::size_t> counts;
      std::map<int, std::size_t> counts_max2;
      std::size_t kept = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++counts[static_cast<int>(xs[i])];
        if (maxes[i] <= 2) {
          ++counts_max2[static_cast<int>(xs[i])];
          ++kept;
        }
      }
      out.emplace_back("max3_or_more", std::to_string(xs.size() - kept));
      for (int j = exact.j_min; j <= exact.j_max; ++j) {
        const std::string tag = std::to_string(j);
        out.emplace_back("exact_P" + tag, exact.P(j).get_str());
        out.emplace_back("exact_P" + tag + "_dec",
                         FormatDouble(exact.P(j).get_d(), "%.9f"));
        out.emplace_back("mc_P" + tag, frac(counts_max2[j]));
      }
      double max_p = 0.0;
      for (const auto& p : exact.probs) max_p = std::max(max_p, p.get_d());
      out.emplace_back("exact_max_P", FormatDouble(max_p, "%.9f"));
      out.emplace_back(
          "bound_constant",
          FormatDouble(max_p * c.s / std::sqrt(static_cast<double>(c.mu)),
                       "%.6f"));
      break;
    }
  }
  return out;
}

ExperimentResult RunExperiment(const ExperimentConfig& config, int workers) {
  CheckGuards(config);
  if (workers <= 0) {
    if (const char* env = std::getenv("HYPERISO_WORKERS")) {
      workers = std::atoi(env);
    }
  }
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), config.trials));

  ExperimentResult result;
  result.config = config;
  result.columns = ColumnsFor(config.kind);
  result.rows.resize(config.trials);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        result.rows[t] = RunTrial(config, t);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = config.trials;
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = Summarize(config, result.rows);
  std::vector<double> times;
  for (const auto& row : result.rows) times.push_back(row.wall_ms);
  std::sort(times.begin(), times.end());
  auto pct = [&](double q) {
    const std::size_t idx = static_cast<std::size_t>(
        std::ceil(q * times.size())) - 1;
    return times[std::min(idx, times.size() - 1)];
  };
  double total = 0.0;
  for (double t : times) total += t;
  result.timing = {{"wall_ms_p50", FormatDouble(pct(0.5), "%.3f")},
                   {"wall_ms_p90", FormatDouble(pct(0.9), "%.3f")},
                   {"wall_ms_max", FormatDouble(times.back(), "%.3f")},
                   {"wall_ms_total", FormatDouble(total, "%.3f")}};
  return result;
}

void WriteCsv(std::ostream& out, const ExperimentResult& result) {
  out << "# hyperiso-exp v1 " << ToString(result.config.kind) << '\n';
  out << "# config";
  std::istringstream cfg(result.config.ToText());
  std::string line;
  while (std::getline(cfg, line)) out << ' ' << line;
  out << '\n';
  out << "trial,seed";
  for (const auto& col : result.columns) out << ',' << col;
  out << ",wall_ms\n";
  for (const auto& row : result.rows) {
    out << row.trial << ',' << row.seed;
    for (const auto& field : row.fields) out << ',' << field;
    out << ',' << FormatDouble(row.wall_ms, "%.3f") << '\n';
  }
  out << "# summary";
  for (const auto& [key, value] : result.summary) {
    out << ' ' << key << '=' << value;
  }
  out << '\n';
  out << "# timing";
  for (const auto& [key, value] : result.timing) {
    out << ' ' << key << '=' << value;
  }
  out << '\n';
}

}  // namespace hyperiso
