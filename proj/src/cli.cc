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

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperiso/canon.h"
#include "hyperiso/experiment.h"
#include "hyperiso/hypergraph.h"
#include "hyperiso/models.h"
#include "hyperiso/oracle.h"
#include "hyperiso/regcanon.h"
#include "hyperiso/text_format.h"

namespace hyperiso {
namespace {

class NoInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NoInputError("cannot open '" + path + "'");
  return in;
}

Hypergraph LoadHypergraph(const std::string& path) {
  auto in = OpenInput(path);
  return ParseHypergraph(in);
}

MultiHypergraph LoadMultiHypergraph(const std::string& path) {
  auto in = OpenInput(path);
  return ParseMultiHypergraph(in);
}

// Writes to `path`, or to `out` when path is empty.
template <typename Fn>
void WithOutput(const std::string& path, std::ostream& out, Fn fn) {
  if (path.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw NoInputError("cannot write '" + path + "'");
  fn(file);
}

void PrintLabeling(std::ostream& out, const std::vector<Vertex>& labeling) {
  out << "labeling";
  for (Vertex v : labeling) out << ' ' << v;
  out << '\n';
}

int VerdictExit(IsoVerdict verdict) {
  switch (verdict) {
    case IsoVerdict::kIsomorphic:
      return kExitOk;
    case IsoVerdict::kNonIsomorphic:
      return kExitNegative;
    case IsoVerdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct GenArgs {
  std::string model;
  int n = 0;
  int k = 3;
  double p = -1.0;
  int r = 0;
  std::uint64_t seed = 0;
  int max_tries = 10000;
  std::string out;
  std::string emit_config;
};

int RunGen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  if (a.model == "binomial") {
    if (a.p < 0.0) throw std::invalid_argument("--p is required for binomial");
    const Hypergraph h = GenBinomial({a.n, a.k, a.p, a.seed});
    const ThresholdReport report = ValidateThreshold(a.n, a.k, a.p);
    err << "threshold p_ratio=" << report.p_ratio
        << " q_ratio=" << report.q_ratio << " " << ToString(report.status)
        << '\n';
    WithOutput(a.out, out, [&](std::ostream& o) { WriteText(o, h); });
    return kExitOk;
  }
  if (a.r < 1) throw std::invalid_argument("--r is required for " + a.model);
  const RegularParams params{a.n, a.k, a.r, a.seed};
  if (a.model == "config") {
    const ConfigurationDraw draw = GenConfiguration(params);
    WithOutput(a.out, out,
               [&](std::ostream& o) { WriteText(o, draw.projected); });
    if (!a.emit_config.empty()) {
      WithOutput(a.emit_config, out, [&](std::ostream& o) {
        for (const auto& block : draw.config.blocks) {
          for (std::size_t i = 0; i < block.size(); ++i) {
            o << (i ? " " : "") << block[i];
          }
          o << '\n';
        }
        o << "owner";
        const std::uint32_t points =
            static_cast<std::uint32_t>(params.r) * params.n;
        for (std::uint32_t w = 0; w < points; ++w) {
          o << ' ' << draw.config.owner(w);
        }
        o << '\n';
      });
    }
    return kExitOk;
  }
  if (a.model == "regular-simple") {
    const RegularDraw draw = GenRegularSimple(params, a.max_tries);
    err << "tries=" << draw.tries << '\n';
    WithOutput(a.out, out,
               [&](std::ostream& o) { WriteText(o, draw.hypergraph); });
    return kExitOk;
  }
  throw CLI::ValidationError("--model",
                             "must be binomial, config or regular-simple");
}

int RunCanon(const std::string& path, std::ostream& out) {
  const Hypergraph h = LoadHypergraph(path);
  const LabelingOutcome outcome = CanonicalLabeling(h);
  out << "status " << ToString(outcome.status) << '\n';
  if (outcome.success()) {
    PrintLabeling(out, outcome.labeling);
    out << "certificate " << MakeCertificate(h, outcome).Hex() << '\n';
    return kExitOk;
  }
  out << "reason " << ToString(outcome.reason) << '\n';
  out << "tied_classes " << outcome.tied_classes << '\n';
  return kExitInconclusive;
}

int RunIso(const std::string& a_path, const std::string& b_path,
           bool use_oracle, std::ostream& out) {
  const Hypergraph a = LoadHypergraph(a_path);
  const Hypergraph b = LoadHypergraph(b_path);
  IsoResult result = IsoTest(a, b);
  if (result.verdict == IsoVerdict::kInconclusive && use_oracle &&
      a.n() <= kDefaultOracleMaxN) {
    result.verdict = BruteIso(a, b).has_value() ? IsoVerdict::kIsomorphic
                                                : IsoVerdict::kNonIsomorphic;
    result.decided_by = "oracle";
  }
  out << "verdict " << ToString(result.verdict) << '\n';
  out << "decided-by " << result.decided_by << '\n';
  return VerdictExit(result.verdict);
}

int RunRegProfile(const std::string& path, int r, int limit, bool csv,
                  std::ostream& out) {
  const MultiHypergraph h = LoadMultiHypergraph(path);
  const RegularShape shape = MakeRegularShape(h.n(), r, h.k());
  const LabelingOutcome outcome = RegularCanonicalLabeling(h, shape);
  const auto profiles = DistanceProfiles(h, shape.lstar);
  const std::size_t shown =
      limit < 0 ? profiles.size()
                : std::min(profiles.size(), static_cast<std::size_t>(limit));
  const char* prefix = csv ? "# " : "";
  out << prefix << "rho " << shape.rho << '\n';
  out << prefix << "lstar " << shape.lstar << '\n';
  out << prefix << "lzero " << shape.lzero << '\n';
  if (csv) {
    out << "vertex";
    for (int l = 1; l <= shape.lstar; ++l) out << ",d" << l;
    out << ",label\n";
  }
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& p = profiles[i];
    out << p.vertex << (csv ? "" : ":");
    for (std::uint32_t d : p.sizes) out << (csv ? "," : " ") << d;
    if (csv) {
      out << ',';
      if (outcome.success()) out << outcome.labeling[p.vertex];
    }
    out << '\n';
  }
  out << prefix << "status " << ToString(outcome.status) << '\n';
  out << prefix << "tied_classes " << outcome.tied_classes << '\n';
  return outcome.success() ? kExitOk : kExitInconclusive;
}

int RunOraclePj(int mu, int r, int s, std::uint64_t mc_trials,
                std::uint64_t seed, std::ostream& out) {
  const OccupancyDist exact = OccupancyExact(mu, r, s);
  std::optional<OccupancySample> sample;
  if (mc_trials > 0) sample = OccupancyMonteCarlo(mu, r, s, mc_trials, seed);
  out << "j\tfraction\tdecimal";
  if (sample) out << "\tmc_max2\tmc_any";
  out << '\n';
  for (int j = exact.j_min; j <= exact.j_max; ++j) {
    out << j << '\t' << exact.P(j).get_str() << '\t' << std::setprecision(9)
        << exact.P(j).get_d();
    if (sample) {
      const double t = static_cast<double>(sample->trials);
      out << '\t' << sample->counts_max2[j] / t << '\t'
          << sample->counts[j] / t;
    }
    out << '\n';
  }
  out << "total\t" << exact.Total().get_str() << '\t' << exact.Total().get_d()
      << '\n';
  if (sample) {
    out << "max3_or_more\t" << sample->max3_or_more << '\n';
    out << "conditional_tv\t" << ConditionalTotalVariation(exact, *sample)
        << '\n';
  }
  return kExitOk;
}

struct ExpArgs {
  std::string kind;
  std::string config_path;
  std::string out;
  int workers = 0;
  ExperimentConfig values;
};

int RunExp(const ExpArgs& a, const CLI::App& sub, std::ostream& out,
           std::ostream& err) {
  ExperimentConfig config;
  if (!a.config_path.empty()) {
    auto in = OpenInput(a.config_path);
    std::stringstream text;
    text << in.rdbuf();
    config = ExperimentConfig::FromText(text.str());
  }
  config.kind = ParseExperimentKind(a.kind);
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--n")) config.n = a.values.n;
  if (given("--k")) config.k = a.values.k;
  if (given("--p")) config.p = a.values.p;
  if (given("--r")) config.r = a.values.r;
  if (given("--mu")) config.mu = a.values.mu;
  if (given("--s")) config.s = a.values.s;
  if (given("--tmax")) config.tmax = a.values.tmax;
  if (given("--max-tries")) config.max_tries = a.values.max_tries;
  if (given("--trials")) config.trials = a.values.trials;
  if (given("--seed")) config.seed = a.values.seed;
  const ExperimentResult result = RunExperiment(config, a.workers);
  WithOutput(a.out, out, [&](std::ostream& o) { WriteCsv(o, result); });
  if (!a.out.empty()) {
    err << "# summary";
    for (const auto& [key, value] : result.summary) {
      err << ' ' << key << '=' << value;
    }
    err << '\n';
  }
  return kExitOk;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Canonical labeling workbench for random uniform hypergraphs",
               "hyperiso"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Draw a random hypergraph");
  gen_cmd->add_option("--model", gen.model, "binomial|config|regular-simple")
      ->required()
      ->check(CLI::IsMember({"binomial", "config", "regular-simple"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--k", gen.k, "Edge size")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Edge probability (binomial)");
  gen_cmd->add_option("--r", gen.r, "Degree (config, regular-simple)");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->capture_default_str();
  gen_cmd->add_option("--max-tries", gen.max_tries,
                      "Rejection limit for regular-simple")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--emit-config", gen.emit_config,
                      "Also write the block partition (config model)");

  std::string canon_path;
  auto* canon_cmd =
      app.add_subcommand("canon", "Canonical labeling and certificate");
  canon_cmd->add_option("file", canon_path, "Hypergraph file")->required();

  std::string iso_a;
  std::string iso_b;
  bool no_oracle = false;
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism verdict");
  iso_cmd->add_option("file1", iso_a)->required();
  iso_cmd->add_option("file2", iso_b)->required();
  iso_cmd->add_flag("--no-oracle", no_oracle,
                    "Do not fall back to exhaustive search when inconclusive");

  std::string reg_path;
  int reg_r = 0;
  int reg_limit = -1;
  bool reg_csv = false;
  auto* reg_cmd = app.add_subcommand(
      "regprofile", "Distance profiles and labeling of a regular instance");
  reg_cmd->add_option("file", reg_path)->required();
  reg_cmd->add_option("--r", reg_r, "Degree")->required();
  reg_cmd->add_option("--limit", reg_limit, "Print at most this many profiles");
  reg_cmd->add_flag("--csv", reg_csv, "One CSV row per vertex");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth");
  oracle_cmd->require_subcommand(1);
  int oracle_max_n = kDefaultOracleMaxN;
  oracle_cmd->add_option("--max-n", oracle_max_n, "Size guard")
      ->capture_default_str();
  std::string oiso_a;
  std::string oiso_b;
  auto* oiso_cmd = oracle_cmd->add_subcommand("iso", "Brute-force isomorphism");
  oiso_cmd->add_option("file1", oiso_a)->required();
  oiso_cmd->add_option("file2", oiso_b)->required();
  std::string aut_path;
  auto* aut_cmd =
      oracle_cmd->add_subcommand("aut", "Is the automorphism group trivial?");
  aut_cmd->add_option("file", aut_path)->required();
  std::string ek_path;
  auto* ek_cmd =
      oracle_cmd->add_subcommand("ek", "Pairs of vertices with isomorphic links");
  ek_cmd->add_option("file", ek_path)->required();
  int pj_mu = 0;
  int pj_r = 0;
  int pj_s = 0;
  std::uint64_t pj_mc = 0;
  std::uint64_t pj_seed = 0;
  auto* pj_cmd =
      oracle_cmd->add_subcommand("pj", "Exact block-occupancy distribution");
  pj_cmd->add_option("--mu", pj_mu, "Block count")->required();
  pj_cmd->add_option("--r", pj_r, "Block size")->required();
  pj_cmd->add_option("--s", pj_s, "Sample size")->required();
  pj_cmd->add_option("--mc", pj_mc, "Monte-Carlo draws");
  pj_cmd->add_option("--seed", pj_seed)->capture_default_str();

  ExpArgs exp;
  auto* exp_cmd = app.add_subcommand("exp", "Run a seeded experiment campaign");
  exp_cmd->add_option("kind", exp.kind,
                      "labeling-rate|regular-rate|ek-rate|density-scan|"
                      "dispensable|occupancy")
      ->required()
      ->check(CLI::IsMember({"labeling-rate", "regular-rate", "ek-rate",
                             "density-scan", "dispensable", "occupancy"}));
  exp_cmd->add_option("--config", exp.config_path, "key=value config file");
  exp_cmd->add_option("--n", exp.values.n);
  exp_cmd->add_option("--k", exp.values.k);
  exp_cmd->add_option("--p", exp.values.p);
  exp_cmd->add_option("--r", exp.values.r);
  exp_cmd->add_option("--mu", exp.values.mu);
  exp_cmd->add_option("--s", exp.values.s);
  exp_cmd->add_option("--tmax", exp.values.tmax);
  exp_cmd->add_option("--max-tries", exp.values.max_tries);
  exp_cmd->add_option("--trials", exp.values.trials);
  exp_cmd->add_option("--seed", exp.values.seed);
  exp_cmd->add_option("--out", exp.out, "CSV output file (default stdout)");
  exp_cmd->add_option("--workers", exp.workers,
                      "Worker threads (default HYPERISO_WORKERS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return RunGen(gen, out, err);
    if (canon_cmd->parsed()) return RunCanon(canon_path, out);
    if (iso_cmd->parsed()) return RunIso(iso_a, iso_b, !no_oracle, out);
    if (reg_cmd->parsed()) {
      return RunRegProfile(reg_path, reg_r, reg_limit, reg_csv, out);
    }
    if (oiso_cmd->parsed()) {
      const auto mapping = BruteIso(LoadHypergraph(oiso_a),
                                    LoadHypergraph(oiso_b), oracle_max_n);
      out << "verdict "
          << (mapping ? "isomorphic" : "non-isomorphic") << '\n';
      if (mapping) {
        out << "mapping";
        for (Vertex v : *mapping) out << ' ' << v;
        out << '\n';
      }
      return mapping ? kExitOk : kExitNegative;
    }
    if (aut_cmd->parsed()) {
      const bool trivial =
          AutomorphismTrivial(LoadHypergraph(aut_path), oracle_max_n);
      out << "automorphism-group " << (trivial ? "trivial" : "nontrivial")
          << '\n';
      return kExitOk;
    }
    if (ek_cmd->parsed()) {
      const auto pairs = LinkCollisionPairs(LoadHypergraph(ek_path),
                                            oracle_max_n);
      out << "collisions " << pairs.size() << '\n';
      for (const auto& [i, j] : pairs) out << i << ' ' << j << '\n';
      return kExitOk;
    }
    if (pj_cmd->parsed()) {
      return RunOraclePj(pj_mu, pj_r, pj_s, pj_mc, pj_seed, out);
    }
    if (exp_cmd->parsed()) return RunExp(exp, *exp_cmd, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ExperimentGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const RejectionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hyperiso
