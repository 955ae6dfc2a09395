// Copyright 2026 The ledpgraph Authors
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

// Experiment harness: run one algorithm, sweep an epsilon x seed grid, run
// the statistical DP smoke test, or drive a built-in LA spec.
//
// Exit codes: 0 ok, 1 algorithm or input error, 2 usage error.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ledp/ledp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAlgorithm = 1;
constexpr int kExitUsage = 2;

// LEDP_OUTPUT_DIR, when set, is the directory every output file lands in.
std::filesystem::path ResolveOutput(const std::string& output) {
  const char* dir = std::getenv("LEDP_OUTPUT_DIR");
  std::filesystem::path p(output);
  if (dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / p.filename();
  }
  return p;
}

void Emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p = ResolveOutput(output);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  out << text;
}

void AddRunFlags(CLI::App* app, ledp::RunConfig& c) {
  app->add_option("--algorithm", c.algorithm, "Algorithm to run")
      ->check(CLI::IsMember(ledp::KnownAlgorithms()));
  app->add_option("--epsilon", c.epsilon, "Privacy budget");
  app->add_option("--eta", c.eta, "Approximation parameter");
  app->add_option("--psi", c.psi, "Level growth parameter");
  app->add_option("--lambda", c.lambda, "Estimate constant");
  app->add_option("--seed", c.seed, "Master seed");
  app->add_flag("--noiseless", c.noiseless, "Zero every noise draw");
  app->add_flag("--strict-paper-estimate", c.strict_paper_estimate,
                "Divide levels by 4 ceil(log n) when estimating");
  app->add_flag("--debug-nonprivate", c.debug_nonprivate,
                "Log raw counts and noise");
  app->add_flag("--zero-additive", c.zero_additive,
                "Drop additive terms in densest-dp tests");
  app->add_option("--c0", c.c0, "Phase constant for densest-dp");
  app->add_option("--c1", c.c1, "Membership constant for densest-dp");
  app->add_option("--c2", c.c2, "Density constant for densest-dp");
  app->add_option("--c", c.c, "Additive correction for densest-ledp");
  app->add_option("--input", c.input, "Edge list path or gen:... spec")
      ->required();
  app->add_option("--output", c.output, "Report path (stdout if unset)");
  app->add_flag("--full-transcript", c.full_transcript,
                "Include per-message payloads");
}

std::vector<std::string> SplitCsv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

template <typename T>
std::vector<T> ParseList(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const std::string& tok : SplitCsv(s)) {
    std::istringstream in(tok);
    T v;
    if (!(in >> v) || !in.eof()) {
      throw ledp::UsageError(std::string("bad ") + what + " list entry '" +
                             tok + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ledp::UsageError(std::string("empty ") + what + " list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private k-core, ordering and densest subgraph experiments"};
  app.require_subcommand(1);

  ledp::RunConfig run_cfg;
  CLI::App* run = app.add_subcommand("run", "Run one algorithm");
  AddRunFlags(run, run_cfg);

  ledp::RunConfig sweep_cfg;
  std::string epsilons = "0.5,1,2", seeds = "0,1,2";
  CLI::App* sweep = app.add_subcommand("sweep", "CSV rows over an epsilon x seed grid");
  AddRunFlags(sweep, sweep_cfg);
  sweep->add_option("--epsilons", epsilons, "Comma-separated epsilons");
  sweep->add_option("--seeds", seeds, "Comma-separated seeds");

  std::string smoke_alg = "core-ledp", smoke_out;
  double smoke_eps = 1.0;
  std::int64_t smoke_trials = ledp::kSmokeTestMinTrials, smoke_support = 200;
  std::uint64_t smoke_seed = 0;
  bool smoke_noiseless = false;
  CLI::App* smoke = app.add_subcommand(
      "smoke-test", "Empirical privacy-ratio check on a 3-node neighboring pair");
  smoke->add_option("--algorithm", smoke_alg, "core-ledp or core-ledp-fast");
  smoke->add_option("--epsilon", smoke_eps, "Privacy budget");
  smoke->add_option("--trials", smoke_trials, "Trials per graph");
  smoke->add_option("--seed", smoke_seed, "Master seed");
  smoke->add_option("--min-support", smoke_support,
                    "Minimum combined count for an outcome to be compared");
  smoke->add_flag("--noiseless", smoke_noiseless, "Refused; present for symmetry");
  smoke->add_option("--output", smoke_out, "Report path (stdout if unset)");

  ledp::RunConfig la_cfg;
  std::string la_spec, la_spec_file, la_mode = "ledp";
  std::int64_t la_phases = 4;
  CLI::App* la = app.add_subcommand("la", "Run a built-in locally adjustable spec");
  la->add_option("--spec", la_spec, "counting, kcore or edge-load");
  la->add_option("--spec-file", la_spec_file, "JSON descriptor");
  la->add_option("--mode", la_mode, "dp or ledp");
  la->add_option("--phases", la_phases, "Phases for edge-load");
  la->add_option("--epsilon", la_cfg.epsilon, "Privacy budget");
  la->add_option("--psi", la_cfg.psi, "Level growth parameter (kcore)");
  la->add_option("--lambda", la_cfg.lambda, "Estimate constant (kcore)");
  la->add_option("--seed", la_cfg.seed, "Master seed");
  la->add_flag("--noiseless", la_cfg.noiseless, "Zero every noise draw");
  la->add_option("--input", la_cfg.input, "Edge list path or gen:... spec")
      ->required();
  la->add_option("--output", la_cfg.output, "Report path (stdout if unset)");
  la->add_flag("--full-transcript", la_cfg.full_transcript,
               "Include per-message payloads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) {
      nlohmann::json rep = ledp::Run(run_cfg);
      Emit(rep.dump(2) + "\n", run_cfg.output);
    } else if (*sweep) {
      auto eps = ParseList<double>(epsilons, "epsilon");
      auto sds = ParseList<std::uint64_t>(seeds, "seed");
      sweep_cfg.Validate();
      Emit(ledp::Sweep(sweep_cfg, eps, sds), sweep_cfg.output);
    } else if (*smoke) {
      if (smoke_alg != "core-ledp" && smoke_alg != "core-ledp-fast") {
        throw ledp::UsageError("smoke test supports core-ledp and core-ledp-fast");
      }
      if (smoke_noiseless) {
        throw ledp::UsageError("smoke test refuses noiseless runs");
      }
      if (smoke_trials < ledp::kSmokeTestMinTrials) {
        throw ledp::UsageError("smoke test needs at least " +
                               std::to_string(ledp::kSmokeTestMinTrials) +
                               " trials");
      }
      if (!(smoke_eps > 0)) throw ledp::UsageError("epsilon must be positive");
      ledp::SmokeTestReport r = ledp::DpSmokeTest(
          smoke_alg, smoke_eps, smoke_trials, smoke_seed, false, smoke_support);
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [key, o] : r.histogram) {
        hist[key] = {{"path", o.count_g}, {"triangle", o.count_g_prime}};
      }
      nlohmann::json j = {{"algorithm", r.algorithm},
                          {"epsilon", r.epsilon},
                          {"trials", r.trials},
                          {"seed", smoke_seed},
                          {"min_support", r.min_support},
                          {"max_ratio", r.max_ratio},
                          {"bound", r.bound},
                          {"flagged", r.flagged},
                          {"outcomes_considered", r.outcomes_considered},
                          {"histogram", hist}};
      Emit(j.dump(2) + "\n", smoke_out);
    } else if (*la) {
      ledp::LaDescriptor desc;
      if (!la_spec_file.empty()) {
        std::ifstream in(la_spec_file);
        if (!in) throw ledp::UsageError("cannot read '" + la_spec_file + "'");
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw ledp::UsageError(std::string("bad descriptor: ") + e.what());
        }
        desc = ledp::LaDescriptor::FromJson(j);
      } else {
        desc.spec = la_spec.empty() ? "counting" : la_spec;
        desc.mode = la_mode;
        desc.phases = la_phases;
      }
      nlohmann::json rep = ledp::RunLaReport(la_cfg, desc);
      Emit(rep.dump(2) + "\n", la_cfg.output);
    }
  } catch (const ledp::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAlgorithm;
  }
  return kExitOk;
}
