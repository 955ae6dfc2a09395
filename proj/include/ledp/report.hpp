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

#ifndef LEDP_REPORT_HPP_
#define LEDP_REPORT_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ledp/core_decomposition.hpp"
#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/la_framework.hpp"
#include "ledp/ledger.hpp"
#include "ledp/ledp_densest.hpp"
#include "ledp/mwu_densest.hpp"
#include "ledp/oracles.hpp"

namespace ledp {

inline const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAlgorithms = {
      "core-ledp", "core-ledp-fast", "densest-ledp",
      "densest-dp", "orient",        "oracle"};
  return kAlgorithms;
}

struct RunConfig {
  std::string algorithm = "core-ledp";
  double epsilon = 1.0;
  double eta = 0.05;
  double psi = 0.5;
  double lambda = 0.25;
  std::uint64_t seed = 0;
  bool noiseless = false;
  bool strict_paper_estimate = false;
  bool debug_nonprivate = false;
  // Zero the additive terms of the MWU threshold tests.
  bool zero_additive = false;
  double c0 = 1, c1 = 1, c2 = 1, c = 1;
  // Edge-list path, or a generator: gen:er:N:P:SEED, gen:clique:K,
  // gen:cycle:N, gen:path:N, gen:star:LEAVES, gen:empty:N, gen:k4pendant,
  // gen:clique-tree:K:DEPTH.
  std::string input;
  std::string output;
  bool full_transcript = false;

  void Validate() const {
    const auto& algs = KnownAlgorithms();
    if (std::find(algs.begin(), algs.end(), algorithm) == algs.end()) {
      throw UsageError("unknown algorithm '" + algorithm + "'");
    }
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
      throw UsageError("epsilon must be positive");
    }
    if (!(psi > 0 && psi < 1)) throw UsageError("psi must lie in (0, 1)");
    if (!(lambda > 0 && lambda < 1)) {
      throw UsageError("lambda must lie in (0, 1)");
    }
    if (!(eta > 0) || !std::isfinite(eta)) throw UsageError("eta must be positive");
    if (algorithm == "densest-dp" && !(eta < 1.0 / 12)) {
      throw UsageError("densest-dp needs eta in (0, 1/12)");
    }
    for (double v : {c0, c1, c2}) {
      if (!(v > 0) || !std::isfinite(v)) {
        throw UsageError("c0, c1, c2 must be positive");
      }
    }
    if (!(c >= 0) || !std::isfinite(c)) throw UsageError("c must be >= 0");
    if (input.empty()) throw UsageError("no input graph given");
  }

  LevelConfig level_config() const {
    LevelConfig lc;
    lc.psi = psi;
    lc.lambda = lambda;
    lc.eta = eta;
    lc.strict_estimate = strict_paper_estimate;
    return lc;
  }

  RunOptions run_options() const {
    RunOptions o;
    o.seed = seed;
    o.noiseless = noiseless;
    o.debug_nonprivate = debug_nonprivate;
    o.record_messages = full_transcript;
    return o;
  }

  nlohmann::json ToJson() const {
    return {{"algorithm", algorithm},
            {"epsilon", epsilon},
            {"eta", eta},
            {"psi", psi},
            {"lambda", lambda},
            {"seed", seed},
            {"noiseless", noiseless},
            {"strict_paper_estimate", strict_paper_estimate},
            {"debug_nonprivate", debug_nonprivate},
            {"zero_additive", zero_additive},
            {"consts", {{"c0", c0}, {"c1", c1}, {"c2", c2}, {"c", c}}},
            {"input", input},
            {"full_transcript", full_transcript}};
  }
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;  // empty for generated graphs
};

inline LoadedGraph LoadInputGraph(const std::string& input) {
  LoadedGraph out;
  if (input.rfind("gen:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(input.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto num = [&](std::size_t i) -> double {
      if (i >= parts.size()) throw UsageError("bad generator '" + input + "'");
      try {
        return std::stod(parts[i]);
      } catch (const std::exception&) {
        throw UsageError("bad generator '" + input + "'");
      }
    };
    const std::string kind = parts.empty() ? "" : parts[0];
    auto count = [&](std::size_t i) {
      double v = num(i);
      if (v < 0 || v > 1e7 || v != std::floor(v)) {
        throw UsageError("bad generator size in '" + input + "'");
      }
      return static_cast<NodeId>(v);
    };
    if (kind == "er") {
      out.graph = ErdosRenyi(count(1), num(2),
                             static_cast<std::uint64_t>(num(3)));
    } else if (kind == "clique") {
      out.graph = CompleteGraph(count(1));
    } else if (kind == "cycle") {
      out.graph = CycleGraph(count(1));
    } else if (kind == "path") {
      out.graph = PathGraph(count(1));
    } else if (kind == "star") {
      out.graph = StarGraph(count(1));
    } else if (kind == "empty") {
      out.graph = EmptyGraph(count(1));
    } else if (kind == "k4pendant") {
      out.graph = K4PlusPendant();
    } else if (kind == "clique-tree") {
      out.graph = CliquePlusTree(count(1), static_cast<int>(count(2)));
    } else {
      throw UsageError("unknown generator '" + input + "'");
    }
    return out;
  }
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot read input '" + input + "'");
  RemappedGraph r = LoadEdgeListRemapped(in);
  out.graph = std::move(r.graph);
  out.original_ids = std::move(r.original_ids);
  return out;
}

inline nlohmann::json RationalJson(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"value", r.ToDouble()}};
}

inline nlohmann::json DensityJson(const Density& d) {
  return {{"edges", d.edges},
          {"nodes", d.nodes},
          {"value", d.ToDouble()}};
}

inline nlohmann::json LedgerJson(const BudgetLedger& l) {
  nlohmann::json entries = nlohmann::json::array();
  for (const LedgerEntry& e : l.entries()) {
    entries.push_back({{"label", e.label},
                       {"per_call_share", ToString(e.per_call_share)},
                       {"per_call_epsilon",
                        static_cast<double>(e.per_call_share) * l.budget()},
                       {"calls", e.calls},
                       {"group_factor", e.group_factor}});
  }
  return {{"budget", l.budget()},
          {"total_share", ToString(l.total_share())},
          {"total_epsilon", l.total_epsilon()},
          {"spent_exactly", l.SpentExactly()},
          {"entries", entries}};
}

// Core-number error metrics, recomputed from raw outputs. The
// multiplicative error only ranges over nodes with k(i) > 0.
struct CoreErrors {
  std::optional<double> max_multiplicative;
  double max_additive = 0;
};

inline CoreErrors ComputeCoreErrors(const CoreEstimates& est,
                                    const CoreVector& exact) {
  CoreErrors e;
  for (std::size_t i = 0; i < est.size(); ++i) {
    double k = static_cast<double>(exact[i]);
    e.max_additive = std::max(e.max_additive, std::abs(est[i] - k));
    if (exact[i] > 0) {
      double r = est[i] / k;
      e.max_multiplicative = std::max(e.max_multiplicative.value_or(0.0), r);
    }
  }
  return e;
}

// Smallest zeta with k(i) - zeta <= est(i) <= phi * k(i) + zeta for all i.
inline double ApproximationSlack(const CoreEstimates& est,
                                 const CoreVector& exact, double phi) {
  double zeta = 0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    double k = static_cast<double>(exact[i]);
    zeta = std::max({zeta, k - est[i], est[i] - phi * k});
  }
  return zeta;
}

// Executes one configured run and returns the report as JSON. The graph is
// only loaded after the configuration validates.
inline nlohmann::json Run(const RunConfig& config) {
  config.Validate();
  auto start = std::chrono::steady_clock::now();
  LoadedGraph loaded = LoadInputGraph(config.input);
  const Graph& g = loaded.graph;
  const NodeId n = g.num_nodes();
  nlohmann::json rep;
  rep["config"] = config.ToJson();
  rep["graph"] = {{"n", n}, {"m", g.num_edges()}};
  if (!loaded.original_ids.empty()) {
    rep["graph"]["id_map"] = loaded.original_ids;
  }
  nlohmann::json warnings = nlohmann::json::array();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json metrics = {{"max_multiplicative_error", nullptr},
                            {"max_additive_error", nullptr},
                            {"density_achieved", nullptr},
                            {"density_ratio_to_optimum", nullptr},
                            {"rounds", 0},
                            {"max_message_bits", 0},
                            {"max_out_degree", nullptr}};
  nlohmann::json ledger = nullptr;
  nlohmann::json transcript = nullptr;

  CoreVector exact = ExactCoreNumbers(g);
  std::int64_t degeneracy = Degeneracy(g);
  nlohmann::json oracle = {{"core_numbers", exact},
                           {"degeneracy", degeneracy},
                           {"densest_density", nullptr},
                           {"densest_method", nullptr}};
  std::optional<Density> optimum;
  const bool wants_densest = config.algorithm == "densest-ledp" ||
                             config.algorithm == "densest-dp" ||
                             config.algorithm == "oracle";
  if (wants_densest && n > 0) {
    if (n <= kBruteForceMaxNodes) {
      optimum = ExactDensestSubgraph(g).density;
      oracle["densest_density"] = DensityJson(*optimum);
      oracle["densest_method"] = "brute-force";
    } else {
      warnings.push_back("n = " + std::to_string(n) + " exceeds the " +
                         std::to_string(kBruteForceMaxNodes) +
                         "-node brute-force cap; exact densest oracle omitted");
      DensestResult peel = CharikarPeel(g);
      oracle["charikar_density"] = DensityJson(peel.density);
    }
  }
  auto attach_density = [&](const std::vector<NodeId>& nodes) {
    if (nodes.empty()) return;
    Density d = InducedDensity(g, nodes);
    metrics["density_achieved"] = DensityJson(d);
    if (optimum && optimum->edges > 0) {
      metrics["density_ratio_to_optimum"] =
          (d.value() / optimum->value()).ToDouble();
    }
  };
  auto attach_core_errors = [&](const CoreEstimates& est) {
    CoreErrors e = ComputeCoreErrors(est, exact);
    if (e.max_multiplicative) {
      metrics["max_multiplicative_error"] = *e.max_multiplicative;
    }
    metrics["max_additive_error"] = e.max_additive;
  };
  auto attach_transcript = [&](const Transcript& t) {
    metrics["rounds"] = t.num_rounds();
    metrics["max_message_bits"] = t.max_message_bits();
    transcript = t.ToJson(config.full_transcript);
  };

  const RunOptions opt = config.run_options();
  const LevelConfig lc = config.level_config();
  if (config.algorithm == "core-ledp" || config.algorithm == "orient") {
    auto r = LedpCoreDecomposition(g, config.epsilon, lc, opt);
    outputs["levels"] = r.final_levels;
    outputs["estimates"] = r.estimates;
    outputs["ordering"] = r.ordering;
    attach_core_errors(r.estimates);
    attach_transcript(r.transcript);
    ledger = LedgerJson(r.ledger);
    if (config.algorithm == "orient") {
      std::int64_t out_deg = OrientationOutdegree(g, r.ordering);
      metrics["max_out_degree"] = out_deg;
      if (degeneracy > 0) {
        metrics["out_degree_over_degeneracy"] =
            static_cast<double>(out_deg) / static_cast<double>(degeneracy);
      }
    }
  } else if (config.algorithm == "core-ledp-fast") {
    auto r = LedpCoreDecompositionFast(g, config.epsilon, lc, opt);
    outputs["estimates"] = r.estimates;
    attach_core_errors(r.estimates);
    attach_transcript(r.transcript);
    ledger = LedgerJson(r.ledger);
  } else if (config.algorithm == "densest-ledp") {
    auto r = LedpDensestSubgraph(g, config.epsilon, lc, opt, config.c);
    outputs["nodes"] = r.output.nodes;
    outputs["reported_density"] = RationalJson(r.output.reported_density);
    outputs["noisy_degree_sum"] = r.output.noisy_degree_sum;
    attach_density(r.output.nodes);
    attach_transcript(r.transcript);
    ledger = LedgerJson(r.ledger);
  } else if (config.algorithm == "densest-dp") {
    MwuConsts mc{config.c0, config.c1, config.c2,
                 config.c > 0 ? config.c : 1.0, config.zero_additive};
    auto r = DpDensest(g, config.eta, config.epsilon, mc, opt);
    outputs["nodes"] = r.nodes;
    outputs["z"] = r.z;
    outputs["z_calls"] = r.z_calls;
    attach_density(r.nodes);
    ledger = LedgerJson(r.ledger);
  } else {  // oracle
    outputs["core_numbers"] = exact;
    if (n > 0 && n <= kBruteForceMaxNodes) {
      DensestResult best = ExactDensestSubgraph(g);
      outputs["densest_nodes"] = best.nodes;
    }
    DensestResult peel = CharikarPeel(g);
    outputs["charikar_nodes"] = peel.nodes;
    oracle["charikar_density"] = DensityJson(peel.density);
  }
  if (config.noiseless) {
    warnings.push_back("noiseless mode: output is not private");
  }
  if (config.debug_nonprivate) {
    warnings.push_back("debug-nonprivate: raw counts and noise are logged");
  }
  rep["outputs"] = outputs;
  rep["oracle"] = oracle;
  rep["metrics"] = metrics;
  rep["ledger"] = ledger;
  rep["transcript"] = transcript;
  rep["warnings"] = warnings;
  rep["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

// Built-in LA spec selection, e.g. {"spec": "kcore", "mode": "ledp"} or
// {"spec": "edge-load", "mode": "dp", "phases": 6}.
struct LaDescriptor {
  std::string spec = "counting";
  std::string mode = "ledp";
  std::int64_t phases = 4;  // edge-load only

  static LaDescriptor FromJson(const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("LA descriptor must be a JSON object");
    LaDescriptor d;
    try {
      d.spec = j.value("spec", d.spec);
      d.mode = j.value("mode", d.mode);
      d.phases = j.value("phases", d.phases);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("bad LA descriptor: ") + e.what());
    }
    d.Validate();
    return d;
  }

  void Validate() const {
    if (spec != "counting" && spec != "kcore" && spec != "edge-load") {
      throw UsageError("unknown LA spec '" + spec + "'");
    }
    if (mode != "dp" && mode != "ledp") {
      throw UsageError("LA mode must be dp or ledp");
    }
    if (phases < 1) throw UsageError("LA phases must be >= 1");
  }

  nlohmann::json ToJson() const {
    return {{"spec", spec}, {"mode", mode}, {"phases", phases}};
  }
};

// Runs a built-in LA spec through the DP or LEDP wrapper. Uses epsilon,
// psi, lambda, seed, noiseless, debug and input from `config`.
inline nlohmann::json RunLaReport(const RunConfig& config,
                                  const LaDescriptor& desc) {
  desc.Validate();
  if (!(config.epsilon > 0) || !std::isfinite(config.epsilon)) {
    throw UsageError("epsilon must be positive");
  }
  if (config.input.empty()) throw UsageError("no input graph given");
  auto start = std::chrono::steady_clock::now();
  LoadedGraph loaded = LoadInputGraph(config.input);
  const Graph& g = loaded.graph;
  LaSpec spec;
  if (desc.spec == "counting") {
    spec = CountingLaSpec();
  } else if (desc.spec == "kcore") {
    if (g.num_nodes() < 2) throw DegenerateInputError("kcore spec needs n >= 2");
    spec = KCoreLaSpec(LevelParams(g.num_nodes(), config.level_config()));
  } else {
    spec = EdgeLoadLaSpec(desc.phases);
  }
  RunOptions opt = config.run_options();
  LaResult r = desc.mode == "dp" ? RunLaPrivate(g, spec, config.epsilon, opt)
                                 : RunLaLedp(g, spec, config.epsilon, opt);
  nlohmann::json rep;
  nlohmann::json cfg = config.ToJson();
  cfg["algorithm"] = "la";
  rep["config"] = cfg;
  rep["descriptor"] = desc.ToJson();
  rep["graph"] = {{"n", g.num_nodes()}, {"m", g.num_edges()}};
  if (!loaded.original_ids.empty()) {
    rep["graph"]["id_map"] = loaded.original_ids;
  }
  rep["outputs"] = {{"outputs", r.outputs},
                    {"global_output", r.global_output
                                          ? nlohmann::json(*r.global_output)
                                          : nlohmann::json(nullptr)},
                    {"phases_run", r.phases_run},
                    {"global_stopped", r.global_stopped}};
  rep["ledger"] = LedgerJson(r.ledger);
  rep["transcript"] =
      desc.mode == "ledp" ? r.transcript.ToJson(config.full_transcript)
                          : nlohmann::json(nullptr);
  nlohmann::json warnings = nlohmann::json::array();
  if (config.noiseless) {
    warnings.push_back("noiseless mode: output is not private");
  }
  rep["warnings"] = warnings;
  rep["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

inline std::string SweepCsvHeader() {
  return "algorithm,epsilon,seed,n,m,rounds,max_message_bits,"
         "max_multiplicative_error,max_additive_error,density,"
         "ledger_total_epsilon,wall_time_seconds";
}

inline std::string SweepCsvRow(const nlohmann::json& rep) {
  auto field = [](const nlohmann::json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_object()) return v.at("value").dump();
    return v.dump();
  };
  const auto& m = rep.at("metrics");
  std::ostringstream row;
  row << rep["config"]["algorithm"].get<std::string>() << ','
      << rep["config"]["epsilon"].dump() << ',' << rep["config"]["seed"].dump()
      << ',' << rep["graph"]["n"].dump() << ',' << rep["graph"]["m"].dump()
      << ',' << m["rounds"].dump() << ',' << m["max_message_bits"].dump()
      << ',' << field(m["max_multiplicative_error"]) << ','
      << field(m["max_additive_error"]) << ',' << field(m["density_achieved"])
      << ','
      << (rep["ledger"].is_null() ? std::string()
                                  : rep["ledger"]["total_epsilon"].dump())
      << ',' << rep["wall_time_seconds"].dump();
  return row.str();
}

// One row per (epsilon, seed) cell.
inline std::string Sweep(RunConfig base, const std::vector<double>& epsilons,
                         const std::vector<std::uint64_t>& seeds) {
  std::string csv = SweepCsvHeader() + "\n";
  for (double eps : epsilons) {
    for (std::uint64_t s : seeds) {
      base.epsilon = eps;
      base.seed = s;
      csv += SweepCsvRow(Run(base)) + "\n";
    }
  }
  return csv;
}

}  // namespace ledp

#endif  // LEDP_REPORT_HPP_
