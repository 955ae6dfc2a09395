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

#ifndef LEDP_LA_FRAMEWORK_HPP_
#define LEDP_LA_FRAMEWORK_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/ledger.hpp"
#include "ledp/level_params.hpp"
#include "ledp/noise.hpp"
#include "ledp/options.hpp"
#include "ledp/transcript.hpp"

namespace ledp {

using LaState = std::int64_t;

// stop when c_nodes * s + c_edges * t >= threshold.
struct LaStopRule {
  bool enabled = false;
  double c_nodes = 0;
  double c_edges = 0;
  double threshold = 0;

  bool Fires(std::int64_t s, std::int64_t t) const {
    return c_nodes * static_cast<double>(s) + c_edges * static_cast<double>(t) >=
           threshold;
  }
};

// A locally adjustable algorithm. Every callback receives the phase number
// p (1-based) first. Predicates read the state of a single node or edge
// from phase depends_on(p).
struct LaSpec {
  std::string name;
  std::int64_t K = 1;
  // Phase that phase p reads from; p - 1 when unset.
  std::function<std::int64_t(std::int64_t)> depends_on;
  LaState initial_node_state = 0;
  LaState initial_edge_state = 0;

  // B: does a neighbor with this state count towards n_{v,p}?
  std::function<bool(std::int64_t, LaState)> neighbor_predicate;
  // C: does an incident edge with this state count towards e_{v,p}?
  std::function<bool(std::int64_t, LaState)> edge_predicate;
  // (p, I_{v,p~}, n_{v,p}, e_{v,p}) -> I_{v,p}.
  std::function<LaState(std::int64_t, LaState, std::int64_t, std::int64_t)>
      update_node_state;
  // (p, I_{e,p~}, i_u, i_v) -> I_{e,p}, applied to edges satisfying C. The
  // endpoint inputs are their new node states.
  std::function<LaState(std::int64_t, LaState, LaState, LaState)>
      update_edge_state;

  // F, evaluated on phase-p states for the stopping rules.
  std::function<bool(std::int64_t, LaState)> stop_predicate;
  LaStopRule node_stop;
  LaStopRule global_stop;

  std::function<std::int64_t(LaState)> out;
  std::int64_t gs_out = 1;
  std::function<std::int64_t(const std::vector<LaState>&,
                             const std::vector<LaState>&)>
      global_out;
  std::int64_t gs_global_out = 1;

  bool has_edge_components() const {
    return static_cast<bool>(edge_predicate) ||
           static_cast<bool>(update_edge_state);
  }

  std::int64_t Depends(std::int64_t p) const {
    std::int64_t q = depends_on ? depends_on(p) : p - 1;
    if (q < 0 || q >= p) {
      throw ValidationError("phase dependency must satisfy 0 <= p~ < p");
    }
    return q;
  }

  void Validate() const {
    if (K < 1) throw ValidationError("spec '" + name + "': K must be >= 1");
    if (!neighbor_predicate) {
      throw ValidationError("spec '" + name + "': missing neighbor predicate");
    }
    if (!update_node_state) {
      throw ValidationError("spec '" + name + "': missing node update");
    }
    if (!out) throw ValidationError("spec '" + name + "': missing out_v");
    if (gs_out < 1) {
      throw ValidationError("spec '" + name + "': GS of out_v must be >= 1");
    }
    if (global_out && gs_global_out < 1) {
      throw ValidationError("spec '" + name +
                            "': GS of global-out must be >= 1");
    }
    if ((node_stop.enabled || global_stop.enabled) && !stop_predicate) {
      throw ValidationError("spec '" + name +
                            "': stopping rule without predicate F");
    }
  }
};

struct PhaseSnapshot {
  std::int64_t phase = 0;
  std::vector<LaState> node_states;
  std::vector<LaState> edge_states;
  std::vector<char> stopped;
};

struct LaResult {
  std::vector<std::int64_t> outputs;  // noisy out_v per node
  std::optional<std::int64_t> global_output;
  std::int64_t phases_run = 0;
  bool global_stopped = false;
  // history[p] holds the states after phase p; history[0] is the default.
  std::vector<PhaseSnapshot> history;
  Transcript transcript;  // filled by the LEDP wrapper
  BudgetLedger ledger{1.0};

  const std::vector<LaState>& final_node_states() const {
    return history.back().node_states;
  }
};

// Counts one node or edge change can touch, all on fixed states.
struct LaCounts {
  std::vector<std::int64_t> n, e, s, t;
  std::int64_t s_p = 0;
  std::int64_t t_p = 0;
};

// Computes n_{v,p}, e_{v,p} from phase-p~ states and s, t, s_p, t_p from
// phase-p states.
inline LaCounts ComputeLaCounts(const Graph& g, const LaSpec& spec,
                                std::int64_t p,
                                const std::vector<LaState>& node_prev,
                                const std::vector<LaState>& edge_prev,
                                const std::vector<LaState>& node_cur,
                                const std::vector<LaState>& edge_cur) {
  const NodeId n = g.num_nodes();
  const bool edges = spec.has_edge_components();
  LaCounts c;
  c.n.assign(n, 0);
  c.e.assign(n, 0);
  c.s.assign(n, 0);
  c.t.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      c.n[v] += spec.neighbor_predicate(p, node_prev[nb[k]]);
      if (edges && spec.edge_predicate) {
        c.e[v] += spec.edge_predicate(p, edge_prev[ids[k]]);
      }
      if (spec.stop_predicate) {
        c.s[v] += spec.stop_predicate(p, node_cur[nb[k]]);
        if (edges) c.t[v] += spec.stop_predicate(p, edge_cur[ids[k]]);
      }
    }
    if (spec.stop_predicate) c.s_p += spec.stop_predicate(p, node_cur[v]);
  }
  if (spec.stop_predicate && edges) {
    for (LaState s : edge_cur) c.t_p += spec.stop_predicate(p, s);
  }
  return c;
}

namespace internal {

enum class LaMode { kDp, kLedp };

inline void ValidateLedpSpec(const LaSpec& spec) {
  auto reject = [&](const std::string& what) {
    throw ValidationError("spec '" + spec.name + "' is not LEDP-compatible: " +
                          what);
  };
  if (spec.edge_predicate) reject("edge predicate C");
  if (spec.update_edge_state) reject("update-edge-state");
  if (spec.global_stop.enabled) reject("global-stop");
  if (spec.global_out) reject("global-out");
  if (spec.node_stop.enabled && spec.node_stop.c_edges != 0) {
    reject("edge term of stop_v");
  }
}

inline LaResult RunLa(const Graph& g, const LaSpec& spec, double epsilon,
                      const RunOptions& opt, LaMode mode) {
  ValidateEpsilon(epsilon);
  spec.Validate();
  if (mode == LaMode::kLedp) ValidateLedpSpec(spec);
  const NodeId n = g.num_nodes();
  const EdgeId m = g.num_edges();
  const std::int64_t K = spec.K;
  const double Kd = static_cast<double>(K);
  const bool dp = mode == LaMode::kDp;
  const bool edges = spec.has_edge_components();

  LaResult res;
  res.ledger = BudgetLedger(epsilon);
  const std::string tag = dp ? "la-dp/" : "la-ledp/";
  if (dp) {
    res.ledger.Charge(tag + "counts", BigRational(1, 20 * K), K, edges ? 4 : 2);
    if (spec.node_stop.enabled) {
      res.ledger.Charge(tag + "node-stop", BigRational(1, 20 * K), K,
                        edges ? 4 : 2);
    }
    if (spec.global_stop.enabled) {
      res.ledger.Charge(tag + "global-stop", BigRational(1, 5 * K), K, 1);
    }
    res.ledger.Charge(tag + "node-out", BigRational(1, 10 * K), 1, 2);
    if (spec.global_out) {
      res.ledger.Charge(tag + "global-out", BigRational(1, 5 * K), 1, 1);
    }
  } else {
    res.ledger.Charge(tag + "counts", BigRational(1, 6 * K), K, 2);
    if (spec.node_stop.enabled) {
      res.ledger.Charge(tag + "node-stop", BigRational(1, 6 * K), K, 2);
    }
    res.ledger.Charge(tag + "node-out", BigRational(1, 6 * K), 1, 2);
  }
  const double b_count = dp ? epsilon / (20 * Kd) : epsilon / (6 * Kd);
  const double b_stop = b_count;
  const double b_global = epsilon / (5 * Kd);
  const double b_out =
      dp ? epsilon / (10 * static_cast<double>(spec.gs_out) * Kd)
         : epsilon / (6 * static_cast<double>(spec.gs_out) * Kd);
  const double b_global_out =
      epsilon / (5 * static_cast<double>(spec.gs_global_out) * Kd);

  res.transcript = Transcript(dp ? "la-dp" : "la-ledp", opt.record_messages,
                              opt.debug_nonprivate);
  res.transcript.params() = {{"spec", spec.name}, {"K", K},
                             {"epsilon", epsilon}, {"n", n}};
  NoiseSource noise(opt.seed, opt.noiseless, opt.debug_nonprivate);
  auto label = [](std::int64_t p, std::int64_t v, Channel ch) {
    return StreamLabel{static_cast<std::uint64_t>(p),
                       static_cast<std::uint64_t>(v), ch, 0};
  };

  PhaseSnapshot init;
  init.node_states.assign(n, spec.initial_node_state);
  init.edge_states.assign(m, spec.initial_edge_state);
  init.stopped.assign(n, 0);
  res.history.push_back(std::move(init));

  for (std::int64_t p = 1; p <= K; ++p) {
    const std::int64_t q = spec.Depends(p);
    const PhaseSnapshot& prev = res.history[q];
    const PhaseSnapshot& last = res.history.back();
    PhaseSnapshot cur;
    cur.phase = p;
    cur.node_states = last.node_states;
    cur.edge_states = last.edge_states;
    cur.stopped = last.stopped;

    for (NodeId v = 0; v < n; ++v) {
      if (cur.stopped[v]) continue;
      std::int64_t nc = 0, ec = 0;
      auto nb = g.neighbors(v);
      auto ids = g.incident_edges(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        nc += spec.neighbor_predicate(p, prev.node_states[nb[k]]);
        if (dp && spec.edge_predicate) {
          ec += spec.edge_predicate(p, prev.edge_states[ids[k]]);
        }
      }
      nc += noise.Draw(b_count, label(p, v, Channel::kLaNeighborCount));
      if (dp && spec.edge_predicate) {
        ec += noise.Draw(b_count, label(p, v, Channel::kLaEdgeCount));
      }
      cur.node_states[v] =
          spec.update_node_state(p, prev.node_states[v], nc, ec);
    }
    if (dp && spec.edge_predicate && spec.update_edge_state) {
      for (EdgeId e = 0; e < m; ++e) {
        if (!spec.edge_predicate(p, prev.edge_states[e])) continue;
        const Edge& ed = g.edges()[e];
        cur.edge_states[e] = spec.update_edge_state(
            p, prev.edge_states[e], cur.node_states[ed.u],
            cur.node_states[ed.v]);
      }
    }

    std::vector<char> stop_now(n, 0);
    if (spec.node_stop.enabled) {
      for (NodeId v = 0; v < n; ++v) {
        if (cur.stopped[v]) continue;
        std::int64_t s = 0, t = 0;
        auto nb = g.neighbors(v);
        auto ids = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
          s += spec.stop_predicate(p, cur.node_states[nb[k]]);
          if (dp && edges) t += spec.stop_predicate(p, cur.edge_states[ids[k]]);
        }
        s += noise.Draw(b_stop, label(p, v, Channel::kLaStopS));
        if (dp && edges) t += noise.Draw(b_stop, label(p, v, Channel::kLaStopT));
        stop_now[v] = spec.node_stop.Fires(s, t);
      }
    }

    if (!dp) {
      res.transcript.BeginRound(p, "la-node-state", b_count);
      for (NodeId v = 0; v < n; ++v) {
        if (cur.stopped[v]) continue;
        Message msg;
        msg.node = v;
        msg.bits = SignedBitWidth(cur.node_states[v]) +
                   (spec.node_stop.enabled ? 1 : 0);
        if (opt.record_messages) {
          msg.released = {cur.node_states[v], stop_now[v] ? 1 : 0};
        }
        res.transcript.AddMessage(std::move(msg));
      }
    }
    for (NodeId v = 0; v < n; ++v) cur.stopped[v] |= stop_now[v];

    bool global = false;
    if (dp && spec.global_stop.enabled) {
      std::int64_t s = 0, t = 0;
      for (LaState st : cur.node_states) s += spec.stop_predicate(p, st);
      for (LaState st : cur.edge_states) t += spec.stop_predicate(p, st);
      s += noise.Draw(b_global, label(p, 0, Channel::kLaGlobalS));
      t += noise.Draw(b_global, label(p, 0, Channel::kLaGlobalT));
      global = spec.global_stop.Fires(s, t);
    }
    res.history.push_back(std::move(cur));
    res.phases_run = p;
    const auto& stopped = res.history.back().stopped;
    bool all_stopped =
        n > 0 && std::all_of(stopped.begin(), stopped.end(),
                             [](char c) { return c != 0; });
    if (global) res.global_stopped = true;
    if (global || all_stopped) break;
  }

  const PhaseSnapshot& fin = res.history.back();
  res.outputs.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    res.outputs[v] = spec.out(fin.node_states[v]) +
                     noise.Draw(b_out, label(K + 1, v, Channel::kLaOut));
  }
  if (dp && spec.global_out) {
    res.global_output =
        spec.global_out(fin.node_states, fin.edge_states) +
        noise.Draw(b_global_out, label(K + 1, 0, Channel::kLaGlobalOut));
  }
  return res;
}

}  // namespace internal

// Central-model wrapper: counts, stopping statistics and outputs all get
// symmetric geometric noise.
inline LaResult RunLaPrivate(const Graph& g, const LaSpec& spec,
                             double epsilon, const RunOptions& opt = {}) {
  return internal::RunLa(g, spec, epsilon, opt, internal::LaMode::kDp);
}

// Local wrapper: node states are public after each phase and every node
// noises its own counts. Specs with edge or global components are rejected.
inline LaResult RunLaLedp(const Graph& g, const LaSpec& spec, double epsilon,
                          const RunOptions& opt = {}) {
  return internal::RunLa(g, spec, epsilon, opt, internal::LaMode::kLedp);
}

// Node state = level. In phase p a node on level p-1 moves up when its
// count of neighbors on level p-1 exceeds (1+psi)^{F(p-1)}.
inline LaSpec KCoreLaSpec(const LevelParams& params) {
  LaSpec s;
  s.name = "kcore";
  s.K = params.total_levels() - 1;
  s.neighbor_predicate = [](std::int64_t p, LaState level) {
    return level == p - 1;
  };
  s.update_node_state = [params](std::int64_t p, LaState level,
                                 std::int64_t count, std::int64_t) {
    if (level == p - 1 &&
        static_cast<double>(count) > params.LevelThreshold(p - 1)) {
      return level + 1;
    }
    return level;
  };
  s.out = [](LaState level) { return level; };
  return s;
}

// One phase; every node stores its neighbor count.
inline LaSpec CountingLaSpec() {
  LaSpec s;
  s.name = "counting";
  s.K = 1;
  s.neighbor_predicate = [](std::int64_t, LaState) { return true; };
  s.update_node_state = [](std::int64_t, LaState, std::int64_t count,
                           std::int64_t) { return count; };
  s.out = [](LaState st) { return st; };
  return s;
}

// Demo spec exercising every component: edges carry a load that grows when
// either endpoint is light, nodes track their light-edge count, and both
// stopping rules watch for loaded states.
inline LaSpec EdgeLoadLaSpec(std::int64_t phases = 4) {
  LaSpec s;
  s.name = "edge-load";
  s.K = phases;
  s.neighbor_predicate = [](std::int64_t, LaState st) { return st <= 1; };
  s.edge_predicate = [](std::int64_t p, LaState load) { return load < p; };
  s.update_node_state = [](std::int64_t, LaState, std::int64_t nc,
                           std::int64_t ec) {
    return std::max<std::int64_t>(0, nc + ec);
  };
  s.update_edge_state = [](std::int64_t, LaState load, LaState a, LaState b) {
    return load + (a <= 2 ? 1 : 0) + (b <= 2 ? 1 : 0);
  };
  s.stop_predicate = [](std::int64_t, LaState st) { return st >= 3; };
  s.node_stop = {true, 1, 1, 6};
  s.global_stop = {true, 1, 1, 1e9};
  s.out = [](LaState st) { return st; };
  s.global_out = [](const std::vector<LaState>& nodes,
                    const std::vector<LaState>&) {
    std::int64_t c = 0;
    for (LaState st : nodes) c += st >= 3;
    return c;
  };
  return s;
}

// Fixed states for a sensitivity probe at one phase. The inserted edge is
// given `added_edge_prev` and `added_edge_cur`.
struct LaFrozenStates {
  std::vector<LaState> node_prev, node_cur;
  std::vector<LaState> edge_prev, edge_cur;  // by edge id of the base graph
  LaState added_edge_prev = 0;
  LaState added_edge_cur = 0;
};

inline LaFrozenStates DefaultFrozenStates(const Graph& g, const LaSpec& spec) {
  LaFrozenStates f;
  f.node_prev.assign(g.num_nodes(), spec.initial_node_state);
  f.node_cur = f.node_prev;
  f.edge_prev.assign(g.num_edges(), spec.initial_edge_state);
  f.edge_cur = f.edge_prev;
  f.added_edge_prev = f.added_edge_cur = spec.initial_edge_state;
  return f;
}

struct SensitivityReport {
  std::vector<std::int64_t> dn, de, ds, dt;  // G + edge minus G, per node
  std::int64_t ds_p = 0;
  std::int64_t dt_p = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Recomputes every count that feeds a noisy test on G and on G + {a, b}
// with all states held fixed, and checks the locality bounds.
inline SensitivityReport SensitivityProbe(const Graph& g, const LaSpec& spec,
                                          NodeId a, NodeId b, std::int64_t p,
                                          const LaFrozenStates& frozen) {
  if (a == b || a < 0 || b < 0 || a >= g.num_nodes() || b >= g.num_nodes()) {
    throw DomainError("probe edge must join two distinct nodes");
  }
  if (g.HasEdge(a, b)) throw DomainError("probe edge already present");
  Graph h = g.WithEdge(a, b);
  std::vector<LaState> hp(h.num_edges()), hc(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Edge& ed = h.edges()[e];
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), ed);
    if (it != g.edges().end() && *it == ed) {
      hp[e] = frozen.edge_prev[it - g.edges().begin()];
      hc[e] = frozen.edge_cur[it - g.edges().begin()];
    } else {
      hp[e] = frozen.added_edge_prev;
      hc[e] = frozen.added_edge_cur;
    }
  }
  LaCounts c0 = ComputeLaCounts(g, spec, p, frozen.node_prev, frozen.edge_prev,
                                frozen.node_cur, frozen.edge_cur);
  LaCounts c1 =
      ComputeLaCounts(h, spec, p, frozen.node_prev, hp, frozen.node_cur, hc);
  SensitivityReport r;
  const NodeId n = g.num_nodes();
  r.dn.resize(n);
  r.de.resize(n);
  r.ds.resize(n);
  r.dt.resize(n);
  std::int64_t total_ne = 0, total_st = 0;
  for (NodeId v = 0; v < n; ++v) {
    r.dn[v] = c1.n[v] - c0.n[v];
    r.de[v] = c1.e[v] - c0.e[v];
    r.ds[v] = c1.s[v] - c0.s[v];
    r.dt[v] = c1.t[v] - c0.t[v];
    const bool endpoint = v == a || v == b;
    for (auto [name, d] : {std::pair{"n", r.dn[v]}, std::pair{"e", r.de[v]},
                           std::pair{"s", r.ds[v]}, std::pair{"t", r.dt[v]}}) {
      if (std::llabs(d) > (endpoint ? 1 : 0)) {
        r.violations.push_back(std::string("|d") + name + "| too large at node " +
                               std::to_string(v));
      }
    }
    total_ne += std::llabs(r.dn[v]) + std::llabs(r.de[v]);
    total_st += std::llabs(r.ds[v]) + std::llabs(r.dt[v]);
  }
  if (total_ne > 4) r.violations.push_back("sum of |dn| + |de| exceeds 4");
  if (total_st > 4) r.violations.push_back("sum of |ds| + |dt| exceeds 4");
  r.ds_p = c1.s_p - c0.s_p;
  r.dt_p = c1.t_p - c0.t_p;
  if (r.ds_p != 0) r.violations.push_back("s_p changed");
  if (std::llabs(r.dt_p) > 1) r.violations.push_back("|dt_p| exceeds 1");
  return r;
}

}  // namespace ledp

#endif  // LEDP_LA_FRAMEWORK_HPP_
