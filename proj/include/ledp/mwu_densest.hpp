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

#ifndef LEDP_MWU_DENSEST_HPP_
#define LEDP_MWU_DENSEST_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/ledger.hpp"
#include "ledp/noise.hpp"
#include "ledp/options.hpp"
#include "ledp/oracles.hpp"
#include "ledp/rational.hpp"

namespace ledp {

struct MwuConsts {
  double c0 = 1;
  double c1 = 1;
  double c2 = 1;
  double c = 1;
  // Drop the c1 and c2 additive terms from both threshold tests. Utility
  // experiments only.
  bool zero_additive = false;

  void Validate() const {
    for (double v : {c0, c1, c2, c}) {
      if (!(v > 0) || !std::isfinite(v)) {
        throw DomainError("MWU constants must be positive");
      }
    }
  }
};

// Cumulative edge loads plus the increments assigned in the last phase.
struct EdgeLoadState {
  std::vector<std::int64_t> load;  // by edge id
  // Increment from the lower-id endpoint (u) and the higher-id endpoint (v).
  std::vector<std::int64_t> alpha_u;
  std::vector<std::int64_t> alpha_v;
  std::int64_t phases = 0;
};

struct MwuZResult {
  std::vector<NodeId> nodes;
  double z = 0;  // z on success, 0 otherwise
  std::int64_t phases_run = 0;
  std::int64_t success_load = -1;
  // Noiseless runs stop once the load pattern repeats, since every later
  // phase would fail again.
  bool cycle_detected = false;
  EdgeLoadState loads;
};

struct MwuResult {
  std::vector<NodeId> nodes;
  double z = 0;  // largest successful z, or 0
  std::int64_t z_calls = 0;
  std::int64_t successes = 0;
  BudgetLedger ledger{1.0};
};

// (1-eta)^{load(e)} for every edge.
inline std::vector<double> DeriveWeights(const EdgeLoadState& state,
                                         double eta) {
  std::vector<double> w(state.load.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    w[e] = std::pow(1 - eta, static_cast<double>(state.load[e]));
  }
  return w;
}

// Per node, the number of incident edges with load at most ell.
inline std::vector<std::int64_t> CountLoadAtMost(
    const Graph& g, std::span<const std::int64_t> load, std::int64_t ell) {
  std::vector<std::int64_t> cnt(g.num_nodes(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (load[e] <= ell) {
      ++cnt[g.edges()[e].u];
      ++cnt[g.edges()[e].v];
    }
  }
  return cnt;
}

// ceil(c0 ln n / eta^3).
inline std::int64_t MwuPhases(std::int64_t n, double eta, double c0) {
  double t = std::ceil(c0 * std::log(static_cast<double>(n)) /
                       (eta * eta * eta));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

// Smallest k with (1+eta)^k >= n.
inline std::int64_t CeilLog(std::int64_t n, double base) {
  std::int64_t k = 0;
  for (double p = 1; p < static_cast<double>(n); p *= base) ++k;
  return k;
}

// Largest k with (1+eta)^k <= n.
inline std::int64_t FloorLog(std::int64_t n, double base) {
  std::int64_t k = 0;
  for (double p = base; p <= static_cast<double>(n); p *= base) ++k;
  return k;
}

namespace internal {

struct HalfEdge {
  NodeId owner;
  NodeId other;
  EdgeId edge;
};

// Sorts half-edges by (owner, load, other): LSD radix on load, then a
// stable counting pass on owner. Input arrives ordered by (owner, other).
inline void SortHalfEdges(std::vector<HalfEdge>& h, std::vector<HalfEdge>& tmp,
                          std::span<const std::int64_t> load, NodeId n) {
  tmp.resize(h.size());
  std::int64_t max_load = 0;
  for (std::int64_t l : load) max_load = std::max(max_load, l);
  for (int shift = 0; (max_load >> shift) > 0; shift += 8) {
    std::array<std::size_t, 257> count{};
    for (const HalfEdge& x : h) ++count[((load[x.edge] >> shift) & 255) + 1];
    for (int b = 0; b < 256; ++b) count[b + 1] += count[b];
    for (const HalfEdge& x : h) tmp[count[(load[x.edge] >> shift) & 255]++] = x;
    h.swap(tmp);
  }
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (const HalfEdge& x : h) ++start[x.owner + 1];
  for (NodeId v = 0; v < n; ++v) start[v + 1] += start[v];
  for (const HalfEdge& x : h) tmp[start[x.owner]++] = x;
  h.swap(tmp);
}

// Stable LSD radix sort of edge ids by load.
inline void RadixSortEdges(std::vector<EdgeId>& ids, std::vector<EdgeId>& tmp,
                           std::span<const std::int64_t> load) {
  tmp.resize(ids.size());
  std::int64_t max_load = 0;
  for (std::int64_t l : load) max_load = std::max(max_load, l);
  for (int shift = 0; (max_load >> shift) > 0; shift += 8) {
    std::array<std::size_t, 257> count{};
    for (EdgeId e : ids) ++count[((load[e] >> shift) & 255) + 1];
    for (int b = 0; b < 256; ++b) count[b + 1] += count[b];
    for (EdgeId e : ids) tmp[count[(load[e] >> shift) & 255]++] = e;
    ids.swap(tmp);
  }
}

inline std::uint64_t HashLoads(std::span<const std::int64_t> load,
                               std::int64_t offset) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (std::int64_t l : load) {
    h = HashCombine(h, static_cast<std::uint64_t>(l - offset));
  }
  return h;
}

}  // namespace internal

// One density guess z. Returns the first V'_ell passing the density test,
// scanning ell = 0..4T in each phase before that phase's loads are applied.
// `z_index` separates the noise streams of different guesses.
inline MwuZResult DpDensestZ(const Graph& g, double z, double eta,
                             double epsilon, const MwuConsts& consts,
                             NoiseSource& noise, std::uint64_t z_index = 0) {
  ValidateEpsilon(epsilon);
  consts.Validate();
  if (!(eta > 0 && eta < 1.0 / 12)) {
    throw DomainError("eta must lie in (0, 1/12)");
  }
  if (!(z >= 0) || !std::isfinite(z)) throw DomainError("z must be >= 0");
  const NodeId n = g.num_nodes();
  const EdgeId m = g.num_edges();
  MwuZResult res;
  res.loads.load.assign(m, 0);
  res.loads.alpha_u.assign(m, 0);
  res.loads.alpha_v.assign(m, 0);
  if (z == 0 || n < 2) {
    res.nodes = AllNodes(g);
    return res;
  }
  const std::int64_t T = MwuPhases(n, eta, consts.c0);
  const std::int64_t lc = CeilLog(n, 1 + eta);
  const double Td = static_cast<double>(T);
  const double scans = static_cast<double>(4 * T + 1);
  const double b_load = epsilon / (6 * Td * lc);
  const double b_member = epsilon / (6 * Td * scans * lc);
  const double b_density = epsilon / (3 * Td * scans * lc);
  const double ln = std::log(static_cast<double>(n));
  const double ln4 = ln * ln * ln * ln;
  const Rational member_shift =
      consts.zero_additive ? Rational(0)
                           : Rational::Approximate(consts.c1 * ln4 / epsilon);
  const Rational density_shift =
      consts.zero_additive ? Rational(0)
                           : Rational::Approximate(consts.c2 * ln4 / epsilon);
  const std::int64_t half = static_cast<std::int64_t>(std::ceil(z / 2));
  const Rational z_rat = Rational::Approximate(z);

  std::vector<internal::HalfEdge> half_edges, tmp;
  half_edges.reserve(2 * m);
  for (NodeId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      half_edges.push_back({v, nb[k], ids[k]});
    }
  }
  std::vector<std::int64_t>& load = res.loads.load;
  std::vector<std::int64_t> inc(m, 0);
  std::vector<std::int64_t> cnt(n);
  std::vector<char> member(n);
  std::vector<EdgeId> by_load(m), by_load_tmp(m);

  // Brent cycle detection state (noiseless only).
  std::vector<std::int64_t> saved;
  std::uint64_t saved_hash = 0;
  std::int64_t power = 1, lam = 0;
  bool have_saved = false;

  auto accept = [&](std::int64_t edges, std::int64_t size, std::int64_t y) {
    return size > 0 &&
           Rational(edges, size) >= z_rat + Rational(y) - density_shift;
  };

  for (std::int64_t t = 1; t <= T; ++t) {
    res.phases_run = t;
    // Load assignment from the loads at the start of the phase.
    internal::SortHalfEdges(half_edges, tmp, load, n);
    std::fill(res.loads.alpha_u.begin(), res.loads.alpha_u.end(), 0);
    std::fill(res.loads.alpha_v.begin(), res.loads.alpha_v.end(), 0);
    std::size_t pos = 0;
    for (NodeId v = 0; v < n; ++v) {
      std::int64_t deg = g.degree(v);
      std::int64_t x = noise.Draw(b_load, {static_cast<std::uint64_t>(t),
                                           static_cast<std::uint64_t>(v),
                                           Channel::kMwuLoad, z_index});
      std::int64_t k = Clamp(half - 1 + x, 0, deg);
      for (std::int64_t i = 0; i < k; ++i) {
        const internal::HalfEdge& he = half_edges[pos + i];
        if (g.edges()[he.edge].u == v) {
          res.loads.alpha_u[he.edge] = 2;
        } else {
          res.loads.alpha_v[he.edge] = 2;
        }
      }
      pos += deg;
    }

    if (noise.noiseless()) {
      // Thresholds are fixed, so V'_ell only changes at ell values that are
      // edge loads; scanning those in order finds the same first success.
      const Rational member_thr = Rational(half) - member_shift;
      std::fill(cnt.begin(), cnt.end(), 0);
      std::fill(member.begin(), member.end(), 0);
      std::int64_t size = 0, induced = 0;
      auto join = [&](NodeId w) {
        member[w] = 1;
        ++size;
        for (NodeId u : g.neighbors(w)) induced += member[u];
      };
      if (member_thr <= Rational(0)) {
        for (NodeId v = 0; v < n; ++v) join(v);
        if (accept(induced, size, 0)) {
          res.nodes = AllNodes(g);
          res.z = z;
          res.success_load = 0;
          return res;
        }
      } else {
        std::iota(by_load.begin(), by_load.end(), 0);
        internal::RadixSortEdges(by_load, by_load_tmp, load);
        for (EdgeId i = 0; i < m;) {
          std::int64_t ell = load[by_load[i]];
          for (; i < m && load[by_load[i]] == ell; ++i) {
            const Edge& e = g.edges()[by_load[i]];
            for (NodeId w : {e.u, e.v}) {
              ++cnt[w];
              if (!member[w] && Rational(cnt[w]) >= member_thr) join(w);
            }
          }
          if (accept(induced, size, 0)) {
            for (NodeId v = 0; v < n; ++v) {
              if (member[v]) res.nodes.push_back(v);
            }
            res.z = z;
            res.success_load = ell;
            return res;
          }
        }
      }
    } else {
      // Per node, loads of incident edges in sorted order.
      for (std::int64_t ell = 0; ell <= 4 * T; ++ell) {
        std::size_t p = 0;
        std::int64_t size = 0;
        for (NodeId v = 0; v < n; ++v) {
          std::int64_t deg = g.degree(v);
          // half_edges is sorted by (owner, load); count prefix <= ell.
          std::int64_t c = 0;
          while (c < deg && load[half_edges[p + c].edge] <= ell) ++c;
          p += deg;
          std::int64_t zz = noise.Draw(
              b_member, {static_cast<std::uint64_t>(t),
                         static_cast<std::uint64_t>(v), Channel::kMwuMember,
                         z_index * static_cast<std::uint64_t>(4 * T + 1) +
                             static_cast<std::uint64_t>(ell)});
          member[v] = Rational(c) >= Rational(half + zz) - member_shift;
          size += member[v];
        }
        std::int64_t induced = 0;
        for (const Edge& e : g.edges()) induced += member[e.u] && member[e.v];
        std::int64_t y = noise.Draw(
            b_density, {static_cast<std::uint64_t>(t),
                        static_cast<std::uint64_t>(ell), Channel::kMwuDensity,
                        z_index});
        if (accept(induced, size, y)) {
          for (NodeId v = 0; v < n; ++v) {
            if (member[v]) res.nodes.push_back(v);
          }
          res.z = z;
          res.success_load = ell;
          return res;
        }
      }
    }

    for (EdgeId e = 0; e < m; ++e) {
      load[e] += res.loads.alpha_u[e] + res.loads.alpha_v[e];
    }
    res.loads.phases = t;

    if (noise.noiseless() && m > 0) {
      std::int64_t lo = *std::min_element(load.begin(), load.end());
      std::uint64_t h = internal::HashLoads(load, lo);
      if (have_saved && h == saved_hash) {
        bool same = true;
        for (EdgeId e = 0; e < m && same; ++e) same = load[e] - lo == saved[e];
        if (same) {
          res.cycle_detected = true;
          break;
        }
      }
      if (!have_saved || ++lam == power) {
        saved.resize(m);
        for (EdgeId e = 0; e < m; ++e) saved[e] = load[e] - lo;
        saved_hash = h;
        have_saved = true;
        if (lam == power) power *= 2;
        lam = 0;
      }
    }
  }
  res.nodes = AllNodes(g);
  return res;
}

// Tries z = (1+eta)^i for i = 1..floor(log_{1+eta} n) and keeps the set from
// the last guess that succeeds; V if none does.
inline MwuResult DpDensest(const Graph& g, double eta, double epsilon,
                           const MwuConsts& consts, const RunOptions& opt = {}) {
  ValidateEpsilon(epsilon);
  consts.Validate();
  if (!(eta > 0 && eta < 1.0 / 12)) {
    throw DomainError("eta must lie in (0, 1/12)");
  }
  const NodeId n = g.num_nodes();
  MwuResult res;
  res.ledger = BudgetLedger(epsilon);
  res.nodes = AllNodes(g);
  if (n < 2) return res;
  const std::int64_t T = MwuPhases(n, eta, consts.c0);
  const std::int64_t lc = CeilLog(n, 1 + eta);
  const std::int64_t guesses = FloorLog(n, 1 + eta);
  NoiseSource noise(opt.seed, opt.noiseless, opt.debug_nonprivate);
  double z = 1;
  for (std::int64_t i = 1; i <= guesses; ++i) {
    z *= 1 + eta;
    const std::string tag = "densest-dp/z" + std::to_string(i);
    res.ledger.Charge(tag + "/load", BigRational(1, 6 * T * lc), T, 2);
    res.ledger.Charge(tag + "/member", BigRational(1, 6 * T * (4 * T + 1) * lc),
                      T * (4 * T + 1), 2);
    res.ledger.Charge(tag + "/density",
                      BigRational(1, 3 * T * (4 * T + 1) * lc), T * (4 * T + 1),
                      1);
    MwuZResult r = DpDensestZ(g, z, eta, epsilon, consts, noise,
                              static_cast<std::uint64_t>(i));
    ++res.z_calls;
    if (r.z != 0) {
      res.nodes = std::move(r.nodes);
      res.z = z;
      ++res.successes;
    }
  }
  return res;
}

}  // namespace ledp

#endif  // LEDP_MWU_DENSEST_HPP_
