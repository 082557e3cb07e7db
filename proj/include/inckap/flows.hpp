// Copyright 2026 The inckap Authors.
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

// Incremental s-t flows.
//
// Classical flows: every edge has unit capacity and unit building cost, and
// f(X) is the maximum s-t flow in (V, X). Quickest-Increment repeatedly adds
// a smallest edge set raising the maximum flow by one. With unit capacities a
// flow of value j uses each edge at most once, so the cheapest such set is a
// min-cost flow of value j where built edges cost 0 and the rest cost 1.
//
// Potential-based flows: parallel s-t edges with p = beta_e psi(x_e) and
// x_e <= mu_e. The best flow for a set S is attained at one of the finitely
// many potentials p_i = beta_i psi(mu_i), which makes f an XOS function with
// one clause per edge.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inckap/errors.hpp"
#include "inckap/evaluator.hpp"
#include "inckap/objective.hpp"

namespace inckap {

inline constexpr std::size_t kMaxFlowRatioEdges = 24;
inline constexpr std::size_t kMaxFlowOrderingSearchEdges = 10;
inline constexpr std::size_t kMaxPotentialOracleEdges = 15;

using EdgeIndex = std::size_t;

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
};

class FlowInstance {
 public:
  FlowInstance(std::vector<std::string> vertices, std::size_t source,
               std::size_t sink, std::vector<FlowEdge> edges)
      : vertices_(std::move(vertices)),
        source_(source),
        sink_(sink),
        edges_(std::move(edges)) {
    if (source_ >= vertices_.size() || sink_ >= vertices_.size()) {
      throw InputError("source or sink is not a vertex");
    }
    if (source_ == sink_) throw InputError("source and sink must differ");
    for (const FlowEdge& e : edges_) {
      if (e.from >= vertices_.size() || e.to >= vertices_.size()) {
        throw InputError("edge endpoint is not a vertex");
      }
      if (e.from == e.to) throw InputError("self-loops are not allowed");
    }
  }

  // Vertices are created in order of first mention, starting with s and t.
  static FlowInstance from_named_edges(
      const std::string& source, const std::string& sink,
      const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    auto id = [&](const std::string& name) {
      auto [it, inserted] = index.emplace(name, names.size());
      if (inserted) names.push_back(name);
      return it->second;
    };
    const std::size_t s = id(source);
    const std::size_t t = id(sink);
    std::vector<FlowEdge> list;
    for (const auto& [u, v] : edges) {
      const std::size_t a = id(u);
      list.push_back({a, id(v)});
    }
    return FlowInstance(std::move(names), s, t, std::move(list));
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<FlowEdge>& edges() const { return edges_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::string edge_label(EdgeIndex e) const {
    return vertices_[edges_[e].from] + "->" + vertices_[edges_[e].to];
  }

 private:
  std::vector<std::string> vertices_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<FlowEdge> edges_;
};

// s -> u1 -> u2 -> u3 -> t, s -> v1 -> v2 -> v3 -> t and the shortcut
// u1 -> v3. The 3-edge path s,u1,v3,t blocks both 4-edge paths.
inline FlowInstance blocking_path_graph() {
  return FlowInstance::from_named_edges(
      "s", "t",
      {{"s", "u1"}, {"u1", "u2"}, {"u2", "u3"}, {"u3", "t"}, {"s", "v1"},
       {"v1", "v2"}, {"v2", "v3"}, {"v3", "t"}, {"u1", "v3"}});
}

namespace detail {

// Residual network over unit-capacity arcs. Arc a and a ^ 1 are a forward arc
// and its reverse.
class ResidualNetwork {
 public:
  static constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

  explicit ResidualNetwork(std::size_t vertices) : out_(vertices) {}

  void add_edge(std::size_t from, std::size_t to, int cost, std::size_t edge) {
    out_[from].push_back(arcs_.size());
    arcs_.push_back({to, 1, cost, edge});
    out_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0, -cost, kNoEdge});
  }

  // One augmenting path found by BFS; false if none exists.
  bool augment_any(std::size_t s, std::size_t t) {
    std::vector<std::size_t> via(out_.size(), kNoEdge);
    std::vector<bool> seen(out_.size(), false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t a : out_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          via[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[t]) return false;
    push_along(s, t, via);
    return true;
  }

  // One augmenting path of minimum residual cost (Bellman-Ford, since
  // reverse arcs carry negative costs). False if t is unreachable.
  bool augment_cheapest(std::size_t s, std::size_t t) {
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> dist(out_.size(), kInf);
    std::vector<std::size_t> via(out_.size(), kNoEdge);
    dist[s] = 0;
    for (std::size_t round = 0; round < out_.size(); ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < out_.size(); ++u) {
        if (dist[u] == kInf) continue;
        for (std::size_t a : out_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.cap > 0 && dist[u] + arc.cost < dist[arc.to]) {
            dist[arc.to] = dist[u] + arc.cost;
            via[arc.to] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[t] == kInf) return false;
    push_along(s, t, via);
    return true;
  }

  // Original edge indices currently carrying flow.
  std::vector<std::size_t> flow_edges() const {
    std::vector<std::size_t> result;
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      if (arcs_[a].cap == 0) result.push_back(arcs_[a].edge);
    }
    return result;
  }

  long flow_cost() const {
    long cost = 0;
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      if (arcs_[a].cap == 0) cost += arcs_[a].cost;
    }
    return cost;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int cost;
    std::size_t edge;
  };

  void push_along(std::size_t s, std::size_t t, const std::vector<std::size_t>& via) {
    for (std::size_t v = t; v != s;) {
      const std::size_t a = via[v];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      v = arcs_[a ^ 1].to;
    }
  }

  std::vector<std::vector<std::size_t>> out_;
  std::vector<Arc> arcs_;
};

inline std::vector<bool> edge_membership(const FlowInstance& instance,
                                         std::span<const EdgeIndex> edges) {
  std::vector<bool> member(instance.num_edges(), false);
  for (EdgeIndex e : edges) {
    if (e >= instance.num_edges()) {
      throw InputError("unknown edge index " + std::to_string(e));
    }
    member[e] = true;
  }
  return member;
}

inline int max_flow_of(const FlowInstance& instance, const std::vector<bool>& built) {
  ResidualNetwork net(instance.vertices().size());
  for (EdgeIndex e = 0; e < instance.num_edges(); ++e) {
    if (built[e]) net.add_edge(instance.edges()[e].from, instance.edges()[e].to, 0, e);
  }
  int flow = 0;
  while (net.augment_any(instance.source(), instance.sink())) ++flow;
  return flow;
}

// Splits a unit flow into s-t paths, following the lowest-index flow edge out
// of each vertex. Flow cycles met on the way are dropped.
inline std::vector<std::vector<EdgeIndex>> decompose_paths(
    const FlowInstance& instance, const std::vector<EdgeIndex>& flow_edges) {
  std::vector<std::vector<EdgeIndex>> out(instance.vertices().size());
  std::vector<EdgeIndex> sorted = flow_edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeIndex e : sorted) out[instance.edges()[e].from].push_back(e);
  std::vector<std::size_t> cursor(out.size(), 0);
  auto next_edge = [&](std::size_t v) -> EdgeIndex {
    if (cursor[v] >= out[v].size()) return ResidualNetwork::kNoEdge;
    return out[v][cursor[v]++];
  };

  std::vector<std::vector<EdgeIndex>> paths;
  while (true) {
    std::vector<EdgeIndex> path;
    std::vector<std::size_t> visited{instance.source()};
    std::size_t v = instance.source();
    while (v != instance.sink()) {
      const EdgeIndex e = next_edge(v);
      if (e == ResidualNetwork::kNoEdge) break;
      const std::size_t w = instance.edges()[e].to;
      auto loop = std::find(visited.begin(), visited.end(), w);
      if (loop != visited.end()) {
        const std::size_t keep = static_cast<std::size_t>(loop - visited.begin());
        visited.resize(keep + 1);
        path.resize(keep);
        v = w;
        continue;
      }
      path.push_back(e);
      visited.push_back(w);
      v = w;
    }
    if (v != instance.sink()) break;
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace detail

// Maximum s-t flow using only the built edges.
inline int max_flow(const FlowInstance& instance, std::span<const EdgeIndex> built) {
  return detail::max_flow_of(instance, detail::edge_membership(instance, built));
}

// X_max: maximum flow with every edge built.
inline int max_flow(const FlowInstance& instance) {
  return detail::max_flow_of(instance, std::vector<bool>(instance.num_edges(), true));
}

// c_j: fewest edges supporting a flow of value j.
inline int min_edges_for_value(const FlowInstance& instance, int value) {
  if (value < 1) throw InputError("flow value must be at least 1");
  detail::ResidualNetwork net(instance.vertices().size());
  for (EdgeIndex e = 0; e < instance.num_edges(); ++e) {
    net.add_edge(instance.edges()[e].from, instance.edges()[e].to, 1, e);
  }
  for (int j = 0; j < value; ++j) {
    if (!net.augment_cheapest(instance.source(), instance.sink())) {
      throw InfeasibleError("flow value " + std::to_string(value) +
                            " exceeds the maximum flow");
    }
  }
  return static_cast<int>(net.flow_cost());
}

struct IncrementTrace {
  std::vector<std::vector<EdgeIndex>> batches;  // batch i raises the flow to i+1
  std::vector<std::size_t> batch_sizes;         // lambda_0 .. lambda_r
  std::vector<EdgeIndex> order;                 // batches, then unused edges
  std::vector<int> min_edges;                   // c_1 .. c_{X_max}
  int max_flow = 0;                             // X_max
};

inline IncrementTrace quickest_increment(const FlowInstance& instance) {
  IncrementTrace trace;
  trace.max_flow = max_flow(instance);
  if (trace.max_flow == 0) throw InfeasibleError("t is unreachable from s");

  std::vector<bool> built(instance.num_edges(), false);
  int current = 0;
  while (current < trace.max_flow) {
    detail::ResidualNetwork net(instance.vertices().size());
    for (EdgeIndex e = 0; e < instance.num_edges(); ++e) {
      net.add_edge(instance.edges()[e].from, instance.edges()[e].to, built[e] ? 0 : 1, e);
    }
    for (int j = 0; j <= current; ++j) {
      net.augment_cheapest(instance.source(), instance.sink());
    }
    std::vector<EdgeIndex> batch;
    const std::vector<EdgeIndex> used = net.flow_edges();
    for (const auto& path : detail::decompose_paths(instance, used)) {
      for (EdgeIndex e : path) {
        if (!built[e] && std::find(batch.begin(), batch.end(), e) == batch.end()) {
          batch.push_back(e);
        }
      }
    }
    for (EdgeIndex e : batch) {
      built[e] = true;
      trace.order.push_back(e);
    }
    trace.batch_sizes.push_back(batch.size());
    trace.batches.push_back(std::move(batch));
    current = detail::max_flow_of(instance, built);
  }
  for (EdgeIndex e = 0; e < instance.num_edges(); ++e) {
    if (!built[e]) trace.order.push_back(e);
  }
  for (int j = 1; j <= trace.max_flow; ++j) {
    trace.min_edges.push_back(min_edges_for_value(instance, j));
  }
  return trace;
}

// f*(k) for k = 0..|E|: the largest j with c_j <= k.
inline std::vector<int> flow_optimum_table(const FlowInstance& instance) {
  std::vector<int> table(instance.num_edges() + 1, 0);
  const int top = max_flow(instance);
  for (int j = 1; j <= top; ++j) {
    const int c = min_edges_for_value(instance, j);
    for (std::size_t k = static_cast<std::size_t>(c); k < table.size(); ++k) table[k] = j;
  }
  return table;
}

// Ratio curve over cardinalities k = 1..|E| (the capacity column holds k).
inline RatioCurve flow_ratio(const FlowInstance& instance,
                             std::span<const EdgeIndex> ordering) {
  const std::size_t n = instance.num_edges();
  if (n > kMaxFlowRatioEdges) {
    throw CapabilityError("flow ratio is limited to " +
                          std::to_string(kMaxFlowRatioEdges) + " edges");
  }
  if (ordering.size() != n) throw InputError("ordering must list every edge once");
  const std::vector<bool> member = detail::edge_membership(instance, ordering);
  if (std::count(member.begin(), member.end(), true) != static_cast<long>(n)) {
    throw InputError("edge repeated in ordering");
  }
  const std::vector<int> opt = flow_optimum_table(instance);
  detail::ResidualNetwork net(instance.vertices().size());
  RatioCurve curve;
  int flow = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const FlowEdge& e = instance.edges()[ordering[k - 1]];
    net.add_edge(e.from, e.to, 0, ordering[k - 1]);
    // One new unit edge raises the maximum flow by at most one.
    if (net.augment_any(instance.source(), instance.sink())) ++flow;
    const RatioRow row{static_cast<double>(k), static_cast<double>(opt[k]),
                       static_cast<double>(flow), ratio_of(opt[k], flow)};
    curve.ratio = std::max(curve.ratio, row.ratio);
    curve.rows.push_back(row);
  }
  return curve;
}

// Minimum flow ratio over all edge orderings (|E| <= 10); lexicographically
// smallest optimal ordering.
inline BestOrdering best_flow_ordering(const FlowInstance& instance) {
  const std::size_t n = instance.num_edges();
  if (n > kMaxFlowOrderingSearchEdges) {
    throw CapabilityError("flow ordering search is limited to " +
                          std::to_string(kMaxFlowOrderingSearchEdges) + " edges");
  }
  const std::vector<int> opt = flow_optimum_table(instance);
  std::vector<int> value(std::size_t{1} << n);
  for (SubsetMask mask = 0; mask < value.size(); ++mask) {
    std::vector<bool> built(n);
    for (std::size_t e = 0; e < n; ++e) built[e] = (mask >> e & 1) != 0;
    value[mask] = detail::max_flow_of(instance, built);
  }

  BestOrdering best;
  std::vector<EdgeIndex> prefix;
  auto descend = [&](auto&& self, SubsetMask mask, double partial) -> void {
    if (partial >= best.ratio) return;
    if (prefix.size() == n) {
      best = {prefix, partial};
      return;
    }
    for (EdgeIndex e = 0; e < n; ++e) {
      if (mask >> e & 1) continue;
      const SubsetMask next = mask | (SubsetMask{1} << e);
      prefix.push_back(e);
      const std::size_t k = prefix.size();
      self(self, next, std::max(partial, ratio_of(opt[k], value[next])));
      prefix.pop_back();
    }
  };
  descend(descend, 0, 1.0);
  if (best.order.empty()) {
    best.order.resize(n);
    for (std::size_t e = 0; e < n; ++e) best.order[e] = e;
    best.ratio = flow_ratio(instance, best.order).ratio;
  }
  return best;
}

enum class PotentialLoss { kIdentity, kSignedQuadratic };

inline double apply_loss(PotentialLoss psi, double x) {
  return psi == PotentialLoss::kIdentity ? x : x * std::abs(x);
}

inline double invert_loss(PotentialLoss psi, double y) {
  if (psi == PotentialLoss::kIdentity) return y;
  return std::copysign(std::sqrt(std::abs(y)), y);
}

// Parallel s-t edges: loss coefficients beta, capacities mu, and building
// costs (weights) for the knapsack side.
struct PotentialInstance {
  std::vector<double> beta;
  std::vector<double> mu;
  PotentialLoss psi = PotentialLoss::kIdentity;
  std::vector<double> weights;

  std::size_t size() const { return beta.size(); }
};

namespace detail {

inline void check_potential(const PotentialInstance& p) {
  if (p.beta.empty()) throw InputError("potential instance needs at least one edge");
  if (p.mu.size() != p.beta.size() || p.weights.size() != p.beta.size()) {
    throw InputError("beta, mu and weights must have equal length");
  }
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (!(p.beta[e] > 0.0) || !std::isfinite(p.beta[e])) {
      throw InputError("beta must be positive");
    }
    if (!(p.mu[e] > 0.0) || !std::isfinite(p.mu[e])) {
      throw InputError("mu must be positive");
    }
  }
}

}  // namespace detail

// Candidate potentials p_i = beta_i psi(mu_i).
inline std::vector<double> candidate_potentials(const PotentialInstance& p) {
  std::vector<double> result;
  for (std::size_t i = 0; i < p.size(); ++i) {
    result.push_back(p.beta[i] * apply_loss(p.psi, p.mu[i]));
  }
  return result;
}

// Clause i holds x_e(p_i) = psi^-1(p_i / beta_e) where that respects mu_e,
// and 0 where the edge would be overloaded (it is switched off).
inline Instance potential_to_xos(const PotentialInstance& p) {
  detail::check_potential(p);
  std::vector<std::vector<double>> clauses;
  for (double potential : candidate_potentials(p)) {
    std::vector<double> clause(p.size(), 0.0);
    for (std::size_t e = 0; e < p.size(); ++e) {
      const double x = invert_loss(p.psi, potential / p.beta[e]);
      if (x <= p.mu[e] + kTolerance) clause[e] = std::min(x, p.mu[e]);
    }
    clauses.push_back(std::move(clause));
  }
  return Instance(p.weights, std::move(clauses));
}

// Direct evaluation of the potential-flow objective for S: every subset S' of
// S and every candidate potential, keeping the feasible maximum.
inline double potential_eval_oracle(const PotentialInstance& p,
                                     std::span<const std::size_t> set) {
  detail::check_potential(p);
  std::vector<std::size_t> edges(set.begin(), set.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() > kMaxPotentialOracleEdges) {
    throw CapabilityError("potential oracle is limited to " +
                          std::to_string(kMaxPotentialOracleEdges) + " edges");
  }
  for (std::size_t e : edges) {
    if (e >= p.size()) throw InputError("unknown edge index " + std::to_string(e));
  }
  const std::vector<double> potentials = candidate_potentials(p);
  double best = 0.0;
  for (SubsetMask sub = 1; sub < (SubsetMask{1} << edges.size()); ++sub) {
    for (double potential : potentials) {
      double total = 0.0;
      bool feasible = true;
      for (std::size_t j = 0; j < edges.size() && feasible; ++j) {
        if (!(sub >> j & 1)) continue;
        const std::size_t e = edges[j];
        const double x = invert_loss(p.psi, potential / p.beta[e]);
        if (x > p.mu[e] + kTolerance) feasible = false;
        total += x;
      }
      if (feasible) best = std::max(best, total);
    }
  }
  return best;
}

}  // namespace inckap
