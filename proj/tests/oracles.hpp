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

// Slow reference computations used only by the tests. None of them call into
// the library beyond reading instance data.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "inckap/flows.hpp"
#include "inckap/objective.hpp"

namespace oracle {

inline double xos(const inckap::Instance& inst, std::uint64_t mask) {
  double best = 0.0;
  for (const auto& clause : inst.clauses()) {
    double sum = 0.0;
    for (std::size_t e = 0; e < inst.size(); ++e) {
      if (mask >> e & 1) sum += clause[e];
    }
    best = std::max(best, sum);
  }
  return best;
}

inline double weight(const inckap::Instance& inst, std::uint64_t mask) {
  double w = 0.0;
  for (std::size_t e = 0; e < inst.size(); ++e) {
    if (mask >> e & 1) w += inst.weights()[e];
  }
  return w;
}

// f*(C) by scanning every subset.
inline double opt(const inckap::Instance& inst, double capacity) {
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.size()); ++mask) {
    if (weight(inst, mask) <= capacity + 1e-9) best = std::max(best, xos(inst, mask));
  }
  return best;
}

// Distinct positive subset weights.
inline std::vector<double> positive_weights(const inckap::Instance& inst) {
  std::vector<double> all;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << inst.size()); ++mask) {
    all.push_back(weight(inst, mask));
  }
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double w : all) {
    if (out.empty() || w > out.back() + 1e-9) out.push_back(w);
  }
  return out;
}

inline double prefix_value(const inckap::Instance& inst,
                           const std::vector<std::size_t>& order, double capacity) {
  std::uint64_t mask = 0;
  double w = 0.0;
  for (std::size_t e : order) {
    w += inst.weights()[e];
    if (w > capacity + 1e-9) break;
    mask |= std::uint64_t{1} << e;
  }
  return xos(inst, mask);
}

inline double ratio(double o, double a) {
  if (a > 0) return o / a;
  return o > 0 ? std::numeric_limits<double>::infinity() : 1.0;
}

// sup_C f*(C) / f(pi(C)) evaluated at every positive subset weight.
inline double competitive_ratio(const inckap::Instance& inst,
                                const std::vector<std::size_t>& order) {
  double worst = 1.0;
  for (double c : positive_weights(inst)) {
    worst = std::max(worst, ratio(opt(inst, c), prefix_value(inst, order, c)));
  }
  return worst;
}

// Minimum ratio over all permutations, no pruning; rows are precomputed once.
inline double best_ratio(const inckap::Instance& inst) {
  const std::vector<double> caps = positive_weights(inst);
  std::vector<double> opts;
  for (double c : caps) opts.push_back(opt(inst, c));
  std::vector<double> value(std::size_t{1} << inst.size());
  for (std::uint64_t mask = 0; mask < value.size(); ++mask) value[mask] = xos(inst, mask);
  std::vector<std::size_t> perm(inst.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 1.0;
    std::size_t placed = 0;
    std::uint64_t mask = 0;
    double w = 0.0;
    for (std::size_t r = 0; r < caps.size(); ++r) {
      while (placed < perm.size() && w + inst.weights()[perm[placed]] <= caps[r] + 1e-9) {
        w += inst.weights()[perm[placed]];
        mask |= std::uint64_t{1} << perm[placed];
        ++placed;
      }
      worst = std::max(worst, ratio(opts[r], value[mask]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Max flow over built edges as the minimum s-t cut (vertex bipartitions).
inline int max_flow(const inckap::FlowInstance& g, std::uint64_t built) {
  const std::size_t n = g.vertices().size();
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    if (!(side >> g.source() & 1) || (side >> g.sink() & 1)) continue;
    int cut = 0;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!(built >> e & 1)) continue;
      const auto& edge = g.edges()[e];
      if ((side >> edge.from & 1) && !(side >> edge.to & 1)) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Fewest edges carrying a flow of `value`; -1 if impossible.
inline int min_edges(const inckap::FlowInstance& g, int value) {
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (best >= 0 && size >= best) continue;
    if (max_flow(g, mask) >= value) best = size;
  }
  return best;
}

// Flow ratio of an edge ordering, prefix flows via cuts.
inline double flow_ratio(const inckap::FlowInstance& g, const std::vector<std::size_t>& order) {
  const int top = max_flow(g, (std::uint64_t{1} << g.num_edges()) - 1);
  std::vector<int> cj;
  for (int j = 1; j <= top; ++j) cj.push_back(min_edges(g, j));
  double worst = 1.0;
  std::uint64_t mask = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    mask |= std::uint64_t{1} << order[k - 1];
    int fk = 0;
    for (int j = 1; j <= top; ++j) {
      if (cj[j - 1] <= static_cast<int>(k)) fk = j;
    }
    worst = std::max(worst, ratio(fk, max_flow(g, mask)));
  }
  return worst;
}

}  // namespace oracle
