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

// Built-in lower-bound instances and seeded generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard, and doubles are formed as (x >> 11) * 2^-53. The standard
// distributions are avoided because their output is implementation-defined.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "inckap/errors.hpp"
#include "inckap/flows.hpp"
#include "inckap/objective.hpp"

namespace inckap {

inline constexpr std::size_t kMaxCoverageUniverse = 12;
inline constexpr std::size_t kMaxCoverageSets = 16;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, n).
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

// Two elements, weights (1, 2), one modular clause (1, M).
inline Instance gen_m_bound(double max_singleton) {
  if (!(max_singleton >= 1.0)) throw InputError("M must be at least 1");
  return Instance({1.0, 2.0}, {{1.0, max_singleton}});
}

// E1 = {e1} (weight 101), E2 = {e2,e3,e4} (weight 102), E3 = {e5..e10}
// (weight 103) with f(X) = max{|X cap E1|, (sqrt6/3)|X cap E2|, |X cap E3|,
// [e2 in X], [e3 in X], [e4 in X]}. Every singleton has value 1.
inline Instance gen_sqrt6() {
  constexpr std::size_t m = 10;
  std::vector<double> weights(m, 103.0);
  weights[0] = 101.0;
  for (std::size_t e = 1; e <= 3; ++e) weights[e] = 102.0;
  const double third = std::sqrt(6.0) / 3.0;
  std::vector<std::vector<double>> clauses(6, std::vector<double>(m, 0.0));
  clauses[0][0] = 1.0;
  for (std::size_t e = 1; e <= 3; ++e) clauses[1][e] = third;
  for (std::size_t e = 4; e < m; ++e) clauses[2][e] = 1.0;
  for (std::size_t e = 1; e <= 3; ++e) clauses[2 + e][e] = 1.0;
  return Instance(std::move(weights), std::move(clauses));
}

// Weights uniform in [1, 10], clause values uniform in [0, M]. A column whose
// maximum falls below 1 is rescaled so that its maximum is exactly 1 (or, if
// all zero, its first clause entry is set to 1), making every singleton value
// lie in [1, M].
inline Instance gen_random_xos(std::size_t m, std::size_t k, double max_singleton,
                               std::uint64_t seed) {
  if (m == 0 || k == 0) throw InputError("m and k must be positive");
  if (m > 64) throw InputError("m must be at most 64");
  if (!(max_singleton >= 1.0)) throw InputError("M must be at least 1");
  Rng rng(seed);
  std::vector<double> weights(m);
  for (double& w : weights) w = rng.uniform(1.0, 10.0);
  std::vector<std::vector<double>> clauses(k, std::vector<double>(m));
  for (auto& clause : clauses) {
    for (double& v : clause) v = rng.uniform(0.0, max_singleton);
  }
  for (std::size_t e = 0; e < m; ++e) {
    double top = 0.0;
    for (const auto& clause : clauses) top = std::max(top, clause[e]);
    if (top == 0.0) {
      clauses[0][e] = 1.0;
    } else if (top < 1.0) {
      for (auto& clause : clauses) clause[e] /= top;
    }
  }
  return Instance(std::move(weights), std::move(clauses));
}

// Coverage objective f(S) = |union of the sets in S| with unit item values.
struct CoverageInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
  Instance instance;  // exact XOS compilation, unit weights
};

inline double coverage_value(const CoverageInstance& coverage,
                             std::span<const ElementIndex> chosen) {
  std::vector<bool> covered(coverage.universe_size, false);
  for (ElementIndex s : chosen) {
    for (std::size_t item : coverage.sets.at(s)) covered[item] = true;
  }
  return static_cast<double>(std::count(covered.begin(), covered.end(), true));
}

// One clause per subset T of the sets: every item covered by T is credited to
// the lowest-index set of T containing it. A clause never exceeds the
// coverage of any S (it only credits items inside their own set), and the
// clause for T = S attains it, so the maximum is exact.
inline CoverageInstance compile_coverage(std::size_t universe_size,
                                         std::vector<std::vector<std::size_t>> sets) {
  if (universe_size == 0 || universe_size > kMaxCoverageUniverse) {
    throw InputError("coverage universe must have 1.." +
                     std::to_string(kMaxCoverageUniverse) + " items");
  }
  if (sets.empty() || sets.size() > kMaxCoverageSets) {
    throw InputError("coverage instances need 1.." +
                     std::to_string(kMaxCoverageSets) + " sets");
  }
  const std::size_t m = sets.size();
  for (auto& s : sets) {
    for (std::size_t item : s) {
      if (item >= universe_size) throw InputError("coverage item out of range");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::set<std::vector<double>> unique_clauses;
  for (SubsetMask t = 1; t < (SubsetMask{1} << m); ++t) {
    std::vector<double> clause(m, 0.0);
    std::vector<bool> credited(universe_size, false);
    for (std::size_t s = 0; s < m; ++s) {
      if (!(t >> s & 1)) continue;
      for (std::size_t item : sets[s]) {
        if (!credited[item]) {
          credited[item] = true;
          clause[s] += 1.0;
        }
      }
    }
    unique_clauses.insert(std::move(clause));
  }
  std::vector<std::string> ids;
  for (std::size_t s = 0; s < m; ++s) ids.push_back("X" + std::to_string(s + 1));
  Instance instance(std::move(ids), std::vector<double>(m, 1.0),
                    {unique_clauses.begin(), unique_clauses.end()});
  return {universe_size, std::move(sets), std::move(instance)};
}

// Random nonempty subsets of {0..universe_size-1}, each item present with
// probability 1/2.
inline CoverageInstance gen_coverage(std::size_t universe_size, std::size_t m,
                                     std::uint64_t seed) {
  if (universe_size == 0 || universe_size > kMaxCoverageUniverse) {
    throw InputError("coverage universe must have 1.." +
                     std::to_string(kMaxCoverageUniverse) + " items");
  }
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> sets(m);
  for (auto& s : sets) {
    for (std::size_t item = 0; item < universe_size; ++item) {
      if (rng.uniform() < 0.5) s.push_back(item);
    }
    if (s.empty()) s.push_back(rng.below(universe_size));
  }
  return compile_coverage(universe_size, std::move(sets));
}

// Random directed graph on vertices 0..n-1 with s = 0 and t = n-1. A random
// s-t path is laid down first so that t is reachable; the remaining edges are
// distinct random pairs (u < v when acyclic).
inline FlowInstance gen_random_graph(std::size_t vertices, std::size_t edges,
                                     bool acyclic, std::uint64_t seed) {
  if (vertices < 2) throw InputError("graph needs at least two vertices");
  const std::size_t capacity =
      acyclic ? vertices * (vertices - 1) / 2 : vertices * (vertices - 1);
  if (edges == 0 || edges > capacity) throw InputError("edge count out of range");
  Rng rng(seed);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < vertices; ++v) names.push_back("v" + std::to_string(v));
  std::vector<FlowEdge> list;
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto add = [&](std::size_t u, std::size_t v) {
    if (used.insert({u, v}).second) list.push_back({u, v});
  };
  std::size_t at = 0;
  while (at != vertices - 1 && list.size() < edges) {
    const std::size_t next = at + 1 + rng.below(vertices - 1 - at);
    add(at, next);
    at = next;
  }
  while (list.size() < edges) {
    std::size_t u = rng.below(vertices);
    std::size_t v = rng.below(vertices);
    if (u == v) continue;
    if (acyclic && u > v) std::swap(u, v);
    add(u, v);
  }
  return FlowInstance(std::move(names), 0, vertices - 1, std::move(list));
}

// Parallel-edge potential instance with beta in [0.5, 5], mu in [1, M] and
// weights in [1, 10].
inline PotentialInstance gen_random_potential(std::size_t edges, double max_capacity,
                                              PotentialLoss psi, std::uint64_t seed) {
  if (edges == 0) throw InputError("potential instance needs at least one edge");
  if (!(max_capacity >= 1.0)) throw InputError("M must be at least 1");
  Rng rng(seed);
  PotentialInstance p;
  p.psi = psi;
  for (std::size_t e = 0; e < edges; ++e) {
    p.beta.push_back(rng.uniform(0.5, 5.0));
    p.mu.push_back(rng.uniform(1.0, max_capacity));
    p.weights.push_back(rng.uniform(1.0, 10.0));
  }
  return p;
}

}  // namespace inckap
