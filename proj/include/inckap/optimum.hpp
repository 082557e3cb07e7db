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

// Exact optimum oracle for  max f(S) s.t. w(S) <= C  by subset enumeration.
//
// f*(C) is a nondecreasing right-continuous step function whose jumps sit at
// subset weights, so the finite table of distinct subset weights (the
// breakpoints) determines it everywhere. Optimum sets are canonical: highest
// value, then smallest weight, then lexicographically smallest index list.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "inckap/errors.hpp"
#include "inckap/objective.hpp"

namespace inckap {

inline constexpr std::size_t kMaxEnumerationElements = 22;

struct OptimumPoint {
  double capacity = 0.0;
  double value = 0.0;  // f*(capacity)
  ElementSet set;      // S*_capacity
};

namespace detail {

inline void check_enumeration_limit(const Instance& instance) {
  if (instance.size() > kMaxEnumerationElements) {
    throw CapabilityError("exhaustive enumeration is limited to " +
                          std::to_string(kMaxEnumerationElements) +
                          " elements, instance has " +
                          std::to_string(instance.size()));
  }
}

// Lexicographic order of the sorted index lists of two subsets.
inline bool lex_less(SubsetMask a, SubsetMask b) {
  if (a == b) return false;
  const SubsetMask diff = a ^ b;
  const SubsetMask lowest = diff & (~diff + 1);
  const bool a_holds = (a & lowest) != 0;
  const SubsetMask other = a_holds ? b : a;
  // The set owning the first difference is smaller unless the other set has
  // nothing beyond that point (then the other is a proper prefix).
  const bool other_continues = (other & ~((lowest << 1) - 1)) != 0;
  return a_holds == other_continues;
}

struct Candidate {
  double value;
  double weight;
  SubsetMask mask;
};

// Strict total order used to pick S*_C.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.weight != b.weight) return a.weight < b.weight;
  return lex_less(a.mask, b.mask);
}

// Depth-first enumeration of all subsets with weight <= cap + tol. Weights and
// clause sums accumulate in increasing element order (see evaluate_sorted).
template <typename Visit>
void enumerate_subsets(const Instance& instance, double cap, Visit&& visit) {
  const std::size_t m = instance.size();
  const std::size_t k = instance.num_clauses();
  std::vector<double> sums((m + 1) * k, 0.0);
  std::vector<double> weight(m + 1, 0.0);
  const double limit = cap + kTolerance;
  auto rec = [&](auto&& self, std::size_t level, SubsetMask mask) -> void {
    if (level == m) {
      double value = 0.0;
      for (std::size_t i = 0; i < k; ++i) value = std::max(value, sums[level * k + i]);
      visit(mask, weight[level], value);
      return;
    }
    std::copy_n(&sums[level * k], k, &sums[(level + 1) * k]);
    weight[level + 1] = weight[level];
    self(self, level + 1, mask);
    const double with = weight[level] + instance.weight(level);
    if (with <= limit) {
      for (std::size_t i = 0; i < k; ++i) {
        sums[(level + 1) * k + i] = sums[level * k + i] + instance.value(i, level);
      }
      weight[level + 1] = with;
      self(self, level + 1, mask | (SubsetMask{1} << level));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// S*_C by pruned enumeration. C below the minimum weight gives the empty set.
inline OptimumPoint optimum(const Instance& instance, double capacity) {
  detail::check_enumeration_limit(instance);
  if (!(capacity >= 0.0)) throw InputError("capacity must be nonnegative");
  detail::Candidate best{0.0, 0.0, 0};
  detail::enumerate_subsets(instance, capacity,
                            [&](SubsetMask mask, double w, double v) {
                              const detail::Candidate c{v, w, mask};
                              if (detail::better(c, best)) best = c;
                            });
  return {capacity, best.value, mask_to_set(best.mask)};
}

struct Breakpoint {
  double capacity = 0.0;  // a subset weight
  double value = 0.0;     // f*(capacity)
  SubsetMask set = 0;     // S*_capacity
};

// Distinct subset weights (merged within the tolerance) with f* at each.
// The first row is always capacity 0 with the empty set.
class BreakpointTable {
 public:
  explicit BreakpointTable(const Instance& instance) {
    detail::check_enumeration_limit(instance);
    const std::size_t count = std::size_t{1} << instance.size();
    std::vector<double> weight(count), value(count);
    detail::enumerate_subsets(
        instance, std::numeric_limits<double>::infinity(),
        [&](SubsetMask mask, double w, double v) {
          weight[mask] = w;
          value[mask] = v;
        });
    std::vector<SubsetMask> order(count);
    std::iota(order.begin(), order.end(), SubsetMask{0});
    std::stable_sort(order.begin(), order.end(), [&](SubsetMask a, SubsetMask b) {
      return weight[a] < weight[b];
    });

    detail::Candidate best{0.0, 0.0, 0};
    std::size_t next = 0;
    while (next < count) {
      const double capacity = weight[order[next]];
      while (next < count && weight[order[next]] <= capacity + kTolerance) {
        const SubsetMask mask = order[next++];
        const detail::Candidate c{value[mask], weight[mask], mask};
        if (detail::better(c, best)) best = c;
      }
      rows_.push_back({capacity, best.value, best.mask});
    }
  }

  std::span<const Breakpoint> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const Breakpoint& operator[](std::size_t j) const { return rows_[j]; }

  // Row of the largest breakpoint <= capacity (within tolerance).
  const Breakpoint& at(double capacity) const {
    auto it = std::upper_bound(
        rows_.begin(), rows_.end(), capacity + kTolerance,
        [](double c, const Breakpoint& row) { return c < row.capacity; });
    if (it == rows_.begin()) return rows_.front();
    return *std::prev(it);
  }
  double value_at(double capacity) const { return at(capacity).value; }

  // f* just below a capacity: the largest breakpoint b with b + tol < limit.
  double value_below(double limit) const {
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), limit - kTolerance,
        [](const Breakpoint& row, double c) { return row.capacity < c; });
    if (it == rows_.begin()) return 0.0;
    return std::prev(it)->value;
  }

 private:
  std::vector<Breakpoint> rows_;
};

inline BreakpointTable breakpoints(const Instance& instance) {
  return BreakpointTable(instance);
}

// Orders a set by nonincreasing gamma*_e(set) / w(e), breaking ties by the
// larger gamma and then the lower index.
inline std::vector<ElementIndex> density_order(const Instance& instance,
                                               std::span<const ElementIndex> set) {
  ElementSet sorted = normalize_set(instance, set);
  if (sorted.empty()) return {};
  const DualCertificate cert = dual_solution(instance, sorted);
  std::vector<std::size_t> pos(sorted.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    const double da = cert.gamma[a] / instance.weight(sorted[a]);
    const double db = cert.gamma[b] / instance.weight(sorted[b]);
    if (da != db) return da > db;
    if (cert.gamma[a] != cert.gamma[b]) return cert.gamma[a] > cert.gamma[b];
    return sorted[a] < sorted[b];
  });
  std::vector<ElementIndex> ordered;
  ordered.reserve(sorted.size());
  for (std::size_t p : pos) ordered.push_back(sorted[p]);
  return ordered;
}

// S*_{C'} in density order.
inline std::vector<ElementIndex> ordered_optimum(const Instance& instance,
                                                 double outer_capacity) {
  return density_order(instance, optimum(instance, outer_capacity).set);
}

// S*_{C',C}: the longest density-ordered prefix of S*_{C'} weighing <= C.
inline ElementSet prefix_set(const Instance& instance, double outer_capacity,
                             double capacity) {
  if (!(capacity >= 0.0)) throw InputError("capacity must be nonnegative");
  if (capacity > outer_capacity + kTolerance) {
    throw InputError("prefix capacity exceeds the outer capacity");
  }
  ElementSet prefix;
  double weight = 0.0;
  for (ElementIndex e : ordered_optimum(instance, outer_capacity)) {
    weight += instance.weight(e);
    if (weight > capacity + kTolerance) break;
    prefix.push_back(e);
  }
  std::sort(prefix.begin(), prefix.end());
  return prefix;
}

}  // namespace inckap
