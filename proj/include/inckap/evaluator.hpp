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

// Competitive ratio of an ordering: sup over C > 0 of f*(C) / f(pi(C)).
//
// Both f* and C -> f(pi(C)) are right-continuous step functions that only
// jump at subset weights, so the ratio is constant between consecutive
// breakpoints and the supremum is a maximum over the positive breakpoints.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "inckap/algscale.hpp"
#include "inckap/errors.hpp"
#include "inckap/objective.hpp"
#include "inckap/optimum.hpp"

namespace inckap {

inline constexpr std::size_t kMaxOrderingSearchElements = 10;

// 0/0 -> 1, x/0 -> inf for x > 0.
inline double ratio_of(double opt, double alg) {
  if (alg > 0.0) return opt / alg;
  return opt > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

struct RatioRow {
  double capacity = 0.0;
  double opt = 0.0;
  double alg = 0.0;
  double ratio = 1.0;
};

struct RatioCurve {
  std::vector<RatioRow> rows;
  double ratio = 1.0;  // max(1, max over rows)
};

// f of the longest prefix of `ordering` weighing at most C.
inline double prefix_value(const Instance& instance,
                           std::span<const ElementIndex> ordering,
                           double capacity) {
  ElementSet prefix;
  double weight = 0.0;
  for (ElementIndex e : ordering) {
    if (e >= instance.size()) {
      throw InputError("unknown element index " + std::to_string(e));
    }
    weight += instance.weight(e);
    if (weight > capacity + kTolerance) break;
    prefix.push_back(e);
  }
  return evaluate(instance, prefix);
}

inline RatioCurve competitive_ratio(const Instance& instance,
                                    const BreakpointTable& table,
                                    std::span<const ElementIndex> ordering) {
  if (ordering.size() != instance.size()) {
    throw InputError("ordering must list every element exactly once");
  }
  const IncrementalOrdering stats =
      make_ordering(instance, {ordering.begin(), ordering.end()});
  RatioCurve curve;
  std::size_t placed = 0;  // number of prefix elements fitting so far
  for (const Breakpoint& row : table.rows()) {
    if (row.capacity <= 0.0) continue;
    while (placed < stats.order.size() &&
           stats.prefix_weights[placed] <= row.capacity + kTolerance) {
      ++placed;
    }
    const double alg = placed == 0 ? 0.0 : stats.prefix_values[placed - 1];
    const RatioRow r{row.capacity, row.value, alg, ratio_of(row.value, alg)};
    curve.ratio = std::max(curve.ratio, r.ratio);
    curve.rows.push_back(r);
  }
  return curve;
}

inline RatioCurve competitive_ratio(const Instance& instance,
                                    std::span<const ElementIndex> ordering) {
  return competitive_ratio(instance, BreakpointTable(instance), ordering);
}

struct BestOrdering {
  std::vector<ElementIndex> order;
  double ratio = std::numeric_limits<double>::infinity();
};

namespace detail {

// Branch and bound over permutations. After appending an element with
// cumulative weight W_k, every capacity below W_k has its algorithm value
// fixed, so the ratio over those capacities is a lower bound for every
// completion. Children are visited in increasing index order and only strict
// improvements replace the incumbent, which yields the lexicographically
// smallest optimal ordering.
class OrderingSearch {
 public:
  OrderingSearch(const Instance& instance, const BreakpointTable& table)
      : instance_(instance), table_(table), m_(instance.size()) {
    mask_value_.resize(std::size_t{1} << m_);
    for (SubsetMask mask = 0; mask < mask_value_.size(); ++mask) {
      mask_value_[mask] = evaluate_mask(instance, mask);
    }
    final_ratio_ = ratio_of(table.rows().back().value,
                            mask_value_[mask_value_.size() - 1]);
  }

  // Best ordering among those starting with `first`; `shared_bound` holds the
  // best ratio any worker has completed (pruning against it is strict so that
  // ties still resolve by lexicographic order).
  BestOrdering search_from(ElementIndex first, const std::atomic<double>* shared_bound) {
    shared_ = shared_bound;
    best_ = {};
    prefix_.assign(1, first);
    const double w = instance_.weight(first);
    const double partial = ratio_of(table_.value_below(w), 0.0);
    descend(SubsetMask{1} << first, w, partial);
    return best_;
  }

 private:
  void descend(SubsetMask mask, double weight, double partial) {
    if (partial >= best_.ratio) return;
    if (shared_ != nullptr && partial > shared_->load(std::memory_order_relaxed)) return;
    if (prefix_.size() == m_) {
      const double ratio = std::max(partial, final_ratio_);
      if (ratio < best_.ratio) best_ = {prefix_, ratio};
      return;
    }
    const double current = mask_value_[mask];
    for (ElementIndex e = 0; e < m_; ++e) {
      const SubsetMask bit = SubsetMask{1} << e;
      if (mask & bit) continue;
      const double w = weight + instance_.weight(e);
      const double bound = std::max(partial, ratio_of(table_.value_below(w), current));
      prefix_.push_back(e);
      descend(mask | bit, w, bound);
      prefix_.pop_back();
    }
  }

  const Instance& instance_;
  const BreakpointTable& table_;
  std::size_t m_;
  std::vector<double> mask_value_;
  double final_ratio_ = 1.0;
  const std::atomic<double>* shared_ = nullptr;
  std::vector<ElementIndex> prefix_;
  BestOrdering best_;
};

}  // namespace detail

// Minimum competitive ratio over all m! orderings (m <= 10). With threads > 1
// the first-element choices are split across workers; the result is
// identical to the sequential search.
inline BestOrdering best_ordering(const Instance& instance, unsigned threads = 1) {
  if (instance.size() > kMaxOrderingSearchElements) {
    throw CapabilityError("ordering search is limited to " +
                          std::to_string(kMaxOrderingSearchElements) + " elements");
  }
  const BreakpointTable table(instance);
  const std::size_t m = instance.size();
  std::vector<BestOrdering> per_first(m);
  std::atomic<double> shared{std::numeric_limits<double>::infinity()};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::OrderingSearch search(instance, table);
    for (std::size_t first = next++; first < m; first = next++) {
      per_first[first] = search.search_from(first, &shared);
      double seen = shared.load();
      while (per_first[first].ratio < seen &&
             !shared.compare_exchange_weak(seen, per_first[first].ratio)) {
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BestOrdering best;
  for (const BestOrdering& candidate : per_first) {
    if (!candidate.order.empty() && candidate.ratio < best.ratio) best = candidate;
  }
  if (best.order.empty()) {
    // Every ordering is unbounded; report the identity.
    best.order.resize(m);
    std::iota(best.order.begin(), best.order.end(), ElementIndex{0});
    best.ratio = competitive_ratio(instance, table, best.order).ratio;
  }
  return best;
}

}  // namespace inckap
