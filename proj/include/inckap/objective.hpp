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

// XOS instances: a ground set with positive weights and an objective given
// as the pointwise maximum of k nonnegative additive functions (clauses).
//
//   f(S) = max_i sum_{e in S} v[i][e]
//
// Every fractionally subadditive function has such a representation, and it
// makes the optimal dual of the covering LP for f(X) available in closed
// form: the coefficients of the clause attaining f(X).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inckap/errors.hpp"

namespace inckap {

// Absolute tolerance for every value and weight comparison.
inline constexpr double kTolerance = 1e-9;

// Largest ground set for which verify_dual_feasible enumerates all subsets.
inline constexpr std::size_t kMaxDualCheckElements = 20;

using ElementIndex = std::size_t;
using ElementSet = std::vector<ElementIndex>;  // sorted, no duplicates
using SubsetMask = std::uint64_t;

class Instance {
 public:
  // clauses[i][e] is the value of element e in clause i.
  Instance(std::vector<std::string> element_ids, std::vector<double> weights,
           std::vector<std::vector<double>> clauses)
      : element_ids_(std::move(element_ids)),
        weights_(std::move(weights)),
        clauses_(std::move(clauses)) {
    const std::size_t m = weights_.size();
    if (m == 0) throw InputError("instance needs at least one element");
    if (m > 64) throw InputError("instances are limited to 64 elements");
    if (clauses_.empty()) throw InputError("instance needs at least one clause");
    if (element_ids_.empty()) {
      for (std::size_t e = 0; e < m; ++e) {
        element_ids_.push_back("e" + std::to_string(e + 1));
      }
    }
    if (element_ids_.size() != m) {
      throw InputError("element id count does not match weight count");
    }
    std::unordered_set<std::string> seen;
    for (const auto& id : element_ids_) {
      if (!seen.insert(id).second) throw InputError("duplicate element id '" + id + "'");
    }
    for (double w : weights_) {
      if (!std::isfinite(w)) throw InputError("weights must be finite");
    }
    for (const auto& clause : clauses_) {
      if (clause.size() != m) {
        throw InputError("clause length does not match element count");
      }
      for (double v : clause) {
        if (!std::isfinite(v) || v < 0.0) {
          throw InputError("clause values must be finite and nonnegative");
        }
      }
    }
    total_weight_ = 0.0;
    for (double w : weights_) total_weight_ += w;
  }

  // Labels default to e1..em.
  Instance(std::vector<double> weights, std::vector<std::vector<double>> clauses)
      : Instance({}, std::move(weights), std::move(clauses)) {}

  std::size_t size() const { return weights_.size(); }
  std::size_t num_clauses() const { return clauses_.size(); }

  const std::vector<std::string>& element_ids() const { return element_ids_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<double>>& clauses() const { return clauses_; }

  double weight(ElementIndex e) const { return weights_[e]; }
  double value(std::size_t clause, ElementIndex e) const {
    return clauses_[clause][e];
  }
  // f({e})
  double singleton_value(ElementIndex e) const {
    double best = 0.0;
    for (const auto& clause : clauses_) best = std::max(best, clause[e]);
    return best;
  }
  double total_weight() const { return total_weight_; }

 private:
  std::vector<std::string> element_ids_;
  std::vector<double> weights_;
  std::vector<std::vector<double>> clauses_;
  double total_weight_ = 0.0;
};

// Sorts and deduplicates; throws InputError on an unknown index.
inline ElementSet normalize_set(const Instance& instance,
                                std::span<const ElementIndex> elements) {
  ElementSet set(elements.begin(), elements.end());
  for (ElementIndex e : set) {
    if (e >= instance.size()) {
      throw InputError("unknown element index " + std::to_string(e));
    }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline ElementSet mask_to_set(SubsetMask mask) {
  ElementSet set;
  for (ElementIndex e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) set.push_back(e);
  }
  return set;
}

inline SubsetMask set_to_mask(std::span<const ElementIndex> set) {
  SubsetMask mask = 0;
  for (ElementIndex e : set) mask |= SubsetMask{1} << e;
  return mask;
}

inline double total_weight(const Instance& instance,
                           std::span<const ElementIndex> set) {
  double w = 0.0;
  for (ElementIndex e : normalize_set(instance, set)) w += instance.weight(e);
  return w;
}

namespace detail {

// Clause sums are accumulated in increasing element order. The subset
// enumerators in optimum.hpp add elements in the same order, so a set's value
// is bit-identical no matter which routine computed it.
inline double evaluate_sorted(const Instance& instance, const ElementSet& set,
                              std::size_t* argmax = nullptr) {
  double best = 0.0;
  std::size_t best_clause = 0;
  for (std::size_t i = 0; i < instance.num_clauses(); ++i) {
    double sum = 0.0;
    for (ElementIndex e : set) sum += instance.value(i, e);
    if (i == 0 || sum > best) {
      best = sum;
      best_clause = i;
    }
  }
  if (argmax != nullptr) *argmax = best_clause;
  return best;
}

}  // namespace detail

// f(S); 0 for the empty set.
inline double evaluate(const Instance& instance,
                       std::span<const ElementIndex> set) {
  return detail::evaluate_sorted(instance, normalize_set(instance, set));
}

inline double evaluate_mask(const Instance& instance, SubsetMask mask) {
  return detail::evaluate_sorted(instance, mask_to_set(mask));
}

struct ValidationReport {
  double max_singleton = 0.0;  // M
  double min_singleton = 0.0;
  bool ok = false;
  std::vector<std::string> violations;
};

// Checks positivity of weights and M-boundedness (every singleton value at
// least 1). Monotonicity and fractional subadditivity hold for any
// nonnegative clause matrix and are not re-checked.
inline ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  report.min_singleton = std::numeric_limits<double>::infinity();
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    const double v = instance.singleton_value(e);
    report.max_singleton = std::max(report.max_singleton, v);
    report.min_singleton = std::min(report.min_singleton, v);
    if (!(instance.weight(e) > 0.0)) {
      report.violations.push_back("nonpositive weight for element '" +
                                  instance.element_ids()[e] + "'");
    }
    if (v < 1.0 - kTolerance) {
      report.violations.push_back("singleton value below 1 for element '" +
                                  instance.element_ids()[e] + "'");
    }
  }
  report.ok = report.violations.empty();
  return report;
}

struct DualCertificate {
  ElementSet subset;
  std::vector<double> gamma;  // gamma[j] belongs to subset[j]
  std::size_t clause_index = 0;

  double total() const {
    double s = 0.0;
    for (double g : gamma) s += g;
    return s;
  }
};

// Optimal dual of the covering LP for f(X): the coefficients of the clause
// attaining f(X), lowest clause index on ties.
inline DualCertificate dual_solution(const Instance& instance,
                                     std::span<const ElementIndex> x) {
  DualCertificate cert;
  cert.subset = normalize_set(instance, x);
  if (cert.subset.empty()) throw InputError("dual_solution needs a nonempty set");
  detail::evaluate_sorted(instance, cert.subset, &cert.clause_index);
  cert.gamma.reserve(cert.subset.size());
  for (ElementIndex e : cert.subset) {
    cert.gamma.push_back(instance.value(cert.clause_index, e));
  }
  return cert;
}

// Weak-duality check by enumeration of every B subset of E:
//   sum_{e in B cap X} gamma_e <= f(B) + tol,  and  sum gamma = f(X) +- tol.
inline bool verify_dual_feasible(const Instance& instance,
                                 const DualCertificate& cert) {
  const std::size_t m = instance.size();
  if (m > kMaxDualCheckElements) {
    throw CapabilityError("dual feasibility check is limited to " +
                          std::to_string(kMaxDualCheckElements) + " elements");
  }
  if (cert.gamma.size() != cert.subset.size()) return false;
  std::vector<double> gamma_of(m, 0.0);
  std::vector<bool> in_x(m, false);
  for (std::size_t j = 0; j < cert.subset.size(); ++j) {
    const ElementIndex e = cert.subset[j];
    if (e >= m || in_x[e]) return false;
    if (!(cert.gamma[j] >= 0.0)) return false;
    in_x[e] = true;
    gamma_of[e] = cert.gamma[j];
  }
  if (std::abs(cert.total() - evaluate(instance, cert.subset)) > kTolerance) {
    return false;
  }

  const std::size_t k = instance.num_clauses();
  // sums[level * k + i]: clause-i sum of the elements chosen among 0..level-1.
  std::vector<double> sums((m + 1) * k, 0.0);
  std::vector<double> lhs(m + 1, 0.0);
  bool feasible = true;
  auto visit = [&](auto&& self, std::size_t level) -> void {
    if (!feasible) return;
    if (level == m) {
      double f = 0.0;
      for (std::size_t i = 0; i < k; ++i) f = std::max(f, sums[level * k + i]);
      if (lhs[level] > f + kTolerance) feasible = false;
      return;
    }
    std::copy_n(&sums[level * k], k, &sums[(level + 1) * k]);
    lhs[level + 1] = lhs[level];
    self(self, level + 1);
    for (std::size_t i = 0; i < k; ++i) {
      sums[(level + 1) * k + i] = sums[level * k + i] + instance.value(i, level);
    }
    lhs[level + 1] = lhs[level] + gamma_of[level];
    self(self, level + 1);
  };
  visit(visit, 0);
  return feasible;
}

}  // namespace inckap
