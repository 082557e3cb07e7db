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

// Capacity- and value-scaling construction of an incremental ordering.
//
// The ordering is assembled in phases with capacities C_1 < ... < C_N:
//   C_1 = min_e w(e),
//   C_i = min { C >= delta * C_{i-1} : f*(C) >= rho * f*(C_{i-1}) },
//   C_N = w(E),
// and phase i appends the elements of S*_{C_i} that are not yet placed.
// lambda is the real root of
//   x^7 - 2x^6 - 3x^5 - 3x^4 - 3x^3 - 2x^2 - x - 1,
// delta = lambda^3 / (lambda^2 + 1) and rho(M) = max(lambda sqrt(M), 2M).
// The resulting ordering is rho(M)-competitive for M-bounded XOS objectives.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "inckap/errors.hpp"
#include "inckap/objective.hpp"
#include "inckap/optimum.hpp"

namespace inckap {

// Evaluated in extended precision so the residual of a double root is not
// swamped by rounding in the evaluation itself.
inline long double scaling_polynomial(long double x) {
  static constexpr long double kCoefficients[] = {1, -2, -3, -3, -3, -2, -1, -1};
  long double acc = 0;
  for (long double c : kCoefficients) acc = acc * x + c;
  return acc;
}

struct Constants {
  double lambda = 0.0;
  double delta = 0.0;

  double rho(double max_singleton) const {
    return std::max(lambda * std::sqrt(max_singleton), 2.0 * max_singleton);
  }
};

inline Constants compute_constants() {
  // p(3) < 0 < p(4); bisect until the bracket stops shrinking.
  long double lo = 3.0L, hi = 4.0L;
  for (int iter = 0; iter < 200; ++iter) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (scaling_polynomial(mid) < 0 ? lo : hi) = mid;
  }
  // Pick the double closest to the root in residual.
  double lambda = static_cast<double>(lo);
  for (double candidate : {std::nextafter(lambda, 3.0), std::nextafter(lambda, 4.0)}) {
    if (std::fabs(scaling_polynomial(candidate)) < std::fabs(scaling_polynomial(lambda))) {
      lambda = candidate;
    }
  }
  Constants c;
  c.lambda = lambda;
  c.delta = lambda * lambda * lambda / (lambda * lambda + 1.0);
  return c;
}

struct Phase {
  double capacity = 0.0;       // C_i
  double optimum_value = 0.0;  // f*(C_i)
  ElementSet target;           // S*_{C_i}
};

struct PhaseSchedule {
  std::vector<Phase> phases;

  std::size_t size() const { return phases.size(); }
};

struct IncrementalOrdering {
  std::vector<ElementIndex> order;
  std::vector<double> prefix_weights;  // w of the first j+1 elements
  std::vector<double> prefix_values;   // f of the first j+1 elements
};

namespace detail {

inline ValidationReport require_valid(const Instance& instance) {
  ValidationReport report = validate(instance);
  if (!report.ok) {
    std::string what = "invalid instance:";
    for (const auto& v : report.violations) what += " " + v + ";";
    throw InputError(what);
  }
  return report;
}

}  // namespace detail

inline PhaseSchedule phase_schedule(const Instance& instance,
                                    const BreakpointTable& table) {
  const ValidationReport report = detail::require_valid(instance);
  const Constants constants = compute_constants();
  const double rho = constants.rho(report.max_singleton);
  const double total = instance.total_weight();

  auto make_phase = [&](double capacity) {
    const Breakpoint& row = table.at(capacity);
    return Phase{capacity, row.value, mask_to_set(row.set)};
  };

  PhaseSchedule schedule;
  const double first =
      *std::min_element(instance.weights().begin(), instance.weights().end());
  schedule.phases.push_back(make_phase(first));
  if (first >= total - kTolerance) return schedule;

  while (true) {
    const Phase& prev = schedule.phases.back();
    const double start = constants.delta * prev.capacity;
    const double threshold = rho * prev.optimum_value - kTolerance;
    double next = total;
    if (start < total - kTolerance) {
      if (table.value_at(start) >= threshold) {
        next = start;
      } else {
        // f* is nondecreasing, so the first qualifying breakpoint past start
        // is the minimum.
        for (const Breakpoint& row : table.rows()) {
          if (row.capacity > start && row.value >= threshold) {
            next = std::min(row.capacity, total);
            break;
          }
        }
      }
    }
    if (next >= total - kTolerance) {
      schedule.phases.push_back(make_phase(total));
      return schedule;
    }
    schedule.phases.push_back(make_phase(next));
  }
}

inline PhaseSchedule phase_schedule(const Instance& instance) {
  return phase_schedule(instance, BreakpointTable(instance));
}

// Prefix weights and values of an arbitrary sequence of distinct elements.
inline IncrementalOrdering make_ordering(const Instance& instance,
                                         std::vector<ElementIndex> order) {
  std::vector<bool> seen(instance.size(), false);
  for (ElementIndex e : order) {
    if (e >= instance.size()) {
      throw InputError("unknown element index " + std::to_string(e));
    }
    if (seen[e]) throw InputError("element repeated in ordering");
    seen[e] = true;
  }
  IncrementalOrdering result;
  ElementSet prefix;
  double weight = 0.0;
  for (ElementIndex e : order) {
    weight += instance.weight(e);
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), e), e);
    result.prefix_weights.push_back(weight);
    result.prefix_values.push_back(detail::evaluate_sorted(instance, prefix));
  }
  result.order = std::move(order);
  return result;
}

inline IncrementalOrdering build_ordering(const Instance& instance,
                                          const PhaseSchedule& schedule) {
  std::vector<bool> placed(instance.size(), false);
  std::vector<ElementIndex> order;
  auto place = [&](ElementIndex e) {
    if (!placed[e]) {
      placed[e] = true;
      order.push_back(e);
    }
  };

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const ElementSet& target = schedule.phases[i].target;
    if (i == 0) {
      for (ElementIndex e : target) place(e);
    } else if (i == 1) {
      // Highest singleton value first, then the rest in index order.
      if (!target.empty()) {
        const auto first = std::min_element(
            target.begin(), target.end(), [&](ElementIndex a, ElementIndex b) {
              const double va = instance.singleton_value(a);
              const double vb = instance.singleton_value(b);
              if (va != vb) return va > vb;
              if (instance.weight(a) != instance.weight(b)) {
                return instance.weight(a) > instance.weight(b);
              }
              return a < b;
            });
        place(*first);
      }
      for (ElementIndex e : target) place(e);
    } else {
      for (ElementIndex e : density_order(instance, target)) place(e);
    }
  }

  std::vector<ElementIndex> rest;
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    if (!placed[e]) rest.push_back(e);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](ElementIndex a, ElementIndex b) {
    return instance.singleton_value(a) / instance.weight(a) >
           instance.singleton_value(b) / instance.weight(b);
  });
  for (ElementIndex e : rest) place(e);
  return make_ordering(instance, std::move(order));
}

inline IncrementalOrdering build_ordering(const Instance& instance) {
  return build_ordering(instance, phase_schedule(instance));
}

}  // namespace inckap
