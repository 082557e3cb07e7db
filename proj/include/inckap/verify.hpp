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

// Certification suites: each check reruns one of the worst-case bounds on
// built-in or seeded random instances and reports measured against expected.
//
//   paperbounds  constants, the rho(M) upper bound, the M and sqrt(6) lower
//                bounds
//   lemmas       dual-consistency and density-prefix inequalities, dual
//                certificates
//   flows        Quickest-Increment ratio 2, the blocking-path lower bound,
//                potential flows as XOS, min-cost-flow edge counts

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "inckap/algscale.hpp"
#include "inckap/evaluator.hpp"
#include "inckap/flows.hpp"
#include "inckap/instances.hpp"
#include "inckap/io.hpp"
#include "inckap/objective.hpp"
#include "inckap/optimum.hpp"

namespace inckap::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
};

struct Options {
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

namespace detail {

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string count(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

// Seeded random XOS instance of size m in [lo, hi] and 1..4 clauses.
inline Instance sample_instance(Rng& rng, std::size_t lo, std::size_t hi,
                                double max_singleton) {
  const std::size_t m = lo + rng.below(hi - lo + 1);
  const std::size_t k = 1 + rng.below(4);
  const std::uint64_t seed = static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53);
  return gen_random_xos(m, k, max_singleton, seed);
}

inline ElementSet sample_subset(Rng& rng, std::size_t m, bool nonempty) {
  ElementSet s;
  while (true) {
    s.clear();
    for (ElementIndex e = 0; e < m; ++e) {
      if (rng.uniform() < 0.5) s.push_back(e);
    }
    if (!nonempty || !s.empty()) return s;
  }
}

}  // namespace detail

// lambda solves the degree-7 polynomial to 1e-12 and lies in (3.2923,
// 3.2925); delta lies in (3.0142, 3.0144).
inline CheckResult check_constants() {
  const Constants c = compute_constants();
  const double residual = static_cast<double>(std::fabs(scaling_polynomial(c.lambda)));
  const bool ok = residual <= 1e-12 && c.lambda > 3.2923 && c.lambda < 3.2925 &&
                  c.delta > 3.0142 && c.delta < 3.0144;
  return {"constants", ok,
          "lambda=" + detail::num(c.lambda) + " delta=" + detail::num(c.delta) +
              " residual=" + detail::num(residual),
          "lambda in (3.2923,3.2925), delta in (3.0142,3.0144), residual <= 1e-12"};
}

// The scaling ordering is rho(M)-competitive on 100 random instances per M.
inline CheckResult check_upper_bound(const Options& opt,
                                     const std::vector<double>& ms = {1, 2, 4, 8},
                                     std::size_t per_m = 100) {
  Rng rng(opt.seed ^ 0x5ca1ab1eULL);
  std::size_t ok = 0, total = 0;
  double worst = 0.0;  // max ratio / rho
  for (double m_param : ms) {
    for (std::size_t n = 0; n < per_m; ++n) {
      const Instance inst = detail::sample_instance(rng, 1, 12, m_param);
      const double big_m = validate(inst).max_singleton;
      const double rho = compute_constants().rho(big_m);
      const BreakpointTable table(inst);
      const IncrementalOrdering ord = build_ordering(inst, phase_schedule(inst, table));
      const double ratio = competitive_ratio(inst, table, ord.order).ratio;
      worst = std::max(worst, ratio / rho);
      ++total;
      if (ratio <= rho + 1e-6) ++ok;
    }
  }
  return {"upper bound rho(M)", ok == total,
          detail::count(ok, total) + " within bound, max ratio/rho=" + detail::num(worst),
          "ratio <= max(lambda sqrt(M), 2M) + 1e-6 for every instance"};
}

// The best ordering of the two-element instance has ratio exactly M.
inline CheckResult check_lower_bound_m(const Options& opt) {
  bool ok = true;
  std::string measured;
  for (double m_param : {1.0, 2.0, 4.0}) {
    const BestOrdering best = best_ordering(gen_m_bound(m_param), opt.threads);
    ok = ok && std::abs(best.ratio - m_param) <= 1e-9;
    measured += "M=" + detail::num(m_param) + ":" + detail::num(best.ratio) + " ";
  }
  return {"lower bound M", ok, measured, "best ratio = M +- 1e-9 for M in {1,2,4}"};
}

// No ordering of the sqrt(6) instance beats sqrt(6).
inline CheckResult check_lower_bound_sqrt6(const Options& opt) {
  const BestOrdering best = best_ordering(gen_sqrt6(), opt.threads);
  return {"lower bound sqrt6", best.ratio >= 2.449,
          "best ratio=" + detail::num(best.ratio), "best ratio >= 2.449"};
}

// f(X) >= sum_{e in X} gamma*_e(Y), f*(C') <= C'/C (f(S*_{C',C}) + M) and
// f*(C') <= C'/C (f*(C) + M) on 200 samples each.
inline CheckResult check_lemmas(const Options& opt, std::size_t samples = 200) {
  constexpr double kTol = 1e-6;
  Rng rng(opt.seed ^ 0x1e44a5ULL);
  std::size_t dual_ok = 0, prefix_ok = 0, two_optima_ok = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const double big = 1.0 + 7.0 * rng.uniform();
    const Instance inst = detail::sample_instance(rng, 1, 10, big);
    const std::size_t m = inst.size();

    const ElementSet y = detail::sample_subset(rng, m, true);
    ElementSet x;
    for (ElementIndex e : y) {
      if (rng.uniform() < 0.5) x.push_back(e);
    }
    const DualCertificate cert = dual_solution(inst, y);
    double lhs = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (std::binary_search(x.begin(), x.end(), y[j])) lhs += cert.gamma[j];
    }
    if (lhs <= evaluate(inst, x) + kTol) ++dual_ok;

    const double big_m = validate(inst).max_singleton;
    const double outer = inst.total_weight() * rng.uniform(1e-3, 1.0);
    const double inner = outer * rng.uniform(1e-3, 1.0);
    const double f_outer = optimum(inst, outer).value;
    const double f_prefix = evaluate(inst, prefix_set(inst, outer, inner));
    if (f_outer <= outer / inner * (f_prefix + big_m) + kTol) ++prefix_ok;
    if (f_outer <= outer / inner * (optimum(inst, inner).value + big_m) + kTol) {
      ++two_optima_ok;
    }
  }
  const bool ok = dual_ok == samples && prefix_ok == samples && two_optima_ok == samples;
  return {"lemmas", ok,
          "subset-dual " + detail::count(dual_ok, samples) + ", density-prefix " +
              detail::count(prefix_ok, samples) + ", two-optima " +
              detail::count(two_optima_ok, samples),
          "all samples within 1e-6"};
}

// gamma*(X) sums to f(X) and is dual feasible for every B subset of E.
inline CheckResult check_dual_certificates(const Options& opt, std::size_t samples = 100) {
  Rng rng(opt.seed ^ 0xd0a1ULL);
  std::size_t ok = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const Instance inst = detail::sample_instance(rng, 1, 12, 1.0 + 7.0 * rng.uniform());
    const ElementSet x = detail::sample_subset(rng, inst.size(), true);
    const DualCertificate cert = dual_solution(inst, x);
    if (std::abs(cert.total() - evaluate(inst, x)) <= kTolerance &&
        verify_dual_feasible(inst, cert)) {
      ++ok;
    }
  }
  return {"dual certificates", ok == samples, detail::count(ok, samples) + " certified",
          "equality and exhaustive feasibility on every sample"};
}

// lambda_i <= c_j / (j - i) for 0 <= i < j <= r.
inline bool increment_bound_holds(const IncrementTrace& trace) {
  const std::size_t r = trace.batch_sizes.size() - 1;
  for (std::size_t j = 1; j <= r; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double bound = static_cast<double>(trace.min_edges[j - 1]) /
                           static_cast<double>(j - i);
      if (static_cast<double>(trace.batch_sizes[i]) > bound + 1e-9) return false;
    }
  }
  return true;
}

// Quickest-Increment is 2-competitive on the blocking-path graph and 50 random DAGs.
inline CheckResult check_flow_upper_bound(const Options& opt, std::size_t graphs = 50) {
  Rng rng(opt.seed ^ 0xf10eULL);
  std::vector<FlowInstance> tests{blocking_path_graph()};
  while (tests.size() < graphs + 1) {
    const std::size_t v = 4 + rng.below(7);
    const std::size_t max_e = std::min<std::size_t>(20, v * (v - 1) / 2);
    const std::size_t e = (v - 1) + rng.below(max_e - (v - 1) + 1);
    const std::uint64_t seed = static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53);
    tests.push_back(gen_random_graph(v, e, true, seed));
  }
  std::size_t ratio_ok = 0, batch_ok = 0;
  double worst = 1.0;
  for (const FlowInstance& g : tests) {
    const IncrementTrace trace = quickest_increment(g);
    const double ratio = flow_ratio(g, trace.order).ratio;
    worst = std::max(worst, ratio);
    if (ratio <= 2.0 + 1e-9) ++ratio_ok;
    if (increment_bound_holds(trace)) ++batch_ok;
  }
  const std::size_t n = tests.size();
  return {"flow upper bound 2", ratio_ok == n && batch_ok == n,
          "ratio<=2 " + detail::count(ratio_ok, n) + " (max " + detail::num(worst) +
              "), batch bound " + detail::count(batch_ok, n),
          "ratio <= 2 + 1e-9 and lambda_i <= c_j/(j-i) on every graph"};
}

// No edge ordering of the blocking-path graph beats 2.
inline CheckResult check_flow_lower_bound() {
  const BestOrdering best = best_flow_ordering(blocking_path_graph());
  return {"flow lower bound 2", best.ratio == 2.0,
          "best ratio=" + detail::num(best.ratio), "best ratio = 2"};
}

// The XOS compilation of random parallel-edge instances agrees with the
// direct potential-flow evaluation on every subset and validates.
inline CheckResult check_potential_flows(const Options& opt, std::size_t samples = 50) {
  Rng rng(opt.seed ^ 0x907e47ULL);
  std::size_t equal = 0, valid = 0;
  double worst = 0.0;
  for (std::size_t n = 0; n < samples; ++n) {
    const std::size_t edges = 1 + rng.below(8);
    const PotentialLoss psi =
        n % 2 == 0 ? PotentialLoss::kIdentity : PotentialLoss::kSignedQuadratic;
    const std::uint64_t seed = static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53);
    const PotentialInstance p = gen_random_potential(edges, 4.0, psi, seed);
    const Instance inst = potential_to_xos(p);
    bool all = true;
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << edges); ++mask) {
      const ElementSet s = mask_to_set(mask);
      const double diff = std::abs(evaluate(inst, s) - potential_eval_oracle(p, s));
      worst = std::max(worst, diff);
      if (diff > 1e-9) all = false;
    }
    if (all) ++equal;
    if (validate(inst).ok) ++valid;
  }
  return {"potential flows are XOS", equal == samples && valid == samples,
          "agree " + detail::count(equal, samples) + " (max diff " + detail::num(worst) +
              "), valid " + detail::count(valid, samples),
          "agreement within 1e-9 on all subsets, validate ok"};
}

// Fewest edges for flow j by enumeration of edge subsets.
inline int min_edges_by_enumeration(const FlowInstance& g, int value) {
  const std::size_t n = g.num_edges();
  int best = -1;
  for (SubsetMask mask = 0; mask < (SubsetMask{1} << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (best >= 0 && size >= best) continue;
    if (max_flow(g, mask_to_set(mask)) >= value) best = size;
  }
  return best;
}

// Min-cost-flow edge counts match subset enumeration on 20 random graphs.
inline CheckResult check_min_edges(const Options& opt, std::size_t graphs = 20) {
  Rng rng(opt.seed ^ 0xc0ffeeULL);
  std::size_t ok = 0;
  for (std::size_t n = 0; n < graphs; ++n) {
    const std::size_t v = 3 + rng.below(4);
    const std::size_t e = (v - 1) + rng.below(12 - (v - 1) + 1);
    const std::uint64_t seed = static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53);
    const FlowInstance g = gen_random_graph(v, std::min(e, v * (v - 1)), false, seed);
    bool all = true;
    for (int j = 1; j <= max_flow(g); ++j) {
      if (min_edges_for_value(g, j) != min_edges_by_enumeration(g, j)) all = false;
    }
    if (all) ++ok;
  }
  return {"min edges oracle", ok == graphs, detail::count(ok, graphs) + " graphs agree",
          "min-cost flow = subset enumeration for every j"};
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  if (suite == "paperbounds") {
    return {check_constants(), check_upper_bound(opt), check_lower_bound_m(opt),
            check_lower_bound_sqrt6(opt)};
  }
  if (suite == "lemmas") return {check_lemmas(opt), check_dual_certificates(opt)};
  if (suite == "flows") {
    return {check_flow_upper_bound(opt), check_flow_lower_bound(),
            check_potential_flows(opt), check_min_edges(opt)};
  }
  throw InputError("unknown suite '" + suite + "' (paperbounds, lemmas, flows)");
}

}  // namespace inckap::verify
