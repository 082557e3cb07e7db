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

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "inckap/evaluator.hpp"
#include "inckap/instances.hpp"
#include "oracles.hpp"

namespace inckap {
namespace {

const double kSqrt6 = std::sqrt(6.0);
const double kInf = std::numeric_limits<double>::infinity();

TEST(RatioOf, Conventions) {
  EXPECT_DOUBLE_EQ(ratio_of(0.0, 0.0), 1.0);
  EXPECT_EQ(ratio_of(1.0, 0.0), kInf);
  EXPECT_DOUBLE_EQ(ratio_of(3.0, 2.0), 1.5);
}

TEST(PrefixValue, Examples) {
  const std::vector<ElementIndex> order{0, 1};
  EXPECT_DOUBLE_EQ(prefix_value(gen_m_bound(4), order, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(prefix_value(gen_m_bound(4), order, 0.0), 0.0);
  const std::vector<ElementIndex> sqrt6_order{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_NEAR(prefix_value(gen_sqrt6(), sqrt6_order, 305.0), 2.0 * kSqrt6 / 3.0, 1e-12);
}

TEST(CompetitiveRatio, MBoundForwardOrder) {
  const RatioCurve curve = competitive_ratio(gen_m_bound(4), std::vector<ElementIndex>{0, 1});
  EXPECT_DOUBLE_EQ(curve.ratio, 4.0);
  ASSERT_EQ(curve.rows.size(), 3u);
  EXPECT_DOUBLE_EQ(curve.rows[1].capacity, 2.0);
  EXPECT_DOUBLE_EQ(curve.rows[1].opt, 4.0);
  EXPECT_DOUBLE_EQ(curve.rows[1].alg, 1.0);
}

TEST(CompetitiveRatio, MBoundReversedOrderIsUnbounded) {
  EXPECT_EQ(competitive_ratio(gen_m_bound(4), std::vector<ElementIndex>{1, 0}).ratio, kInf);
}

TEST(CompetitiveRatio, SingleElement) {
  EXPECT_DOUBLE_EQ(competitive_ratio(Instance({1.0}, {{1.0}}), std::vector<ElementIndex>{0}).ratio,
                   1.0);
}

TEST(CompetitiveRatio, Sqrt6ScalingOrder) {
  const Instance inst = gen_sqrt6();
  const RatioCurve curve =
      competitive_ratio(inst, std::vector<ElementIndex>{0, 4, 5, 6, 7, 8, 9, 1, 2, 3});
  EXPECT_NEAR(curve.ratio, kSqrt6, 1e-12);
  bool found = false;
  for (const RatioRow& row : curve.rows) {
    if (row.capacity == 306.0) {
      found = true;
      EXPECT_NEAR(row.opt, kSqrt6, 1e-12);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CompetitiveRatio, RejectsPartialOrdering) {
  EXPECT_THROW(competitive_ratio(gen_m_bound(2), std::vector<ElementIndex>{0}), InputError);
  EXPECT_THROW(competitive_ratio(gen_m_bound(2), std::vector<ElementIndex>{0, 0}), InputError);
}

TEST(CompetitiveRatio, MatchesOracleOnRandomOrderings) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = gen_random_xos(1 + seed % 8, 1 + seed % 3, 4.0, 300 + seed);
    std::vector<ElementIndex> order(inst.size());
    std::iota(order.begin(), order.end(), ElementIndex{0});
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    const RatioCurve curve = competitive_ratio(inst, order);
    const double expected = oracle::competitive_ratio(inst, order);
    if (std::isinf(expected)) {
      EXPECT_TRUE(std::isinf(curve.ratio));
    } else {
      EXPECT_NEAR(curve.ratio, expected, 1e-9);
    }
    EXPECT_GE(curve.ratio, 1.0);
  }
}

TEST(BestOrdering, MBound) {
  for (double m_param : {1.0, 2.0, 2.449, 4.0}) {
    const BestOrdering best = best_ordering(gen_m_bound(m_param));
    EXPECT_NEAR(best.ratio, m_param, 1e-9);
    EXPECT_EQ(best.order, (std::vector<ElementIndex>{0, 1}));
  }
}

TEST(BestOrdering, SingleElement) {
  EXPECT_DOUBLE_EQ(best_ordering(Instance({1.0}, {{1.0}})).ratio, 1.0);
}

TEST(BestOrdering, MatchesPermutationScan) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_random_xos(2 + seed % 6, 1 + seed % 3, 1.0 + seed % 4, 700 + seed);
    const BestOrdering best = best_ordering(inst);
    EXPECT_NEAR(best.ratio, oracle::best_ratio(inst), 1e-9);
    EXPECT_NEAR(best.ratio, oracle::competitive_ratio(inst, best.order), 1e-9);
  }
}

TEST(BestOrdering, ThreadsGiveIdenticalResult) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_random_xos(7, 2, 3.0, 900 + seed);
    const BestOrdering one = best_ordering(inst, 1);
    const BestOrdering four = best_ordering(inst, 4);
    EXPECT_EQ(one.order, four.order);
    EXPECT_EQ(one.ratio, four.ratio);
  }
}

TEST(BestOrdering, NeverWorseThanScalingOrder) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_xos(6, 2, 2.0, 1100 + seed);
    EXPECT_LE(best_ordering(inst).ratio,
              competitive_ratio(inst, build_ordering(inst).order).ratio + 1e-12);
  }
}

TEST(BestOrdering, CapabilityLimit) {
  EXPECT_THROW(best_ordering(gen_random_xos(11, 1, 2.0, 0)), CapabilityError);
}

// Full 10! scan without pruning.
TEST(BestOrdering, Sqrt6EqualsPermutationScan) {
  const Instance inst = gen_sqrt6();
  const BestOrdering best = best_ordering(inst);
  EXPECT_GE(best.ratio, 2.449);
  EXPECT_NEAR(best.ratio, kSqrt6, 1e-12);
  EXPECT_EQ(best.order.front(), 0u);
  EXPECT_NEAR(oracle::best_ratio(inst), best.ratio, 1e-12);
}

}  // namespace
}  // namespace inckap
