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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "inckap/instances.hpp"
#include "inckap/optimum.hpp"
#include "oracles.hpp"

namespace inckap {
namespace {

// The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
TEST(Rng, EngineIsStandardMersenneTwister) {
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ULL);
}

TEST(Rng, DoublesUseTopBits) {
  Rng rng(5489);
  std::mt19937_64 engine(5489);
  for (int i = 0; i < 100; ++i) {
    const double expected = static_cast<double>(engine() >> 11) / 9007199254740992.0;
    EXPECT_EQ(rng.uniform(), expected);
  }
}

TEST(Rng, RangesAndDeterminism) {
  Rng a(11), b(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform(2.0, 3.0);
    EXPECT_EQ(x, b.uniform(2.0, 3.0));
    EXPECT_GE(x, 2.0);
    EXPECT_LT(x, 3.0);
    EXPECT_LT(a.below(7), 7u);
    b.below(7);
  }
}

TEST(GenMBound, ValuesAndErrors) {
  const Instance inst = gen_m_bound(1.0);
  EXPECT_DOUBLE_EQ(inst.singleton_value(0), 1.0);
  EXPECT_DOUBLE_EQ(inst.singleton_value(1), 1.0);
  EXPECT_DOUBLE_EQ(optimum(gen_m_bound(4), 2.0).value, 4.0);
  EXPECT_THROW(gen_m_bound(0.5), InputError);
}

TEST(GenSqrt6, FrozenValues) {
  const Instance inst = gen_sqrt6();
  EXPECT_EQ(inst.size(), 10u);
  EXPECT_DOUBLE_EQ(inst.total_weight(), 1025.0);
  EXPECT_NEAR(optimum(inst, 306).value, std::sqrt(6.0), 1e-12);
  EXPECT_DOUBLE_EQ(optimum(inst, 618).value, 6.0);
  EXPECT_DOUBLE_EQ(evaluate(inst, std::vector<ElementIndex>{4}), 1.0);
  EXPECT_TRUE(validate(inst).ok);
}

TEST(GenRandomXos, Examples) {
  const Instance a = gen_random_xos(6, 3, 1.0, 7);
  const ValidationReport ra = validate(a);
  EXPECT_TRUE(ra.ok);
  EXPECT_LE(ra.max_singleton, 1.0 + 1e-9);
  const Instance b = gen_random_xos(1, 1, 1.0, 0);
  EXPECT_DOUBLE_EQ(evaluate(b, std::vector<ElementIndex>{0}), 1.0);
}

TEST(GenRandomXos, AlwaysValidAndReproducible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double m_param = 1.0 + static_cast<double>(seed % 8);
    const Instance inst = gen_random_xos(1 + seed % 12, 1 + seed % 4, m_param, seed);
    const ValidationReport r = validate(inst);
    EXPECT_TRUE(r.ok);
    EXPECT_LE(r.max_singleton, m_param + 1e-9);
    EXPECT_GE(r.min_singleton, 1.0 - 1e-9);
    for (double w : inst.weights()) {
      EXPECT_GE(w, 1.0);
      EXPECT_LT(w, 10.0);
    }
    const Instance again = gen_random_xos(1 + seed % 12, 1 + seed % 4, m_param, seed);
    EXPECT_EQ(inst.clauses(), again.clauses());
    EXPECT_EQ(inst.weights(), again.weights());
  }
}

TEST(GenRandomXos, Errors) {
  EXPECT_THROW(gen_random_xos(0, 1, 1.0, 0), InputError);
  EXPECT_THROW(gen_random_xos(3, 0, 1.0, 0), InputError);
  EXPECT_THROW(gen_random_xos(3, 1, 0.9, 0), InputError);
}

TEST(Coverage, DisjointSetsAreModular) {
  const CoverageInstance c = compile_coverage(2, {{0}, {1}});
  EXPECT_DOUBLE_EQ(evaluate(c.instance, std::vector<ElementIndex>{0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(evaluate(c.instance, std::vector<ElementIndex>{0}), 1.0);
}

TEST(Coverage, IdenticalSetsAreIdempotent) {
  const CoverageInstance c = compile_coverage(3, {{0, 2}, {0, 2}});
  EXPECT_DOUBLE_EQ(evaluate(c.instance, std::vector<ElementIndex>{0, 1}),
                   evaluate(c.instance, std::vector<ElementIndex>{0}));
}

TEST(Coverage, Seed3MatchesDirectUnion) {
  const CoverageInstance c = gen_coverage(6, 5, 3);
  for (SubsetMask mask = 0; mask < (SubsetMask{1} << 5); ++mask) {
    const ElementSet s = mask_to_set(mask);
    EXPECT_DOUBLE_EQ(evaluate(c.instance, s), coverage_value(c, s));
  }
}

// Direct union size computed here, independent of coverage_value.
TEST(Coverage, ExhaustiveAgreementOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t universe = 1 + seed % 12;
    const std::size_t m = 1 + seed % 7;
    const CoverageInstance c = gen_coverage(universe, m, seed);
    EXPECT_TRUE(validate(c.instance).ok);
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << m); ++mask) {
      std::vector<bool> hit(universe, false);
      for (std::size_t s = 0; s < m; ++s) {
        if (mask >> s & 1) {
          for (std::size_t item : c.sets[s]) hit[item] = true;
        }
      }
      double size = 0.0;
      for (bool h : hit) size += h ? 1.0 : 0.0;
      EXPECT_DOUBLE_EQ(oracle::xos(c.instance, mask), size);
    }
  }
}

TEST(Coverage, Limits) {
  EXPECT_THROW(gen_coverage(13, 2, 0), InputError);
  EXPECT_THROW(compile_coverage(3, {{5}}), InputError);
  EXPECT_THROW(compile_coverage(3, {}), InputError);
}

TEST(GenRandomGraph, ReachableAndDistinct) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t v = 2 + seed % 9;
    const std::size_t e = std::min<std::size_t>(v - 1 + seed % 5, v * (v - 1) / 2);
    const FlowInstance g = gen_random_graph(v, e, true, seed);
    EXPECT_EQ(g.num_edges(), e);
    EXPECT_GE(oracle::max_flow(g, (std::uint64_t{1} << e) - 1), 1);
    for (const FlowEdge& edge : g.edges()) EXPECT_LT(edge.from, edge.to);
  }
}

TEST(GenRandomPotential, RangesAndValidity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PotentialInstance p = gen_random_potential(
        1 + seed % 8, 4.0,
        seed % 2 ? PotentialLoss::kSignedQuadratic : PotentialLoss::kIdentity, seed);
    for (std::size_t e = 0; e < p.size(); ++e) {
      EXPECT_GE(p.beta[e], 0.5);
      EXPECT_GE(p.mu[e], 1.0);
      EXPECT_LT(p.mu[e], 4.0);
    }
    EXPECT_TRUE(validate(potential_to_xos(p)).ok);
  }
}

}  // namespace
}  // namespace inckap
