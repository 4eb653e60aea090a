// Copyright 2026 The Retro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "retro/errors.hpp"
#include "retro/observables.hpp"
#include "retro/problems.hpp"

using namespace retro;

namespace {

bool is_partition(const Partition& p, std::size_t c) {
  std::vector<int> seen(c, 0);
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    if (p.classes[k].empty()) return false;
    for (std::size_t s : p.classes[k]) {
      if (s >= c || p.label[s] != k) return false;
      ++seen[s];
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
}

}  // namespace

TEST(Partitions, GeneralCountIsBell) {
  for (int n = 1; n <= 3; ++n) {
    const OracleProblem p = gen_grover(n);
    const auto parts = enumerate_partitions(p, Strategy::general);
    EXPECT_EQ(parts.size(), oracle::bell(static_cast<int>(p.size())));
    std::set<std::vector<Subset>> uniq;
    for (const Partition& q : parts) {
      EXPECT_TRUE(is_partition(q, p.size()));
      uniq.insert(q.classes);
    }
    EXPECT_EQ(uniq.size(), parts.size());
  }
}

TEST(Partitions, BitmaskAndHalfTable) {
  const OracleProblem dj = gen_deutsch_jozsa(2);
  for (Strategy s : {Strategy::bitmask, Strategy::half_table}) {
    for (const Partition& q : enumerate_partitions(dj, s)) EXPECT_TRUE(is_partition(q, dj.size()));
  }
  EXPECT_THROW(enumerate_partitions(gen_grover(2), Strategy::half_table), ValidationError);
  EXPECT_EQ(default_strategy(gen_deutsch()), Strategy::general);
  EXPECT_EQ(default_strategy(dj), Strategy::half_table);
  EXPECT_EQ(default_strategy(gen_grover(4)), Strategy::bitmask);
  EXPECT_EQ(parse_strategy("half-table"), Strategy::half_table);
}

TEST(Partitions, BitPartitionReadsPositions) {
  const OracleProblem p = gen_deutsch();
  const Partition left = bit_partition(p, {0});
  EXPECT_EQ(format_partition(p, left), "{00,01 | 10,11}");
  const Partition both = bit_partition(p, {0, 1});
  EXPECT_EQ(both.num_classes(), 4u);
  const OutcomeClass oc = class_of(p, left, "01");
  EXPECT_EQ(format_subset(p, oc.members), "{00,01}");
}

TEST(Entropy, MatchesHistogramOracle) {
  const OracleProblem p = gen_grover(3);
  const auto parts = enumerate_partitions(p, Strategy::bitmask);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); j += 3) {
      const double hx = oracle::joint_entropy({parts[i].label});
      const double hy = oracle::joint_entropy({parts[j].label});
      const double hxy = oracle::joint_entropy({parts[i].label, parts[j].label});
      EXPECT_NEAR(outcome_entropy(parts[i]), hx, 1e-12);
      EXPECT_NEAR(joint_outcome_entropy(parts[i], parts[j]), hxy, 1e-12);
      EXPECT_NEAR(conditional_outcome_entropy(parts[i], parts[j]), hxy - hy, 1e-12);
      EXPECT_NEAR(mutual_information(parts[i], parts[j]), hx + hy - hxy, 1e-12);
      EXPECT_GE(mutual_information(parts[i], parts[j]), -1e-12);
    }
  }
}

TEST(Entropy, Solution) {
  EXPECT_NEAR(solution_entropy(gen_deutsch()), 1.0, 1e-12);
  EXPECT_NEAR(solution_entropy(gen_grover(3)), 3.0, 1e-12);
  // Simon n=2: three periods, two settings each.
  EXPECT_NEAR(solution_entropy(gen_simon(2)), std::log2(3.0), 1e-12);
  EXPECT_NEAR(shannon_bits({1, 1, 2}), 1.5, 1e-12);
}
