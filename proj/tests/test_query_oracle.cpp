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
#include "retro/observables.hpp"
#include "retro/problems.hpp"
#include "retro/query_oracle.hpp"
#include "retro/simulator.hpp"

using namespace retro;

namespace {

int oracle_depth(const OracleProblem& p, const Subset& s) {
  std::vector<oracle::Fn> fs;
  for (std::size_t i : s) {
    oracle::Fn f;
    for (std::uint64_t a = 0; a < p.num_args(); ++a) f.table.push_back(static_cast<int>(p.settings[i].f(a)));
    f.solution = p.settings[i].solution;
    fs.push_back(std::move(f));
  }
  return oracle::tree_depth(fs);
}

Subset from_mask(std::uint64_t mask, std::size_t c) {
  Subset s;
  for (std::size_t i = 0; i < c; ++i) {
    if (mask >> i & 1) s.push_back(i);
  }
  return s;
}

}  // namespace

TEST(QueryOracle, SweepAgreesWithBruteForceAndOracle) {
  for (const OracleProblem& p : {gen_deutsch(), gen_grover(1), gen_grover(2), gen_simon(2), gen_deutsch_jozsa(2)}) {
    const std::size_t c = p.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
      const Subset s = from_mask(mask, c);
      const QueryBound qb = minimax_depth(p, s);
      EXPECT_EQ(qb.depth, brute_force_depth(p, s)) << p.name << " " << format_subset(p, s);
      EXPECT_EQ(qb.depth, oracle_depth(p, s)) << p.name << " " << format_subset(p, s);
      ASSERT_TRUE(qb.tree);
      EXPECT_TRUE(verify_tree(p, s, *qb.tree));
      EXPECT_EQ(tree_depth(*qb.tree), qb.depth);
      EXPECT_LE(qb.depth, static_cast<int>(s.size()) - 1);
      std::set<std::string> sols;
      for (std::size_t i : s) sols.insert(p.settings[i].solution);
      const double info = std::log2(static_cast<double>(sols.size())) / p.out_bits;
      EXPECT_GE(qb.depth, static_cast<int>(std::ceil(info - 1e-12)));
    }
  }
}

TEST(QueryOracle, ClassicalBaselines) {
  const OracleProblem d = gen_deutsch();
  EXPECT_EQ(minimax_depth(d, all_settings(d)).depth, 2);
  const OracleProblem g = gen_grover(2);
  EXPECT_EQ(minimax_depth(g, all_settings(g)).depth, 3);
  const OracleProblem dj = gen_deutsch_jozsa(2);
  EXPECT_EQ(minimax_depth(dj, all_settings(dj)).depth, brute_force_depth(dj, all_settings(dj)));
}

TEST(QueryOracle, Monotone) {
  Rng rng(7);
  for (const OracleProblem& p : {gen_simon(2), gen_deutsch_jozsa(2), gen_grover(3)}) {
    const std::size_t c = p.size();
    for (int t = 0; t < 300; ++t) {
      const auto big = static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(std::uint64_t{1} << c));
      std::uint64_t small = 0;
      for (std::size_t i = 0; i < c; ++i) {
        if ((big >> i & 1) && rng.uniform() < 0.5) small |= std::uint64_t{1} << i;
      }
      if (small == 0) continue;
      EXPECT_LE(minimax_depth(p, from_mask(small, c)).depth, minimax_depth(p, from_mask(big, c)).depth);
    }
  }
}

TEST(QueryOracle, DeterministicWitness) {
  const OracleProblem p = gen_simon(2);
  const Subset s = all_settings(p);
  EXPECT_EQ(format_tree(p, *minimax_depth(p, s).tree), format_tree(p, *minimax_depth(p, s).tree));
  const OracleProblem d = gen_deutsch();
  EXPECT_EQ(format_tree(d, *minimax_depth(d, {1}).tree), "1");
}

TEST(QueryOracle, VerifyRejectsWrongTree) {
  const OracleProblem d = gen_deutsch();
  const auto leaf = DecisionTree::make_leaf("0");
  EXPECT_FALSE(verify_tree(d, all_settings(d), *leaf));
}
