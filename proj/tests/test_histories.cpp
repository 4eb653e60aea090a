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

#include <algorithm>
#include <set>

#include "retro/feedback.hpp"
#include "retro/simulator.hpp"
#include "retro/walkthrough.hpp"

using namespace retro;

namespace {

std::set<Subset> justified_by(const OracleProblem& p, const History& h) {
  std::set<Subset> out;
  for (const KnowledgeInstance& k : classify_history(p, h, FeedbackConfig{}, default_strategy(p))) {
    out.insert(k.subset);
  }
  return out;
}

}  // namespace

TEST(Histories, PathSumsReproduceSimulation) {
  for (const std::string& name : builtin_circuit_names()) {
    const OracleProblem p = builtin_circuit_problem(name);
    const Circuit c = builtin_circuit(name);
    for (std::size_t b = 0; b < p.size(); ++b) {
      const auto hs = enumerate_histories(p, c, b);
      ASSERT_FALSE(hs.empty());
      const auto sums = sum_histories(hs);
      const BlockState sim = apply(single_setting_state(p, b), c);
      for (std::uint64_t a = 0; a < p.num_args(); ++a) {
        for (int v = 0; v < 2; ++v) {
          auto it = sums.find({b, a, v});
          const cplx z = it == sums.end() ? cplx{} : it->second;
          EXPECT_LT(std::abs(z - sim.blocks[b](static_cast<Eigen::Index>(a * 2 + static_cast<std::uint64_t>(v)))), 1e-12)
              << name << " " << p.settings[b].b;
        }
      }
      for (const History& h : hs) {
        EXPECT_EQ(h.queries.size(), c.query_count());
        EXPECT_EQ(h.states.size(), c.gates.size() + 1);
        EXPECT_FALSE(justified_by(p, h).empty()) << name << " " << p.settings[b].b;
      }
    }
  }
}

TEST(Histories, DeutschQueryAtZero) {
  const OracleProblem p = gen_deutsch();
  const auto hs = enumerate_histories(p, builtin_circuit("deutsch"), p.index_of("01"));
  bool found = false;
  for (const History& h : hs) {
    if (h.queries != std::vector<std::uint64_t>{0}) continue;
    found = true;
    const Subset a = {p.index_of("01"), p.index_of("11")};
    const Subset b = {p.index_of("01"), p.index_of("10")};
    EXPECT_EQ(justified_by(p, h), (std::set<Subset>{a, b}));
  }
  EXPECT_TRUE(found);
}

TEST(Histories, GroverQueryAtThree) {
  const OracleProblem p = gen_grover(2);
  const auto hs = enumerate_histories(p, builtin_circuit("grover2"), p.index_of("01"));
  bool found = false;
  for (const History& h : hs) {
    if (h.queries != std::vector<std::uint64_t>{3}) continue;
    found = true;
    EXPECT_EQ(justified_by(p, h), (std::set<Subset>{{p.index_of("01"), p.index_of("11")}}));
  }
  EXPECT_TRUE(found);
}

TEST(Histories, SetterCircuitUsesQueriedSetting) {
  const OracleProblem p = gen_deutsch();
  const Circuit w = deutsch_with_setter(p);
  for (const History& h : enumerate_histories(p, w, p.index_of("10"))) {
    EXPECT_EQ(h.query_setting, p.index_of("01"));
  }
}
