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

#include "oracles.hpp"
#include "retro/errors.hpp"
#include "retro/retro_model.hpp"

using namespace retro;

TEST(RetroModel, PredictionsAtHalf) {
  const FeedbackConfig cfg;
  for (const OracleProblem& p : {gen_deutsch(), gen_grover(2), gen_deutsch_jozsa(2), gen_simon(2)}) {
    const Prediction pr = predict_queries(p, cfg, default_strategy(p), Policy::minimax);
    EXPECT_EQ(pr.predicted_queries, 1) << p.name;
  }
  const OracleProblem g4 = gen_grover(4);
  EXPECT_EQ(predict_queries(g4, cfg, default_strategy(g4), Policy::minimax).predicted_queries, 3);
}

TEST(RetroModel, MaximaxNeverBelowMinimax) {
  const FeedbackConfig cfg;
  for (const OracleProblem& p : {gen_deutsch(), gen_grover(2), gen_deutsch_jozsa(2), gen_simon(2)}) {
    const Strategy s = default_strategy(p);
    EXPECT_GE(predict_queries(p, cfg, s, Policy::maximax).predicted_queries,
              predict_queries(p, cfg, s, Policy::minimax).predicted_queries);
  }
}

TEST(RetroModel, RelabelingSolutionsKeepsPrediction) {
  OracleProblem p = gen_simon(2);
  const int before = predict_queries(p, FeedbackConfig{}, Strategy::half_table, Policy::minimax).predicted_queries;
  std::vector<Setting> s = p.settings;
  for (Setting& x : s) x.solution = x.verdict = "h" + x.solution;
  std::map<std::string, std::string> none;
  const OracleProblem q = make_problem("relabelled", p.arg_bits, p.out_bits, s, none);
  EXPECT_EQ(predict_queries(q, FeedbackConfig{}, Strategy::half_table, Policy::minimax).predicted_queries, before);
}

TEST(RetroModel, NoValidSharingNamesHistogram) {
  FeedbackConfig cfg;
  cfg.r_target = 0.9;
  const OracleProblem p = gen_deutsch();
  EXPECT_THROW(predict_queries(p, cfg, Strategy::general, Policy::minimax), NoValidSharing);
  const Prediction pr = evaluate_prediction(p, cfg, Strategy::general, Policy::minimax);
  EXPECT_FALSE(pr.feasible());
  EXPECT_GT(pr.settings[0].histogram.at(Condition::r_target), 0u);
}

TEST(RetroModel, GroverClosedForms) {
  for (int n = 2; n <= 20; n += 2) {
    EXPECT_EQ(grover_queries_for_r(n, 0.5), (std::uint64_t{1} << (n / 2)) - 1);
    EXPECT_EQ(infer_r(n, grover_queries_for_r(n, 0.5)).r_value, 0.5);
  }
  EXPECT_EQ(grover_queries_for_r(4, 1.0), 0u);
  EXPECT_EQ(grover_optimal_k(2), 1u);
  EXPECT_EQ(infer_r(2, 1).r_value, 0.5);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(grover_optimal_k(n), static_cast<std::uint64_t>(std::ceil(oracle::grover_k_exact(n) - 1e-9))) << n;
  }
  for (int n = 6; n <= 40; n += 2) {
    const double r = infer_r(n, grover_optimal_k(n)).r_value;
    EXPECT_GT(r, 0.5) << n;
    EXPECT_LE(r, 0.54) << n;
  }
  EXPECT_LT(std::abs(infer_r(40, grover_optimal_k(40)).r_value - 0.5), 0.012);
  EXPECT_NEAR(infer_r(6, 6).r_value, 1.0 - std::log2(7.0) / 6.0, 1e-15);
}

TEST(RetroModel, Scan) {
  const auto rows = grover_r_scan(2, 8);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].n, 2);
  EXPECT_EQ(rows[0].k_opt, 1u);
  EXPECT_EQ(rows[0].r, 0.5);
  EXPECT_NEAR(rows[2].r, 0.532, 1e-3);
  EXPECT_THROW(grover_r_scan(3, 3), RangeError);
  EXPECT_THROW(grover_r_scan(2, 62), RangeError);
}
