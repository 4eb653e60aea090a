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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retro/feedback.hpp"
#include "retro/observables.hpp"
#include "retro/problems.hpp"

namespace retro {

enum class Policy { minimax, maximax };

std::string_view to_string(Policy p);
Policy parse_policy(std::string_view s);

struct SettingPrediction {
  std::size_t b = 0;
  std::size_t pair_count = 0;
  std::vector<KnowledgeInstance> instances;
  std::vector<int> depths;  // parallel to `instances`
  // Pair achieving the aggregate under the minimax policy.
  Subset best_i;
  Subset best_j;
  int aggregate = -1;  // -1 when no valid pair exists
  std::map<Condition, std::size_t> histogram;
};

struct Prediction {
  std::string problem;
  std::optional<double> r_target;
  Strategy strategy = Strategy::general;
  Policy policy = Policy::minimax;
  std::vector<SettingPrediction> settings;
  int predicted_queries = -1;  // -1 when some setting has no valid pair

  bool feasible() const { return predicted_queries >= 0; }
};

/// Per-setting aggregates without raising on settings that lack a pair.
Prediction evaluate_prediction(const OracleProblem& problem, const FeedbackConfig& config,
                               Strategy strategy, Policy policy);

/// As `evaluate_prediction`, but raises NoValidSharing naming the first
/// setting without a valid pair and its verdict histogram.
Prediction predict_queries(const OracleProblem& problem, const FeedbackConfig& config,
                           Strategy strategy, Policy policy);

struct RInference {
  int n = 0;
  std::uint64_t k = 0;
  double r_value = 0.0;
};

struct ScanRow {
  int n = 0;
  std::uint64_t k_opt = 0;
  double r = 0.0;
  std::uint64_t half_bits_count = 0;  // 2^(n/2) - 1
  double quarter_pi = 0.0;            // (pi/4) 2^(n/2)
};

/// 2^(n - floor(R n)) - 1 for 1 <= n <= 63 and R in [0, 1].
std::uint64_t grover_queries_for_r(int n, double r);
/// ceil(pi / (4 asin 2^(-n/2)) - 1/2) for 1 <= n <= 63.
std::uint64_t grover_optimal_k(int n);
/// R = 1 - log2(K + 1) / n.
RInference infer_r(int n, std::uint64_t k);
/// Rows for every even n in [n_min, n_max]; both ends even, n_max <= 60.
std::vector<ScanRow> grover_r_scan(int n_min, int n_max);

}  // namespace retro
