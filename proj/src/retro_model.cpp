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

#include "retro/retro_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "retro/errors.hpp"
#include "retro/query_oracle.hpp"

namespace retro {

std::string_view to_string(Policy p) {
  return p == Policy::minimax ? "minimax" : "maximax";
}

Policy parse_policy(std::string_view s) {
  if (s == "minimax") return Policy::minimax;
  if (s == "maximax") return Policy::maximax;
  throw FormatError("--policy must be minimax or maximax, got '" + std::string(s) + "'");
}

Prediction evaluate_prediction(const OracleProblem& problem, const FeedbackConfig& config,
                               Strategy strategy, Policy policy) {
  FeedbackEngine engine(problem, config, strategy);
  std::map<Subset, int> depth_of;
  auto depth = [&](const Subset& s) {
    auto it = depth_of.find(s);
    if (it != depth_of.end()) return it->second;
    int d = minimax_depth(problem, s).depth;
    depth_of.emplace(s, d);
    return d;
  };

  Prediction pred;
  pred.problem = problem.name;
  pred.r_target = config.r_target;
  pred.strategy = strategy;
  pred.policy = policy;
  bool feasible = true;
  int overall = 0;
  for (std::size_t b = 0; b < problem.size(); ++b) {
    SettingPrediction sp;
    sp.b = b;
    std::vector<FeedbackPair> pairs = engine.find_pairs(b, &sp.histogram);
    sp.pair_count = pairs.size();
    sp.instances = all_instances(problem, pairs, b);
    for (const KnowledgeInstance& k : sp.instances) sp.depths.push_back(depth(k.subset));
    if (!pairs.empty()) {
      if (policy == Policy::maximax) {
        sp.aggregate = *std::max_element(sp.depths.begin(), sp.depths.end());
      } else {
        for (const FeedbackPair& fp : pairs) {
          const Subset& x = fp.p_i->class_at(b);
          const Subset& y = fp.p_j->class_at(b);
          int d = std::max(depth(x), depth(y));
          if (sp.aggregate < 0 || d < sp.aggregate) {
            sp.aggregate = d;
            sp.best_i = x;
            sp.best_j = y;
          }
        }
      }
      overall = std::max(overall, sp.aggregate);
    } else {
      feasible = false;
    }
    pred.settings.push_back(std::move(sp));
  }
  pred.predicted_queries = feasible ? overall : -1;
  return pred;
}

Prediction predict_queries(const OracleProblem& problem, const FeedbackConfig& config,
                           Strategy strategy, Policy policy) {
  Prediction pred = evaluate_prediction(problem, config, strategy, policy);
  for (const SettingPrediction& sp : pred.settings) {
    if (sp.aggregate >= 0) continue;
    std::string msg = "no valid sharing at setting " + problem.settings[sp.b].b + " (";
    bool first = true;
    for (const auto& [cond, count] : sp.histogram) {
      if (!first) msg += ", ";
      first = false;
      msg += std::string(to_string(cond)) + ": " + std::to_string(count);
    }
    throw NoValidSharing(msg + ")");
  }
  return pred;
}

std::uint64_t grover_queries_for_r(int n, double r) {
  if (n < 1 || n > 63) throw RangeError("n must be in [1, 63]");
  if (!(r >= 0.0 && r <= 1.0)) throw RangeError("R must be in [0, 1]");
  const int known = static_cast<int>(std::floor(r * n + 1e-9));
  return (std::uint64_t{1} << (n - known)) - 1;
}

std::uint64_t grover_optimal_k(int n) {
  if (n < 1 || n > 63) throw RangeError("n must be in [1, 63]");
  const double x = std::numbers::pi / (4.0 * std::asin(std::exp2(-0.5 * n)));
  // The guard keeps n = 2 (x - 1/2 = 1 up to rounding) at K = 1.
  return static_cast<std::uint64_t>(std::ceil(x - 0.5 - 1e-9));
}

RInference infer_r(int n, std::uint64_t k) {
  if (n < 1) throw RangeError("n must be positive");
  return RInference{n, k, 1.0 - std::log2(static_cast<double>(k) + 1.0) / n};
}

std::vector<ScanRow> grover_r_scan(int n_min, int n_max) {
  if (n_min < 2 || n_max > 60 || n_min > n_max) {
    throw RangeError("scan needs 2 <= n_min <= n_max <= 60");
  }
  if (n_min % 2 != 0 || n_max % 2 != 0) throw RangeError("scan bounds must be even");
  std::vector<ScanRow> rows;
  for (int n = n_min; n <= n_max; n += 2) {
    ScanRow row;
    row.n = n;
    row.k_opt = grover_optimal_k(n);
    row.r = infer_r(n, row.k_opt).r_value;
    row.half_bits_count = (std::uint64_t{1} << (n / 2)) - 1;
    row.quarter_pi = std::numbers::pi / 4.0 * std::exp2(n / 2);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace retro
