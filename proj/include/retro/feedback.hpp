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

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retro/observables.hpp"
#include "retro/problems.hpp"

namespace retro {

enum class ApplyNo { automatic, on, off };

std::string_view to_string(ApplyNo a);
ApplyNo parse_apply_no(std::string_view s);

struct FeedbackConfig {
  ApplyNo apply_no = ApplyNo::automatic;
  bool require_all_settings = false;
  std::optional<double> r_target;
  double r_tolerance = 0.0;

  /// Throws RangeError on an r_target outside (0, 1) or a negative tolerance.
  void validate() const;
  bool condition_no_applies(const OracleProblem& problem) const;
};

/// Outcome of testing a pair at one setting: valid, or the first failed test.
enum class Condition { valid, c_nr, c_i, c_eq, c_no, r_target };

std::string_view to_string(Condition c);

/// Two partial observables that share the selection of b.
struct FeedbackPair {
  std::shared_ptr<const Partition> p_i;
  std::shared_ptr<const Partition> p_j;
  // Verdict at every setting, indexed like `OracleProblem::settings`.
  std::vector<Condition> verdicts;
};

/// Advanced knowledge b in sigma' induced by one side of a valid pair.
struct KnowledgeInstance {
  std::size_t b = 0;
  Subset subset;
  double r_value = 0.0;
  double delta_e_solution = 0.0;
  double delta_h_setting = 0.0;

  friend bool operator==(const KnowledgeInstance& x, const KnowledgeInstance& y) {
    return x.b == y.b && x.subset == y.subset;
  }
  friend bool operator<(const KnowledgeInstance& x, const KnowledgeInstance& y) {
    return x.b != y.b ? x.b < y.b : x.subset < y.subset;
  }
};

/// 1 - log2|subset| / log2|sigma_B|.
double r_value_of(std::size_t subset_size, std::size_t c);

KnowledgeInstance make_instance(const OracleProblem& problem, std::size_t b, Subset subset);

/// Tests pairs of one partition family against a problem.
///
/// Pair-level entropy tests are computed once per pair and cached, so one
/// engine should be reused across settings. Not thread-safe.
class FeedbackEngine {
 public:
  FeedbackEngine(const OracleProblem& problem, FeedbackConfig config, Strategy strategy);
  FeedbackEngine(const OracleProblem& problem, FeedbackConfig config,
                 std::vector<Partition> partitions);

  const OracleProblem& problem() const { return problem_; }
  const FeedbackConfig& config() const { return config_; }
  const std::vector<std::shared_ptr<const Partition>>& partitions() const { return parts_; }

  Condition check(std::size_t pi, std::size_t pj, std::size_t b) const;

  /// Valid pairs at b in canonical order. When `histogram` is given it
  /// receives the count of every verdict over all pairs.
  std::vector<FeedbackPair> find_pairs(std::size_t b,
                                       std::map<Condition, std::size_t>* histogram = nullptr) const;

 private:
  bool non_redundant(std::size_t pi, std::size_t pj) const;
  Condition check_at(const Partition& p, const Partition& q, std::size_t b) const;
  Condition check_setting(const Partition& p, const Partition& q, std::size_t b) const;

  const OracleProblem& problem_;
  FeedbackConfig config_;
  std::vector<std::shared_ptr<const Partition>> parts_;
  std::vector<double> entropy_;
  mutable std::vector<signed char> nr_cache_;
};

/// Verdict for a single pair at setting b. Throws UnknownSetting.
Condition check_conditions(const OracleProblem& problem, const Partition& p_i,
                           const Partition& p_j, std::string_view b, const FeedbackConfig& config);

std::vector<FeedbackPair> find_pairs(const OracleProblem& problem, std::string_view b,
                                     const FeedbackConfig& config, Strategy strategy);

/// Instances (class of b in p_i, class of b in p_j). Throws InvalidPair.
std::pair<KnowledgeInstance, KnowledgeInstance> instances_of(const OracleProblem& problem,
                                                             const FeedbackPair& pair,
                                                             std::size_t b);

/// Deduplicated union of instances over `pairs`, sorted by subset.
std::vector<KnowledgeInstance> all_instances(const OracleProblem& problem,
                                             const std::vector<FeedbackPair>& pairs,
                                             std::size_t b);
std::vector<KnowledgeInstance> all_instances(const OracleProblem& problem, std::string_view b,
                                             const FeedbackConfig& config, Strategy strategy);

}  // namespace retro
