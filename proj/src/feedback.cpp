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

#include "retro/feedback.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "retro/errors.hpp"

namespace retro {

namespace {
constexpr double kTol = 1e-12;
constexpr std::size_t kCacheCap = 8192;
}  // namespace

std::string_view to_string(ApplyNo a) {
  switch (a) {
    case ApplyNo::automatic: return "auto";
    case ApplyNo::on: return "on";
    case ApplyNo::off: return "off";
  }
  return "?";
}

ApplyNo parse_apply_no(std::string_view s) {
  if (s == "auto") return ApplyNo::automatic;
  if (s == "on") return ApplyNo::on;
  if (s == "off") return ApplyNo::off;
  throw FormatError("--apply-no must be auto, on or off, got '" + std::string(s) + "'");
}

void FeedbackConfig::validate() const {
  if (r_target && !(*r_target > 0.0 && *r_target < 1.0)) {
    throw RangeError("r_target must lie in (0, 1)");
  }
  if (!(r_tolerance >= 0.0)) throw RangeError("r_tolerance must be non-negative");
}

bool FeedbackConfig::condition_no_applies(const OracleProblem& problem) const {
  switch (apply_no) {
    case ApplyNo::on: return true;
    case ApplyNo::off: return false;
    case ApplyNo::automatic: return problem.structured;
  }
  return false;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::valid: return "valid";
    case Condition::c_nr: return "C-nr";
    case Condition::c_i: return "C-I";
    case Condition::c_eq: return "C-eq";
    case Condition::c_no: return "C-no";
    case Condition::r_target: return "R-target";
  }
  return "?";
}

double r_value_of(std::size_t subset_size, std::size_t c) {
  if (c <= 1) return 1.0;
  return 1.0 - std::log2(static_cast<double>(subset_size)) / std::log2(static_cast<double>(c));
}

KnowledgeInstance make_instance(const OracleProblem& problem, std::size_t b, Subset subset) {
  KnowledgeInstance k;
  k.b = b;
  k.r_value = r_value_of(subset.size(), problem.size());
  k.delta_e_solution = solution_entropy(problem) - solution_entropy(problem, subset);
  k.delta_h_setting = std::log2(static_cast<double>(problem.size())) -
                      std::log2(static_cast<double>(subset.size()));
  k.subset = std::move(subset);
  return k;
}

FeedbackEngine::FeedbackEngine(const OracleProblem& problem, FeedbackConfig config,
                               Strategy strategy)
    : FeedbackEngine(problem, config, enumerate_partitions(problem, strategy)) {}

FeedbackEngine::FeedbackEngine(const OracleProblem& problem, FeedbackConfig config,
                               std::vector<Partition> partitions)
    : problem_(problem), config_(config) {
  config_.validate();
  std::sort(partitions.begin(), partitions.end());
  for (Partition& p : partitions) {
    if (p.label.size() != problem.size()) throw ValidationError("partition of another problem");
    entropy_.push_back(outcome_entropy(p));
    parts_.push_back(std::make_shared<const Partition>(std::move(p)));
  }
  if (parts_.size() <= kCacheCap) nr_cache_.assign(parts_.size() * parts_.size(), -1);
}

bool FeedbackEngine::non_redundant(std::size_t pi, std::size_t pj) const {
  const bool cached = !nr_cache_.empty();
  if (cached && nr_cache_[pi * parts_.size() + pj] >= 0) {
    return nr_cache_[pi * parts_.size() + pj] != 0;
  }
  const double hj = joint_outcome_entropy(*parts_[pi], *parts_[pj]);
  const double hi = entropy_[pi];
  const double hq = entropy_[pj];
  bool ok = hj - hq > kTol && hj - hi > kTol;
  // For unstructured settings the two outcomes must also be independent.
  if (ok && !problem_.structured) ok = hi + hq - hj <= kTol;
  if (cached) {
    nr_cache_[pi * parts_.size() + pj] = ok;
    nr_cache_[pj * parts_.size() + pi] = ok;
  }
  return ok;
}

Condition FeedbackEngine::check_setting(const Partition& p, const Partition& q,
                                        std::size_t b) const {
  const Subset& x = p.class_at(b);
  const Subset& y = q.class_at(b);
  const std::size_t qb = q.label[b];
  std::size_t common = 0;
  for (std::size_t m : x) common += q.label[m] == qb;
  if (common != 1) return Condition::c_i;
  if (x.size() != y.size()) return Condition::c_eq;
  if (config_.condition_no_applies(problem_)) {
    auto constant = [&](const Subset& s) {
      for (std::size_t m : s) {
        if (problem_.settings[m].verdict != problem_.settings[s.front()].verdict) return false;
      }
      return true;
    };
    if (constant(x) || constant(y)) return Condition::c_no;
  }
  return Condition::valid;
}

Condition FeedbackEngine::check_at(const Partition& p, const Partition& q, std::size_t b) const {
  Condition c = check_setting(p, q, b);
  if (c != Condition::valid) return c;
  if (config_.require_all_settings) {
    for (std::size_t o = 0; o < problem_.size(); ++o) {
      c = check_setting(p, q, o);
      if (c != Condition::valid) return c;
    }
  }
  if (config_.r_target) {
    double r = r_value_of(p.class_at(b).size(), problem_.size());
    if (std::abs(r - *config_.r_target) > config_.r_tolerance + kTol) return Condition::r_target;
  }
  return Condition::valid;
}

Condition FeedbackEngine::check(std::size_t pi, std::size_t pj, std::size_t b) const {
  if (b >= problem_.size()) throw UnknownSetting("setting index out of range");
  const Partition& p = *parts_.at(pi);
  const Partition& q = *parts_.at(pj);
  if (p.class_at(b).size() == 1 || q.class_at(b).size() == 1) return Condition::c_nr;
  if (!non_redundant(pi, pj)) return Condition::c_nr;
  return check_at(p, q, b);
}

std::vector<FeedbackPair> FeedbackEngine::find_pairs(
    std::size_t b, std::map<Condition, std::size_t>* histogram) const {
  if (b >= problem_.size()) throw UnknownSetting("setting index out of range");
  std::vector<FeedbackPair> out;
  const std::size_t n = parts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Condition c = check(i, j, b);
      if (histogram) ++(*histogram)[c];
      if (c != Condition::valid) continue;
      FeedbackPair fp{parts_[i], parts_[j], {}};
      fp.verdicts.reserve(problem_.size());
      for (std::size_t o = 0; o < problem_.size(); ++o) fp.verdicts.push_back(check(i, j, o));
      out.push_back(std::move(fp));
    }
  }
  return out;
}

Condition check_conditions(const OracleProblem& problem, const Partition& p_i,
                           const Partition& p_j, std::string_view b, const FeedbackConfig& config) {
  const std::size_t idx = problem.index_of(b);
  if (p_i == p_j) return Condition::c_nr;
  FeedbackEngine engine(problem, config, std::vector<Partition>{p_i, p_j});
  return engine.check(0, 1, idx);
}

std::vector<FeedbackPair> find_pairs(const OracleProblem& problem, std::string_view b,
                                     const FeedbackConfig& config, Strategy strategy) {
  const std::size_t idx = problem.index_of(b);
  return FeedbackEngine(problem, config, strategy).find_pairs(idx);
}

std::pair<KnowledgeInstance, KnowledgeInstance> instances_of(const OracleProblem& problem,
                                                             const FeedbackPair& pair,
                                                             std::size_t b) {
  if (b >= pair.verdicts.size() || pair.verdicts[b] != Condition::valid) {
    throw InvalidPair("pair is not valid at setting " +
                      (b < problem.size() ? problem.settings[b].b : std::to_string(b)));
  }
  return {make_instance(problem, b, pair.p_i->class_at(b)),
          make_instance(problem, b, pair.p_j->class_at(b))};
}

std::vector<KnowledgeInstance> all_instances(const OracleProblem& problem,
                                             const std::vector<FeedbackPair>& pairs,
                                             std::size_t b) {
  std::set<Subset> seen;
  for (const FeedbackPair& fp : pairs) {
    auto [x, y] = instances_of(problem, fp, b);
    seen.insert(x.subset);
    seen.insert(y.subset);
  }
  std::vector<KnowledgeInstance> out;
  for (const Subset& s : seen) out.push_back(make_instance(problem, b, s));
  return out;
}

std::vector<KnowledgeInstance> all_instances(const OracleProblem& problem, std::string_view b,
                                             const FeedbackConfig& config, Strategy strategy) {
  const std::size_t idx = problem.index_of(b);
  return all_instances(problem, find_pairs(problem, b, config, strategy), idx);
}

}  // namespace retro
