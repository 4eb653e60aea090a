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
#include <memory>
#include <string>

#include "retro/observables.hpp"
#include "retro/problems.hpp"

namespace retro {

/// Adaptive classical query strategy: a leaf names the solution, an inner
/// node evaluates f_b(arg) and branches on the observed value.
struct DecisionTree {
  bool leaf = true;
  std::string label;
  std::uint64_t arg = 0;
  std::map<std::uint32_t, std::shared_ptr<const DecisionTree>> children;

  static std::shared_ptr<const DecisionTree> make_leaf(std::string label);
  static std::shared_ptr<const DecisionTree> make_query(
      std::uint64_t arg, std::map<std::uint32_t, std::shared_ptr<const DecisionTree>> children);
};

struct QueryBound {
  Subset subset;
  int depth = 0;
  std::shared_ptr<const DecisionTree> tree;
};

/// Longest root-to-leaf query count.
int tree_depth(const DecisionTree& tree);

/// Exact worst-case number of queries that determine s(b) for b in `subset`,
/// with a witness tree. Ties go to the smallest argument.
/// Throws EmptySubset, SizeError (|subset| > 64, n > 16 or search too large)
/// and ValidationError when two settings with equal tables differ in s(b).
QueryBound minimax_depth(const OracleProblem& problem, const Subset& subset);

/// True iff every b in `subset` follows a path of distinct arguments to a
/// leaf labelled s(b).
bool verify_tree(const OracleProblem& problem, const Subset& subset, const DecisionTree& tree);

/// Optimal depth by iterative deepening over all trees, no memoisation.
/// Needs |subset| <= 8 and 2^n <= 8, else SizeError.
int brute_force_depth(const OracleProblem& problem, const Subset& subset);

/// Compact one-line rendering, e.g. "a=0?[0:1 1:0]".
std::string format_tree(const OracleProblem& problem, const DecisionTree& tree);

}  // namespace retro
