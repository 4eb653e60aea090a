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

#include "retro/query_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <unordered_map>

#include "retro/bitstring.hpp"
#include "retro/errors.hpp"

namespace retro {

std::shared_ptr<const DecisionTree> DecisionTree::make_leaf(std::string label) {
  auto t = std::make_shared<DecisionTree>();
  t->label = std::move(label);
  return t;
}

std::shared_ptr<const DecisionTree> DecisionTree::make_query(
    std::uint64_t arg, std::map<std::uint32_t, std::shared_ptr<const DecisionTree>> children) {
  auto t = std::make_shared<DecisionTree>();
  t->leaf = false;
  t->arg = arg;
  t->children = std::move(children);
  return t;
}

int tree_depth(const DecisionTree& tree) {
  if (tree.leaf) return 0;
  int d = 0;
  for (const auto& [v, child] : tree.children) d = std::max(d, tree_depth(*child));
  return d + 1;
}

namespace {

constexpr std::size_t kMemoCap = std::size_t{1} << 22;

class MinimaxSolver {
 public:
  MinimaxSolver(const OracleProblem& problem, const Subset& subset)
      : problem_(problem), subset_(subset) {}

  int solve(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second.depth;
    if (memo_.size() >= kMemoCap) {
      throw SizeError("minimax search exceeded " + std::to_string(kMemoCap) + " candidate sets");
    }

    std::set<std::string_view> sols;
    for (std::size_t k = 0; k < subset_.size(); ++k) {
      if ((mask >> k) & 1u) sols.insert(solution(k));
    }
    if (sols.size() <= 1) {
      memo_[mask] = {0, 0};
      return 0;
    }
    // Information bound: each answer carries at most out_bits bits.
    const int lower = std::max(
        1, static_cast<int>(std::ceil(std::log2(static_cast<double>(sols.size())) / problem_.out_bits -
                                      1e-12)));

    int best = -1;
    std::uint64_t best_arg = 0;
    std::map<std::uint32_t, std::uint64_t> parts;
    for (std::uint64_t a = 0; a < problem_.num_args(); ++a) {
      parts.clear();
      for (std::size_t k = 0; k < subset_.size(); ++k) {
        if ((mask >> k) & 1u) parts[value(k, a)] |= std::uint64_t{1} << k;
      }
      if (parts.size() < 2) continue;
      int worst = 0;
      bool cut = false;
      for (const auto& [v, sub] : parts) {
        worst = std::max(worst, 1 + solve(sub));
        if (best >= 0 && worst >= best) {
          cut = true;
          break;
        }
      }
      if (cut) continue;
      best = worst;
      best_arg = a;
      if (best == lower) break;
    }
    if (best < 0) {
      throw ValidationError("settings with identical tables have different solutions");
    }
    memo_[mask] = {best, best_arg};
    return best;
  }

  std::shared_ptr<const DecisionTree> tree(std::uint64_t mask) {
    const Entry e = memo_.at(mask);
    if (e.depth == 0) {
      std::size_t k = static_cast<std::size_t>(std::countr_zero(mask));
      return DecisionTree::make_leaf(std::string(solution(k)));
    }
    std::map<std::uint32_t, std::uint64_t> parts;
    for (std::size_t k = 0; k < subset_.size(); ++k) {
      if ((mask >> k) & 1u) parts[value(k, e.arg)] |= std::uint64_t{1} << k;
    }
    std::map<std::uint32_t, std::shared_ptr<const DecisionTree>> kids;
    for (const auto& [v, sub] : parts) kids[v] = tree(sub);
    return DecisionTree::make_query(e.arg, std::move(kids));
  }

 private:
  struct Entry {
    int depth;
    std::uint64_t arg;
  };

  std::string_view solution(std::size_t k) const {
    return problem_.settings[subset_[k]].solution;
  }
  std::uint32_t value(std::size_t k, std::uint64_t a) const {
    return problem_.settings[subset_[k]].f(a);
  }

  const OracleProblem& problem_;
  const Subset& subset_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

void check_subset(const OracleProblem& problem, const Subset& subset) {
  if (subset.empty()) throw EmptySubset("query bound of an empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= problem.size()) throw UnknownSetting("subset holds an unknown setting");
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw ValidationError("subset must be strictly increasing");
    }
  }
}

}  // namespace

QueryBound minimax_depth(const OracleProblem& problem, const Subset& subset) {
  check_subset(problem, subset);
  if (subset.size() > 64 || problem.arg_bits > 16) {
    throw SizeError("minimax solver needs |subset| <= 64 and n <= 16");
  }
  MinimaxSolver solver(problem, subset);
  const std::uint64_t full =
      subset.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << subset.size()) - 1;
  QueryBound qb;
  qb.subset = subset;
  qb.depth = solver.solve(full);
  qb.tree = solver.tree(full);
  return qb;
}

namespace {

bool walk(const OracleProblem& problem, const Setting& s, const DecisionTree& t,
          std::set<std::uint64_t>& used) {
  if (t.leaf) return t.label == s.solution;
  if (t.arg >= problem.num_args() || !used.insert(t.arg).second) return false;
  auto it = t.children.find(s.f(t.arg));
  bool ok = it != t.children.end() && it->second && walk(problem, s, *it->second, used);
  used.erase(t.arg);
  return ok;
}

bool exists_tree(const OracleProblem& problem, const Subset& set, int depth,
                 std::vector<bool>& used) {
  bool constant = true;
  for (std::size_t i : set) {
    constant = constant && problem.settings[i].solution == problem.settings[set.front()].solution;
  }
  if (constant) return true;
  if (depth == 0) return false;
  for (std::uint64_t a = 0; a < problem.num_args(); ++a) {
    if (used[a]) continue;
    std::map<std::uint32_t, Subset> parts;
    for (std::size_t i : set) parts[problem.settings[i].f(a)].push_back(i);
    used[a] = true;
    bool all = true;
    for (const auto& [v, part] : parts) {
      if (!exists_tree(problem, part, depth - 1, used)) {
        all = false;
        break;
      }
    }
    used[a] = false;
    if (all) return true;
  }
  return false;
}

}  // namespace

bool verify_tree(const OracleProblem& problem, const Subset& subset, const DecisionTree& tree) {
  for (std::size_t i : subset) {
    if (i >= problem.size()) return false;
    std::set<std::uint64_t> used;
    if (!walk(problem, problem.settings[i], tree, used)) return false;
  }
  return true;
}

int brute_force_depth(const OracleProblem& problem, const Subset& subset) {
  check_subset(problem, subset);
  if (subset.size() > 8 || problem.num_args() > 8) {
    throw SizeError("brute force needs |subset| <= 8 and 2^n <= 8");
  }
  std::vector<bool> used(problem.num_args(), false);
  const int cap = static_cast<int>(problem.num_args());
  for (int d = 0; d <= cap; ++d) {
    if (exists_tree(problem, subset, d, used)) return d;
  }
  throw ValidationError("settings with identical tables have different solutions");
}

std::string format_tree(const OracleProblem& problem, const DecisionTree& tree) {
  if (tree.leaf) return tree.label;
  std::string out = "a=" + to_bits(tree.arg, problem.arg_bits) + "?[";
  bool first = true;
  for (const auto& [v, child] : tree.children) {
    if (!first) out += " ";
    first = false;
    out += to_bits(v, problem.out_bits) + ":" + format_tree(problem, *child);
  }
  return out + "]";
}

}  // namespace retro
