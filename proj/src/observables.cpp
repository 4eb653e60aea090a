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

#include "retro/observables.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "retro/bitstring.hpp"
#include "retro/errors.hpp"

namespace retro {

std::string_view to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::general: return "general";
    case PartitionKind::bitmask: return "bitmask";
    case PartitionKind::half_table: return "half-table";
  }
  return "?";
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::general: return "general";
    case Strategy::bitmask: return "bitmask";
    case Strategy::half_table: return "half-table";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "general") return Strategy::general;
  if (s == "bitmask") return Strategy::bitmask;
  if (s == "half-table" || s == "half_table") return Strategy::half_table;
  throw FormatError("unknown strategy '" + std::string(s) + "'");
}

Partition make_partition(std::vector<Subset> classes, std::size_t c, PartitionKind kind,
                         std::string descriptor) {
  Partition p;
  p.kind = kind;
  p.descriptor = std::move(descriptor);
  for (Subset& k : classes) {
    if (k.empty()) throw ValidationError("partition has an empty class");
    std::sort(k.begin(), k.end());
  }
  std::sort(classes.begin(), classes.end());
  p.label.assign(c, c);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t m : classes[i]) {
      if (m >= c) throw ValidationError("partition class holds an unknown setting");
      if (p.label[m] != c) throw ValidationError("partition classes overlap");
      p.label[m] = i;
    }
  }
  for (std::size_t l : p.label) {
    if (l == c) throw ValidationError("partition does not cover every setting");
  }
  p.classes = std::move(classes);
  return p;
}

Partition discrete_partition(std::size_t n) {
  std::vector<Subset> classes;
  for (std::size_t i = 0; i < n; ++i) classes.push_back({i});
  return make_partition(std::move(classes), n);
}

OutcomeClass class_of(const OracleProblem& problem, const Partition& p, std::string_view b) {
  std::size_t i = problem.index_of(b);
  return OutcomeClass{&p, p.class_at(i)};
}

namespace {

constexpr std::size_t kGeneralCap = 10;
// Bound on (induced partitions) x (settings) for the keyed strategies.
constexpr std::uint64_t kKeyedWorkCap = std::uint64_t{1} << 26;
constexpr std::uint64_t kKeyedSubsetCap = 4096;

void general_rec(std::size_t i, std::size_t c, std::vector<Subset>& cur,
                 std::vector<Partition>& out) {
  if (i == c) {
    out.push_back(make_partition(cur, c));
    return;
  }
  for (std::size_t k = 0; k < cur.size(); ++k) {
    cur[k].push_back(i);
    general_rec(i + 1, c, cur, out);
    cur[k].pop_back();
  }
  cur.push_back({i});
  general_rec(i + 1, c, cur, out);
  cur.pop_back();
}

// Subsets of {0..k-1}, excluding empty and full, by size then lexicographically.
std::vector<std::vector<int>> proper_subsets(int k) {
  std::vector<std::vector<int>> out;
  for (int r = 1; r < k; ++r) {
    std::vector<bool> pick(static_cast<std::size_t>(k), false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) {
        if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

template <typename Key>
Partition keyed_partition(const OracleProblem& problem, PartitionKind kind,
                          std::string descriptor, Key key) {
  std::map<std::string, Subset> groups;
  for (std::size_t i = 0; i < problem.size(); ++i) groups[key(problem.settings[i])].push_back(i);
  std::vector<Subset> classes;
  for (auto& [k, v] : groups) classes.push_back(std::move(v));
  return make_partition(std::move(classes), problem.size(), kind, std::move(descriptor));
}

void check_keyed_size(const OracleProblem& problem, std::uint64_t k, const char* what) {
  if (k >= 63 || (std::uint64_t{1} << k) > kKeyedSubsetCap ||
      (std::uint64_t{1} << k) * problem.size() > kKeyedWorkCap) {
    throw SizeError(std::string(what) + " enumeration over " + std::to_string(k) +
                    " positions and " + std::to_string(problem.size()) +
                    " settings is beyond desk scale");
  }
}

}  // namespace

Partition bit_partition(const OracleProblem& problem, const std::vector<int>& positions) {
  std::string desc = "bits ";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int q = positions[i];
    if (q < 0 || q >= problem.setting_bits()) throw ValidationError("bit position out of range");
    desc += (i ? "," : "") + std::to_string(q);
  }
  return keyed_partition(problem, PartitionKind::bitmask, desc, [&](const Setting& s) {
    std::string k;
    for (int q : positions) k += s.b[static_cast<std::size_t>(q)];
    return k;
  });
}

std::vector<Partition> enumerate_partitions(const OracleProblem& problem, Strategy strategy) {
  const std::size_t c = problem.size();
  std::vector<Partition> out;
  switch (strategy) {
    case Strategy::general: {
      if (c > kGeneralCap) {
        throw SizeError("general enumeration needs at most " + std::to_string(kGeneralCap) +
                        " settings, problem has " + std::to_string(c));
      }
      std::vector<Subset> cur;
      general_rec(0, c, cur, out);
      break;
    }
    case Strategy::bitmask: {
      const int len = problem.setting_bits();
      check_keyed_size(problem, static_cast<std::uint64_t>(len), "bitmask");
      for (const auto& pos : proper_subsets(len)) {
        out.push_back(bit_partition(problem, pos));
      }
      break;
    }
    case Strategy::half_table: {
      if (!problem.table_suffix()) {
        throw ValidationError("half-table strategy needs a table-suffix problem");
      }
      const int nargs = static_cast<int>(problem.num_args());
      check_keyed_size(problem, static_cast<std::uint64_t>(nargs), "half-table");
      for (const auto& args : proper_subsets(nargs)) {
        std::string desc = "args ";
        for (std::size_t i = 0; i < args.size(); ++i) {
          desc += (i ? "," : "") + to_bits(static_cast<std::uint64_t>(args[i]), problem.arg_bits);
        }
        out.push_back(
            keyed_partition(problem, PartitionKind::half_table, desc, [&](const Setting& s) {
              std::string k;
              for (int a : args) k += to_bits(s.f(static_cast<std::uint64_t>(a)), problem.out_bits);
              return k;
            }));
      }
      break;
    }
  }
  // Stable sort keeps the first descriptor of each canonical form.
  std::stable_sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Strategy default_strategy(const OracleProblem& problem) {
  if (problem.size() <= 6) return Strategy::general;
  if (problem.table_suffix()) return Strategy::half_table;
  return Strategy::bitmask;
}

double shannon_bits(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (std::size_t k : counts) total += k;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (std::size_t k : counts) {
    if (k == 0) continue;
    double q = static_cast<double>(k) / static_cast<double>(total);
    h -= q * std::log2(q);
  }
  return h;
}

double outcome_entropy(const Partition& p) {
  std::vector<std::size_t> counts;
  for (const Subset& k : p.classes) counts.push_back(k.size());
  return shannon_bits(counts);
}

double joint_outcome_entropy(const Partition& p, const Partition& q) {
  if (p.label.size() != q.label.size()) throw ValidationError("partitions of different sets");
  std::vector<std::size_t> counts(p.num_classes() * q.num_classes(), 0);
  for (std::size_t i = 0; i < p.label.size(); ++i) {
    ++counts[p.label[i] * q.num_classes() + q.label[i]];
  }
  return shannon_bits(counts);
}

double conditional_outcome_entropy(const Partition& p, const Partition& q) {
  return joint_outcome_entropy(p, q) - outcome_entropy(q);
}

double mutual_information(const Partition& p, const Partition& q) {
  return outcome_entropy(p) + outcome_entropy(q) - joint_outcome_entropy(p, q);
}

double solution_entropy(const OracleProblem& problem, const Subset& subset) {
  if (subset.empty()) throw EmptySubset("solution entropy of an empty subset");
  std::map<std::string_view, std::size_t> hist;
  for (std::size_t i : subset) ++hist[problem.settings.at(i).solution];
  std::vector<std::size_t> counts;
  for (const auto& [k, v] : hist) counts.push_back(v);
  return shannon_bits(counts);
}

double solution_entropy(const OracleProblem& problem) {
  return solution_entropy(problem, all_settings(problem));
}

Subset all_settings(const OracleProblem& problem) {
  Subset s(problem.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

std::string format_subset(const OracleProblem& problem, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += problem.settings[s[i]].b;
  }
  return out + "}";
}

std::string format_partition(const OracleProblem& problem, const Partition& p) {
  std::string out = "{";
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    if (k) out += " | ";
    for (std::size_t i = 0; i < p.classes[k].size(); ++i) {
      if (i) out += ",";
      out += problem.settings[p.classes[k][i]].b;
    }
  }
  return out + "}";
}

}  // namespace retro
