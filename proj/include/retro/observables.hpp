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
#include <string>
#include <string_view>
#include <vector>

#include "retro/problems.hpp"

namespace retro {

/// Sorted setting indices into `OracleProblem::settings`.
using Subset = std::vector<std::size_t>;

enum class PartitionKind { general, bitmask, half_table };
enum class Strategy { general, bitmask, half_table };

std::string_view to_string(PartitionKind k);
std::string_view to_string(Strategy s);
/// Accepts general, bitmask, half-table, half_table. Throws FormatError.
Strategy parse_strategy(std::string_view s);

/// A partial observable of the setting register: a partition of sigma_B.
///
/// Classes are kept canonical: members ascending, classes ordered by their
/// smallest member. `label[i]` is the class holding setting i.
struct Partition {
  PartitionKind kind = PartitionKind::general;
  // Bit positions ("bits 0,2") or arguments ("args 00,10") that induced it.
  std::string descriptor;
  std::vector<Subset> classes;
  std::vector<std::size_t> label;

  std::size_t num_classes() const { return classes.size(); }
  const Subset& class_at(std::size_t setting) const { return classes[label[setting]]; }

  friend bool operator==(const Partition& x, const Partition& y) { return x.classes == y.classes; }
  friend bool operator<(const Partition& x, const Partition& y) { return x.classes < y.classes; }
};

struct OutcomeClass {
  const Partition* parent = nullptr;
  Subset members;
};

/// Canonicalises `classes` over `c` settings. Throws ValidationError when
/// they are empty, overlap or miss a setting.
Partition make_partition(std::vector<Subset> classes, std::size_t c,
                         PartitionKind kind = PartitionKind::general, std::string descriptor = {});

/// Every element in its own class (the complete measurement).
Partition discrete_partition(std::size_t n);
/// Settings grouped by their bits at `positions` (0 = leftmost).
Partition bit_partition(const OracleProblem& problem, const std::vector<int>& positions);

/// The class of `b` in `p`. Throws UnknownSetting.
OutcomeClass class_of(const OracleProblem& problem, const Partition& p, std::string_view b);

/// Distinct partitions for the strategy, sorted by canonical form.
/// Throws SizeError when the enumeration is beyond desk scale.
std::vector<Partition> enumerate_partitions(const OracleProblem& problem, Strategy strategy);

/// Strategy used when the caller does not pick one.
Strategy default_strategy(const OracleProblem& problem);

/// Base-2 Shannon entropy of a histogram.
double shannon_bits(const std::vector<std::size_t>& counts);

double outcome_entropy(const Partition& p);
double joint_outcome_entropy(const Partition& p, const Partition& q);
/// H(p | q) under a uniform setting.
double conditional_outcome_entropy(const Partition& p, const Partition& q);
double mutual_information(const Partition& p, const Partition& q);

/// Entropy of s(b) for b uniform over `subset`. Throws EmptySubset.
double solution_entropy(const OracleProblem& problem, const Subset& subset);
double solution_entropy(const OracleProblem& problem);

Subset all_settings(const OracleProblem& problem);
/// "{00,01}" style rendering of a subset.
std::string format_subset(const OracleProblem& problem, const Subset& s);
/// "{00,01 | 10,11}" style rendering of a partition.
std::string format_partition(const OracleProblem& problem, const Partition& p);

}  // namespace retro
