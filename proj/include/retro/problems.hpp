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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace retro {

/// One problem setting b with its function table f_b and solution s(b).
///
/// Tables are dense (`table[a]`) except for point functions, where `point`
/// holds the single argument mapped to 1 and `table` is empty.
struct Setting {
  std::string b;
  std::vector<std::uint32_t> table;
  std::int64_t point = -1;
  std::string solution;
  // Coarse answer used by the "solution already selected" test. Equal to
  // `solution` except for Deutsch-Jozsa, where it is constant/balanced.
  std::string verdict;

  std::uint32_t f(std::uint64_t a) const {
    if (point >= 0) return static_cast<std::uint32_t>(static_cast<std::int64_t>(a) == point);
    return table[a];
  }
};

/// An oracle problem: the setting set sigma_B with tables and solutions.
///
/// Build through `make_problem` or a generator; both sort the settings,
/// validate every invariant and compute `structured`.
struct OracleProblem {
  std::string name;
  int arg_bits = 0;
  int out_bits = 0;
  std::vector<Setting> settings;
  bool structured = false;
  // Optional XOR period h(b) for Simon-type problems.
  std::map<std::string, std::string> period;

  std::size_t size() const { return settings.size(); }
  std::uint64_t num_args() const { return std::uint64_t{1} << arg_bits; }
  int setting_bits() const { return static_cast<int>(settings.front().b.size()); }

  /// Position of `b` in the lexicographic setting order. Throws UnknownSetting.
  std::size_t index_of(std::string_view b) const;
  bool contains(std::string_view b) const;

  /// True iff every b is its own table written as concatenated values.
  bool table_suffix() const;

  friend bool operator==(const OracleProblem& x, const OracleProblem& y);

  std::unordered_map<std::string, std::size_t> index_;
};

/// Sorts, validates and indexes a problem. Throws ValidationError.
OracleProblem make_problem(std::string name, int arg_bits, int out_bits,
                           std::vector<Setting> settings,
                           std::map<std::string, std::string> period = {});

OracleProblem gen_deutsch();
OracleProblem gen_grover(int n);
OracleProblem gen_deutsch_jozsa(int n);
OracleProblem gen_simon(int n);

/// Built-in family by name: deutsch, grover, dj, simon.
OracleProblem gen_builtin(std::string_view family, int n);

std::string problem_to_json(const OracleProblem& p);
OracleProblem problem_from_json(std::string_view text);
OracleProblem load_problem(const std::string& path);
void save_problem(const OracleProblem& p, const std::string& path);

}  // namespace retro
