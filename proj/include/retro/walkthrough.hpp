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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retro/problems.hpp"
#include "retro/simulator.hpp"

namespace retro {

/// Comparison of one simulated state against its closed-form reference.
struct StateCheck {
  std::string label;
  std::string description;
  bool pass = false;
  double distance = 0.0;
  std::string dump;  // simulated state
};

/// Mixture of the listed blocks, uniform weights, each block
/// sign * |a>_A (|0> - |1>)_V / sqrt 2.
struct RefBlock {
  std::string b;
  std::uint64_t a = 0;
  double sign = 1.0;
};
BlockState reference_state(const OracleProblem& problem, const std::vector<RefBlock>& blocks);

/// Labelled state checks for a built-in circuit. For deutsch this is the
/// walkthrough with U_B = bit complement, target setting `setting`
/// (default 01) and Bob's random outcome its complement.
std::vector<StateCheck> check_states(std::string_view circuit,
                                     const std::optional<std::string>& setting);

/// [U_B, H_A, U_f, H_A] with U_B the bit complement.
Circuit deutsch_with_setter(const OracleProblem& problem);

}  // namespace retro
