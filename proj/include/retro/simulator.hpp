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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "retro/feedback.hpp"
#include "retro/observables.hpp"
#include "retro/problems.hpp"

namespace retro {

using cplx = std::complex<double>;

enum class Register { A, B };

enum class GateKind { H_A, U_f, INV_A, PERM_A, U_B };

/// One circuit step. PERM_A sends |a> to |perm[a]>; U_B sends the block of
/// setting x to setting b_map[x].
struct Gate {
  GateKind kind = GateKind::H_A;
  std::vector<std::uint64_t> perm;
  std::map<std::string, std::string> b_map;

  static Gate h() { return {GateKind::H_A, {}, {}}; }
  static Gate oracle() { return {GateKind::U_f, {}, {}}; }
  static Gate inversion() { return {GateKind::INV_A, {}, {}}; }
  static Gate permutation(std::vector<std::uint64_t> perm) { return {GateKind::PERM_A, std::move(perm), {}}; }
  static Gate setting_map(std::map<std::string, std::string> m) { return {GateKind::U_B, {}, std::move(m)}; }
  /// U_B flipping every bit of the setting.
  static Gate complement(const OracleProblem& problem);
};

std::string gate_name(const Gate& g);

struct Circuit {
  std::string name;
  std::vector<Gate> gates;

  /// Gate-by-gate inverse in reverse order.
  Circuit inverse() const;
  std::size_t query_count() const;
};

/// deutsch, grover2, dj2, simon2. Throws UnknownCircuit.
Circuit builtin_circuit(std::string_view name);
/// Problem each built-in circuit is written for. Throws UnknownCircuit.
OracleProblem builtin_circuit_problem(std::string_view name);
std::vector<std::string> builtin_circuit_names();

/// Mixture over settings of pure A (x) V states, one block per setting.
///
/// Block vectors are indexed a * 2 + v. A zero weight marks a projected-out
/// block; its vector is zero too. `tags[i]` is the random-phase label that
/// started on the setting now at position i.
struct BlockState {
  const OracleProblem* problem = nullptr;
  int a_bits = 0;
  std::vector<Eigen::VectorXcd> blocks;
  std::vector<double> weights;
  std::vector<std::size_t> tags;

  std::size_t a_dim() const { return std::size_t{1} << a_bits; }
  std::size_t dim() const { return a_dim() * 2; }
};

/// Uniform mixture of |0..0>_A (|0> - |1>)_V / sqrt 2 over all settings.
/// Throws DimensionMismatch unless out_bits == 1.
BlockState input_state(const OracleProblem& problem);
/// Input state holding only the block of setting `b`.
BlockState single_setting_state(const OracleProblem& problem, std::size_t b);

BlockState apply_gate(const BlockState& state, const Gate& gate);
BlockState apply(const BlockState& state, const Circuit& circuit);

/// Seeded generator with a portable uniform in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

struct MeasureResult {
  std::size_t outcome = 0;
  double probability = 0.0;
  BlockState state;
};

/// Probability of every class of `partition` on `reg`. For A the partition
/// is over A basis values, for B over settings.
std::vector<double> outcome_probabilities(const BlockState& state, Register reg,
                                          const Partition& partition);

/// Projects on one class, forced when `forced` is given, else sampled.
/// Throws ZeroProbabilityOutcome and DimensionMismatch.
MeasureResult measure_partition(const BlockState& state, Register reg, const Partition& partition,
                                std::optional<std::size_t> forced, Rng* rng = nullptr);

enum class Direction { forward, backward };

/// Carries a B projection across `circuit`, whose input is `state_before`.
/// Forward projects at the input and returns the output; backward projects
/// the output and returns the input it came from. Both routes are checked
/// against the other order of projection and evolution (1e-12).
BlockState propagate_projection(const BlockState& state_before, const Circuit& circuit,
                                const Partition& partition, std::size_t outcome,
                                Direction direction);

/// Von Neumann entropy in bits of the reduced state of `reg`.
double entropy_of(const BlockState& state, Register reg);
/// Shannon entropy in bits of block weights.
double shannon_of_weights(const std::vector<double>& weights);

/// Max over blocks of the distance between block vectors after removing each
/// block's global phase, together with the weight difference. Tags are not
/// compared.
double state_distance(const BlockState& x, const BlockState& y);

/// `b|a|v re im weight` lines for every non-zero amplitude.
std::string dump_state(const BlockState& state);

/// Setting permutation done by the U_B gates of a circuit, as indices.
std::vector<std::size_t> setting_permutation(const OracleProblem& problem, const Circuit& circuit);

struct BasisState {
  std::size_t b = 0;
  std::uint64_t a = 0;
  int v = 0;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// A path of basis states through a circuit.
struct History {
  std::vector<BasisState> states;  // one more than the number of gates
  std::vector<cplx> steps;         // step amplitude of each gate
  cplx initial{0.0, 0.0};          // amplitude of the starting basis state
  cplx amplitude{0.0, 0.0};        // initial times every step
  std::vector<std::uint64_t> queries;
  std::size_t query_setting = 0;   // setting seen by the oracle
};

/// Every path with non-zero step amplitudes from |b>|0..0>|v>, v in {0,1},
/// weighted by the V minus-state amplitudes.
std::vector<History> enumerate_histories(const OracleProblem& problem, const Circuit& circuit,
                                         std::size_t b);

/// Sum of history amplitudes per final basis state.
std::map<std::tuple<std::size_t, std::uint64_t, int>, cplx> sum_histories(
    const std::vector<History>& histories);

/// Instances at the history's setting whose members the queried values split
/// into parts of constant solution. Empty means unjustified.
std::vector<KnowledgeInstance> classify_history(const OracleProblem& problem,
                                                const History& history,
                                                const FeedbackConfig& config, Strategy strategy);
std::vector<KnowledgeInstance> classify_history(const OracleProblem& problem,
                                                const History& history,
                                                const std::vector<KnowledgeInstance>& instances);

}  // namespace retro
