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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "retro/bitstring.hpp"
#include "retro/errors.hpp"
#include "retro/simulator.hpp"
#include "retro/walkthrough.hpp"

using namespace retro;

namespace {

oracle::cmat dense_circuit(const Circuit& c, int n, const std::vector<int>& table) {
  oracle::cmat u = oracle::cmat::Identity(Eigen::Index{2} << n, Eigen::Index{2} << n);
  for (const Gate& g : c.gates) {
    oracle::cmat m;
    switch (g.kind) {
      case GateKind::H_A: m = oracle::h_on_a(n); break;
      case GateKind::U_f: m = oracle::oracle_matrix(n, table); break;
      case GateKind::INV_A: m = oracle::inversion_about_mean(n); break;
      case GateKind::PERM_A: m = oracle::permutation_on_a({g.perm.begin(), g.perm.end()}); break;
      case GateKind::U_B: ADD_FAILURE() << "setting gates are not modelled densely"; return u;
    }
    u = m * u;
  }
  return u;
}

}  // namespace

TEST(Simulator, MatchesDenseMatrices) {
  for (const std::string& name : builtin_circuit_names()) {
    const Circuit c = builtin_circuit(name);
    const OracleProblem p = builtin_circuit_problem(name);
    const BlockState out = apply(input_state(p), c);
    for (std::size_t b = 0; b < p.size(); ++b) {
      std::vector<int> table;
      for (std::uint64_t a = 0; a < p.num_args(); ++a) table.push_back(static_cast<int>(p.settings[b].f(a)));
      const oracle::cvec want = dense_circuit(c, p.arg_bits, table) * oracle::input_vector(p.arg_bits);
      EXPECT_LT(oracle::phase_free_distance(want, out.blocks[b]), 1e-12) << name << " " << p.settings[b].b;
      EXPECT_NEAR(out.blocks[b].norm(), 1.0, 1e-12);
    }
  }
}

TEST(Simulator, SimonReadsPeriod) {
  const OracleProblem p = gen_simon(2);
  const Circuit c = builtin_circuit("simon2");
  const Partition a_vals = discrete_partition(4);
  for (std::size_t b = 0; b < p.size(); ++b) {
    const auto pr = outcome_probabilities(apply(single_setting_state(p, b), c), Register::A, a_vals);
    EXPECT_NEAR(pr[from_bits(p.period.at(p.settings[b].b))], 1.0, 1e-12) << p.settings[b].b;
  }
}

TEST(Simulator, ControlContractAndNorms) {
  for (const std::string& name : builtin_circuit_names()) {
    const OracleProblem p = builtin_circuit_problem(name);
    const Circuit c = builtin_circuit(name);
    BlockState s = input_state(p);
    s = measure_partition(s, Register::B, bit_partition(p, {0}), 0).state;
    const BlockState out = apply(s, c);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_NEAR(out.weights[i], s.weights[i], 1e-15);
      if (out.weights[i] > 0) EXPECT_NEAR(out.blocks[i].norm(), 1.0, 1e-12);
    }
  }
}

TEST(Simulator, InverseUndoes) {
  for (const std::string& name : builtin_circuit_names()) {
    const OracleProblem p = builtin_circuit_problem(name);
    const Circuit c = builtin_circuit(name);
    const BlockState in = input_state(p);
    EXPECT_LT(state_distance(apply(apply(in, c), c.inverse()), in), 1e-12) << name;
  }
  const OracleProblem d = gen_deutsch();
  const Circuit w = deutsch_with_setter(d);
  EXPECT_LT(state_distance(apply(apply(input_state(d), w), w.inverse()), input_state(d)), 1e-12);
}

TEST(Simulator, ProjectionsCommuteWithDeutsch) {
  const OracleProblem p = gen_deutsch();
  const Circuit c = builtin_circuit("deutsch");
  const BlockState in = input_state(p);
  for (const std::vector<int>& bits : {std::vector<int>{0}, {1}, {0, 1}}) {
    const Partition part = bit_partition(p, bits);
    for (std::size_t k = 0; k < part.num_classes(); ++k) {
      const BlockState early = apply(measure_partition(in, Register::B, part, k).state, c);
      const BlockState late = measure_partition(apply(in, c), Register::B, part, k).state;
      EXPECT_LT(state_distance(early, late), 1e-12);
      const BlockState fwd = propagate_projection(in, c, part, k, Direction::forward);
      EXPECT_LT(state_distance(fwd, late), 1e-12);
      const BlockState back = propagate_projection(in, c, part, k, Direction::backward);
      EXPECT_LT(state_distance(back, measure_partition(in, Register::B, part, k).state), 1e-12);
    }
  }
}

TEST(Simulator, EntropyBookkeeping) {
  for (const std::string& name : builtin_circuit_names()) {
    const OracleProblem p = builtin_circuit_problem(name);
    const BlockState in = input_state(p);
    const double c = static_cast<double>(p.size());
    EXPECT_NEAR(entropy_of(in, Register::B), std::log2(c), 1e-12);
    EXPECT_NEAR(entropy_of(in, Register::A), 0.0, 1e-12);
    const auto full = measure_partition(in, Register::B, discrete_partition(p.size()), 0);
    EXPECT_NEAR(entropy_of(full.state, Register::B), 0.0, 1e-12);
    EXPECT_NEAR(full.probability, 1.0 / c, 1e-12);
  }
  const OracleProblem d = gen_deutsch();
  const auto half = measure_partition(input_state(d), Register::B, bit_partition(d, {1}), 1);
  EXPECT_NEAR(entropy_of(half.state, Register::B), 1.0, 1e-12);
  const BlockState out = apply(input_state(d), builtin_circuit("deutsch"));
  EXPECT_NEAR(entropy_of(out, Register::A), 1.0, 1e-12);
}

TEST(Simulator, MeasurementSampling) {
  const OracleProblem p = gen_grover(2);
  const BlockState out = apply(input_state(p), builtin_circuit("grover2"));
  Rng r1(42);
  Rng r2(42);
  const Partition a_vals = discrete_partition(4);
  for (int k = 0; k < 20; ++k) {
    const auto x = measure_partition(out, Register::A, a_vals, std::nullopt, &r1);
    const auto y = measure_partition(out, Register::A, a_vals, std::nullopt, &r2);
    EXPECT_EQ(x.outcome, y.outcome);
    EXPECT_NEAR(x.probability, 0.25, 1e-12);
    // After reading A the setting is known.
    EXPECT_NEAR(entropy_of(x.state, Register::B), 0.0, 1e-12);
  }
  const auto one = measure_partition(single_setting_state(p, 1), Register::B, discrete_partition(4), 1);
  EXPECT_THROW(measure_partition(one.state, Register::B, discrete_partition(4), 0), ZeroProbabilityOutcome);
  EXPECT_THROW(builtin_circuit("nosuch"), UnknownCircuit);
  EXPECT_THROW(input_state(gen_simon(3)), DimensionMismatch);
}

TEST(Simulator, DumpFormat) {
  const OracleProblem p = gen_deutsch();
  const std::string d = dump_state(single_setting_state(p, 1));
  EXPECT_EQ(d, "01|0|0 0.707106781186547 0.000000000000000 1.000000000000000\n"
               "01|0|1 -0.707106781186547 0.000000000000000 1.000000000000000\n");
}

TEST(Walkthrough, AllChecksPass) {
  for (const std::string& name : builtin_circuit_names()) {
    for (const StateCheck& sc : check_states(name, std::nullopt)) {
      EXPECT_TRUE(sc.pass) << name << " " << sc.label << " " << sc.distance;
      EXPECT_LE(sc.distance, 1e-12);
    }
  }
  for (const char* b : {"00", "10", "11"}) {
    for (const StateCheck& sc : check_states("deutsch", std::string(b))) EXPECT_TRUE(sc.pass) << b << sc.label;
  }
}

TEST(Walkthrough, DetectsWrongReference) {
  const OracleProblem p = gen_deutsch();
  const BlockState out = apply(input_state(p), builtin_circuit("deutsch"));
  // Every setting at A = 0 is wrong for the balanced ones.
  const BlockState bad = reference_state(p, {{"00", 0}, {"01", 0}, {"10", 0}, {"11", 0}});
  EXPECT_GT(state_distance(out, bad), 0.5);
}
