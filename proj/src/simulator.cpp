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

#include "retro/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "retro/bitstring.hpp"
#include "retro/errors.hpp"

namespace retro {

namespace {
constexpr double kCheckTol = 1e-12;
}

Gate Gate::complement(const OracleProblem& problem) {
  std::map<std::string, std::string> m;
  for (const Setting& s : problem.settings) m[s.b] = complement_bits(s.b);
  return setting_map(std::move(m));
}

std::string gate_name(const Gate& g) {
  switch (g.kind) {
    case GateKind::H_A: return "H_A";
    case GateKind::U_f: return "U_f";
    case GateKind::INV_A: return "INV_A";
    case GateKind::PERM_A: return "PERM_A";
    case GateKind::U_B: return "U_B";
  }
  return "?";
}

Circuit Circuit::inverse() const {
  Circuit inv;
  inv.name = name + "^-1";
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::PERM_A) {
      std::vector<std::uint64_t> back(g.perm.size());
      for (std::size_t a = 0; a < g.perm.size(); ++a) back.at(g.perm[a]) = a;
      g.perm = std::move(back);
    } else if (g.kind == GateKind::U_B) {
      std::map<std::string, std::string> back;
      for (const auto& [from, to] : g.b_map) back[to] = from;
      g.b_map = std::move(back);
    }
    inv.gates.push_back(std::move(g));
  }
  return inv;
}

std::size_t Circuit::query_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::U_f; }));
}

Circuit builtin_circuit(std::string_view name) {
  if (name == "deutsch" || name == "dj2") {
    return {std::string(name), {Gate::h(), Gate::oracle(), Gate::h()}};
  }
  if (name == "grover2") return {"grover2", {Gate::h(), Gate::oracle(), Gate::inversion()}};
  if (name == "simon2") {
    return {"simon2", {Gate::h(), Gate::oracle(), Gate::h(), Gate::permutation({0, 2, 1, 3})}};
  }
  throw UnknownCircuit("unknown circuit '" + std::string(name) + "'");
}

OracleProblem builtin_circuit_problem(std::string_view name) {
  if (name == "deutsch") return gen_deutsch();
  if (name == "grover2") return gen_grover(2);
  if (name == "dj2") return gen_deutsch_jozsa(2);
  if (name == "simon2") return gen_simon(2);
  throw UnknownCircuit("unknown circuit '" + std::string(name) + "'");
}

std::vector<std::string> builtin_circuit_names() {
  return {"deutsch", "grover2", "dj2", "simon2"};
}

BlockState input_state(const OracleProblem& problem) {
  if (problem.out_bits != 1) {
    throw DimensionMismatch("register V holds one qubit; problem " + problem.name + " has " +
                            std::to_string(problem.out_bits) + " output bits");
  }
  if (problem.arg_bits > 10) throw DimensionMismatch("register A is limited to 10 qubits");
  BlockState s;
  s.problem = &problem;
  s.a_bits = problem.arg_bits;
  const double c = static_cast<double>(problem.size());
  Eigen::VectorXcd blk = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(s.dim()));
  blk(0) = cplx(1.0 / std::numbers::sqrt2, 0.0);
  blk(1) = cplx(-1.0 / std::numbers::sqrt2, 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    s.blocks.push_back(blk);
    s.weights.push_back(1.0 / c);
    s.tags.push_back(i);
  }
  return s;
}

BlockState single_setting_state(const OracleProblem& problem, std::size_t b) {
  BlockState s = input_state(problem);
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (i != b) {
      s.blocks[i].setZero();
      s.weights[i] = 0.0;
    } else {
      s.weights[i] = 1.0;
    }
  }
  return s;
}

namespace {

std::vector<std::size_t> map_indices(const OracleProblem& problem,
                                     const std::map<std::string, std::string>& m) {
  std::vector<std::size_t> pi(problem.size());
  std::vector<bool> hit(problem.size(), false);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    auto it = m.find(problem.settings[i].b);
    if (it == m.end() || !problem.contains(it->second)) {
      throw DimensionMismatch("U_B does not map setting " + problem.settings[i].b +
                              " into the setting set");
    }
    pi[i] = problem.index_of(it->second);
    if (hit[pi[i]]) throw DimensionMismatch("U_B is not a permutation of the settings");
    hit[pi[i]] = true;
  }
  return pi;
}

void hadamard(Eigen::VectorXcd& x, std::size_t dim_a) {
  for (std::size_t len = 1; len < dim_a; len <<= 1) {
    for (std::size_t i = 0; i < dim_a; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        for (std::size_t v = 0; v < 2; ++v) {
          const auto p = static_cast<Eigen::Index>(j * 2 + v);
          const auto q = static_cast<Eigen::Index>((j + len) * 2 + v);
          const cplx u = x(p);
          const cplx w = x(q);
          x(p) = u + w;
          x(q) = u - w;
        }
      }
    }
  }
  x *= 1.0 / std::sqrt(static_cast<double>(dim_a));
}

void project_settings(BlockState& s, const std::vector<bool>& keep) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (!keep[i]) {
      s.blocks[i].setZero();
      s.weights[i] = 0.0;
    }
    total += s.weights[i];
  }
  if (total <= 0.0) throw ZeroProbabilityOutcome("projection onto a set of zero weight");
  for (double& w : s.weights) w /= total;
}

}  // namespace

std::vector<std::size_t> setting_permutation(const OracleProblem& problem,
                                             const Circuit& circuit) {
  std::vector<std::size_t> pos(problem.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (const Gate& g : circuit.gates) {
    if (g.kind != GateKind::U_B) continue;
    std::vector<std::size_t> pi = map_indices(problem, g.b_map);
    for (std::size_t& p : pos) p = pi[p];
  }
  return pos;
}

BlockState apply_gate(const BlockState& state, const Gate& gate) {
  const OracleProblem& problem = *state.problem;
  const std::size_t da = state.a_dim();
  BlockState out = state;
  switch (gate.kind) {
    case GateKind::H_A:
      for (auto& blk : out.blocks) hadamard(blk, da);
      break;
    case GateKind::U_f:
      for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        const Setting& s = problem.settings[i];
        for (std::size_t a = 0; a < da; ++a) {
          if (s.f(a) & 1u) {
            std::swap(out.blocks[i](static_cast<Eigen::Index>(a * 2)),
                      out.blocks[i](static_cast<Eigen::Index>(a * 2 + 1)));
          }
        }
      }
      break;
    case GateKind::INV_A:
      for (auto& blk : out.blocks) {
        for (std::size_t v = 0; v < 2; ++v) {
          cplx mean = 0.0;
          for (std::size_t a = 0; a < da; ++a) mean += blk(static_cast<Eigen::Index>(a * 2 + v));
          mean /= static_cast<double>(da);
          for (std::size_t a = 0; a < da; ++a) {
            auto k = static_cast<Eigen::Index>(a * 2 + v);
            blk(k) = 2.0 * mean - blk(k);
          }
        }
      }
      break;
    case GateKind::PERM_A: {
      if (gate.perm.size() != da) {
        throw DimensionMismatch("PERM_A acts on " + std::to_string(gate.perm.size()) +
                                " states, register A has " + std::to_string(da));
      }
      std::vector<bool> hit(da, false);
      for (std::uint64_t t : gate.perm) {
        if (t >= da || hit[t]) throw DimensionMismatch("PERM_A is not a permutation");
        hit[t] = true;
      }
      for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        for (std::size_t a = 0; a < da; ++a) {
          for (std::size_t v = 0; v < 2; ++v) {
            out.blocks[i](static_cast<Eigen::Index>(gate.perm[a] * 2 + v)) =
                state.blocks[i](static_cast<Eigen::Index>(a * 2 + v));
          }
        }
      }
      break;
    }
    case GateKind::U_B: {
      std::vector<std::size_t> pi = map_indices(problem, gate.b_map);
      for (std::size_t i = 0; i < pi.size(); ++i) {
        out.blocks[pi[i]] = state.blocks[i];
        out.weights[pi[i]] = state.weights[i];
        out.tags[pi[i]] = state.tags[i];
      }
      break;
    }
  }
  return out;
}

BlockState apply(const BlockState& state, const Circuit& circuit) {
  BlockState s = state;
  for (const Gate& g : circuit.gates) s = apply_gate(s, g);
  return s;
}

std::vector<double> outcome_probabilities(const BlockState& state, Register reg,
                                          const Partition& partition) {
  std::vector<double> p(partition.num_classes(), 0.0);
  if (reg == Register::B) {
    if (partition.label.size() != state.blocks.size()) {
      throw DimensionMismatch("B partition does not match the setting count");
    }
    for (std::size_t i = 0; i < state.blocks.size(); ++i) {
      p[partition.label[i]] += state.weights[i] * state.blocks[i].squaredNorm();
    }
  } else {
    if (partition.label.size() != state.a_dim()) {
      throw DimensionMismatch("A partition does not match the A register size");
    }
    for (std::size_t i = 0; i < state.blocks.size(); ++i) {
      for (std::size_t a = 0; a < state.a_dim(); ++a) {
        for (std::size_t v = 0; v < 2; ++v) {
          p[partition.label[a]] +=
              state.weights[i] * std::norm(state.blocks[i](static_cast<Eigen::Index>(a * 2 + v)));
        }
      }
    }
  }
  return p;
}

MeasureResult measure_partition(const BlockState& state, Register reg, const Partition& partition,
                                std::optional<std::size_t> forced, Rng* rng) {
  std::vector<double> p = outcome_probabilities(state, reg, partition);
  MeasureResult r;
  if (forced) {
    if (*forced >= p.size()) throw DimensionMismatch("forced outcome is not a class index");
    if (p[*forced] <= kCheckTol) {
      throw ZeroProbabilityOutcome("forced outcome has probability " + std::to_string(p[*forced]));
    }
    r.outcome = *forced;
  } else {
    Rng fallback(0);
    double u = (rng ? rng : &fallback)->uniform();
    double acc = 0.0;
    r.outcome = p.size();
    std::size_t last = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] <= 0.0) continue;
      last = k;
      acc += p[k];
      if (u < acc) {
        r.outcome = k;
        break;
      }
    }
    if (r.outcome == p.size()) r.outcome = last;
  }
  r.probability = p[r.outcome];
  r.state = state;
  BlockState& s = r.state;
  if (reg == Register::B) {
    std::vector<bool> keep(s.blocks.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = partition.label[i] == r.outcome;
    project_settings(s, keep);
  } else {
    double total = 0.0;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
      for (std::size_t a = 0; a < s.a_dim(); ++a) {
        if (partition.label[a] == r.outcome) continue;
        s.blocks[i](static_cast<Eigen::Index>(a * 2)) = 0.0;
        s.blocks[i](static_cast<Eigen::Index>(a * 2 + 1)) = 0.0;
      }
      const double n2 = s.blocks[i].squaredNorm();
      s.weights[i] *= n2;
      if (n2 > 0.0) s.blocks[i] /= std::sqrt(n2);
      total += s.weights[i];
    }
    for (double& w : s.weights) w /= total;
  }
  return r;
}

namespace {

std::vector<bool> mapped_class(const Partition& partition, std::size_t outcome,
                               const std::vector<std::size_t>& pi) {
  std::vector<bool> keep(pi.size(), false);
  for (std::size_t m : partition.classes.at(outcome)) keep[pi[m]] = true;
  return keep;
}

}  // namespace

BlockState propagate_projection(const BlockState& state_before, const Circuit& circuit,
                                const Partition& partition, std::size_t outcome,
                                Direction direction) {
  const OracleProblem& problem = *state_before.problem;
  if (partition.label.size() != problem.size()) {
    throw DimensionMismatch("projection must be a partition of the settings");
  }
  if (outcome >= partition.num_classes()) throw DimensionMismatch("outcome is not a class index");
  const std::vector<std::size_t> pi = setting_permutation(problem, circuit);
  BlockState result;
  BlockState other;
  if (direction == Direction::forward) {
    result = apply(measure_partition(state_before, Register::B, partition, outcome).state, circuit);
    other = apply(state_before, circuit);
    project_settings(other, mapped_class(partition, outcome, pi));
  } else {
    BlockState out = apply(state_before, circuit);
    result = apply(measure_partition(out, Register::B, partition, outcome).state, circuit.inverse());
    std::vector<std::size_t> back(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) back[pi[i]] = i;
    other = state_before;
    project_settings(other, mapped_class(partition, outcome, back));
  }
  const double d = state_distance(result, other);
  if (d > kCheckTol) {
    throw Error("projection does not commute with the circuit (distance " + std::to_string(d) + ")");
  }
  return result;
}

double entropy_of(const BlockState& state, Register reg) {
  if (reg == Register::B) return shannon_of_weights(state.weights);
  const auto da = static_cast<Eigen::Index>(state.a_dim());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da, da);
  for (std::size_t i = 0; i < state.blocks.size(); ++i) {
    if (state.weights[i] <= 0.0) continue;
    // Column a holds the V amplitudes of basis state a.
    Eigen::Map<const Eigen::MatrixXcd> x(state.blocks[i].data(), 2, da);
    rho.noalias() += state.weights[i] * (x.transpose() * x.conjugate());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double l = es.eigenvalues()(k);
    if (l > 1e-15) h -= l * std::log2(l);
  }
  return h;
}

double shannon_of_weights(const std::vector<double>& w) {
  double h = 0.0;
  for (double x : w) {
    if (x > 1e-15) h -= x * std::log2(x);
  }
  return h;
}

double state_distance(const BlockState& x, const BlockState& y) {
  if (x.blocks.size() != y.blocks.size() || x.dim() != y.dim()) {
    throw DimensionMismatch("states have different shapes");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    d = std::max(d, std::abs(x.weights[i] - y.weights[i]));
    const cplx ov = y.blocks[i].dot(x.blocks[i]);
    const cplx phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx(1.0, 0.0);
    d = std::max(d, (x.blocks[i] - phase * y.blocks[i]).cwiseAbs().maxCoeff());
  }
  return d;
}

namespace {

std::string fixed15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace

std::string dump_state(const BlockState& state) {
  std::ostringstream out;
  const OracleProblem& problem = *state.problem;
  for (std::size_t i = 0; i < state.blocks.size(); ++i) {
    if (state.weights[i] <= 0.0) continue;
    for (std::size_t a = 0; a < state.a_dim(); ++a) {
      for (int v = 0; v < 2; ++v) {
        const cplx z = state.blocks[i](static_cast<Eigen::Index>(a * 2 + static_cast<std::size_t>(v)));
        if (std::abs(z) < 1e-14) continue;
        out << problem.settings[i].b << '|' << to_bits(a, state.a_bits) << '|' << v << ' '
            << fixed15(z.real()) << ' ' << fixed15(z.imag()) << ' ' << fixed15(state.weights[i])
            << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace retro
