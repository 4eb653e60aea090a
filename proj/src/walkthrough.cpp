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

#include "retro/walkthrough.hpp"

#include <cmath>
#include <numbers>

#include "retro/bitstring.hpp"
#include "retro/errors.hpp"
#include "retro/feedback.hpp"

namespace retro {

namespace {
constexpr double kTol = 1e-12;
}

BlockState reference_state(const OracleProblem& problem, const std::vector<RefBlock>& blocks) {
  BlockState s = input_state(problem);
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    s.blocks[i].setZero();
    s.weights[i] = 0.0;
  }
  for (const RefBlock& r : blocks) {
    const std::size_t i = problem.index_of(r.b);
    const double amp = r.sign / std::numbers::sqrt2;
    s.blocks[i](static_cast<Eigen::Index>(r.a * 2)) = amp;
    s.blocks[i](static_cast<Eigen::Index>(r.a * 2 + 1)) = -amp;
    s.weights[i] = 1.0 / static_cast<double>(blocks.size());
  }
  return s;
}

Circuit deutsch_with_setter(const OracleProblem& problem) {
  return {"deutsch+U_B", {Gate::complement(problem), Gate::h(), Gate::oracle(), Gate::h()}};
}

namespace {

StateCheck compare(std::string label, std::string description, const BlockState& got,
                   const BlockState& want) {
  StateCheck c;
  c.label = std::move(label);
  c.description = std::move(description);
  c.distance = state_distance(got, want);
  c.pass = c.distance <= kTol;
  c.dump = dump_state(got);
  return c;
}

StateCheck scalar(std::string label, std::string description, double got, double want,
                  const BlockState& state) {
  StateCheck c;
  c.label = std::move(label);
  c.description = std::move(description);
  c.distance = std::abs(got - want);
  c.pass = c.distance <= kTol;
  c.dump = dump_state(state);
  return c;
}

// Closed-form Deutsch output block: (-1)^f(0) |f(0) xor f(1)>.
RefBlock deutsch_out(const std::string& x) {
  const int f0 = x[0] - '0';
  const int f1 = x[1] - '0';
  return {x, static_cast<std::uint64_t>(f0 ^ f1), f0 ? -1.0 : 1.0};
}

std::vector<RefBlock> deutsch_blocks(const OracleProblem& p, bool output, auto keep) {
  std::vector<RefBlock> out;
  for (const Setting& s : p.settings) {
    if (!keep(s.b)) continue;
    out.push_back(output ? deutsch_out(s.b) : RefBlock{s.b, 0, 1.0});
  }
  return out;
}

std::vector<StateCheck> deutsch_checks(const std::string& b) {
  const OracleProblem p = gen_deutsch();
  const std::size_t bi = p.index_of(b);
  const std::string r = complement_bits(b);
  const std::size_t ri = p.index_of(r);
  const Circuit full = deutsch_with_setter(p);
  const Circuit setter{"U_B", {full.gates[0]}};
  const Circuit alg = builtin_circuit("deutsch");
  const Partition all_b = discrete_partition(p.size());
  const Partition a_vals = discrete_partition(2);
  const Partition left = bit_partition(p, {0});
  const Partition right = bit_partition(p, {1});
  const std::uint64_t sol = from_bits(p.settings[bi].solution);
  auto any = [](const std::string&) { return true; };

  std::vector<StateCheck> out;
  const BlockState in = input_state(p);
  out.push_back(compare("(in)", "uniform mixture, A=|0>, V minus", in,
                        reference_state(p, deutsch_blocks(p, false, any))));
  out.push_back(compare("(ina)", "U_B leaves the input unchanged up to phase labels",
                        apply(in, setter), reference_state(p, deutsch_blocks(p, false, any))));
  out.push_back(scalar("(ina) E_B", "setting entropy of the input is 2 bits",
                       entropy_of(in, Register::B), 2.0, in));

  const BlockState pro = measure_partition(in, Register::B, all_b, all_b.label[ri]).state;
  out.push_back(compare("(pro)", "Bob reads " + r, pro, reference_state(p, {{r, 0, 1.0}})));
  const BlockState inbob = apply(pro, setter);
  out.push_back(compare("(inbob)", "U_B turns " + r + " into " + b, inbob,
                        reference_state(p, {{b, 0, 1.0}})));
  const BlockState outbob = apply(inbob, alg);
  out.push_back(compare("(outbob)", "output to Bob", outbob, reference_state(p, {deutsch_out(b)})));

  const BlockState outa = apply(in, full);
  out.push_back(compare("(outa)", "output to Alice", outa,
                        reference_state(p, deutsch_blocks(p, true, any))));
  out.push_back(scalar("(reduced) E_A", "entropy of A in the output is 1 bit",
                       entropy_of(outa, Register::A), 1.0, outa));

  const BlockState alice = measure_partition(outa, Register::A, a_vals, sol).state;
  out.push_back(compare("(alice)", "Alice reads A=" + std::to_string(sol), alice,
                        reference_state(p, deutsch_blocks(p, true, [&](const std::string& x) {
                                          return p.settings[p.index_of(x)].solution ==
                                                 p.settings[bi].solution;
                                        }))));
  const BlockState outb = measure_partition(alice, Register::B, all_b, all_b.label[bi]).state;
  out.push_back(compare("(outb)", "retarded projection of Bob's reading", outb,
                        reference_state(p, {deutsch_out(b)})));
  const BlockState swapped = measure_partition(
      measure_partition(outa, Register::B, all_b, all_b.label[bi]).state, Register::A, a_vals, sol)
                                 .state;
  out.push_back(compare("(outb) order", "projections applied in the other order", swapped, outb));

  const BlockState co = measure_partition(outa, Register::B, right, right.label[bi]).state;
  out.push_back(compare("(co)", "right bit of B reads " + b.substr(1), co,
                        reference_state(p, deutsch_blocks(p, true, [&](const std::string& x) {
                                          return x[1] == b[1];
                                        }))));
  const BlockState mo = propagate_projection(in, full, right, right.label[bi], Direction::backward);
  out.push_back(compare("(mo)", "right-bit projection carried back to the initial state", mo,
                        reference_state(p, deutsch_blocks(p, false, [&](const std::string& x) {
                                          return x[1] == r[1];
                                        }))));
  const BlockState adv =
      propagate_projection(apply(in, setter), alg, right, right.label[bi], Direction::backward);
  out.push_back(compare("(adv)", "right-bit projection carried back to the input", adv,
                        reference_state(p, deutsch_blocks(p, false, [&](const std::string& x) {
                                          return x[1] == b[1];
                                        }))));
  const BlockState dino = measure_partition(mo, Register::B, left, left.label[ri]).state;
  out.push_back(compare("(dino)", "left bit of B reads " + r.substr(0, 1), dino,
                        reference_state(p, {{r, 0, 1.0}})));
  out.push_back(compare("(dino)->(outb)", "evolving (dino) gives (outb)", apply(dino, full),
                        reference_state(p, {deutsch_out(b)})));
  return out;
}

std::vector<StateCheck> grover_checks() {
  const OracleProblem p = gen_grover(2);
  const BlockState in = input_state(p);
  std::vector<RefBlock> ing;
  std::vector<RefBlock> outg;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ing.push_back({p.settings[i].b, 0, 1.0});
    outg.push_back({p.settings[i].b, i, 1.0});
  }
  std::vector<StateCheck> out;
  out.push_back(compare("(ing)", "uniform mixture, A=|00>", in, reference_state(p, ing)));
  const BlockState fin = apply(in, builtin_circuit("grover2"));
  out.push_back(compare("(outg)", "each block b carries A=|b>", fin, reference_state(p, outg)));

  // The displayed history at b=01: 00 -H-> 11 -U_f-> 11 -INV-> 01, V=0.
  const std::size_t b = p.index_of("01");
  const Circuit c = builtin_circuit("grover2");
  const std::vector<KnowledgeInstance> inst =
      all_instances(p, "01", FeedbackConfig{}, default_strategy(p));
  StateCheck hig;
  hig.label = "(hig)";
  hig.description = "history querying a=11 at b=01, justified by {01,11}";
  for (const History& h : enumerate_histories(p, c, b)) {
    if (h.states.front().v != 0 || h.states[1].a != 3 || h.states[3].a != 1 ||
        h.states[3].v != 0) {
      continue;
    }
    for (const KnowledgeInstance& k : classify_history(p, h, inst)) {
      if (k.subset == Subset{p.index_of("01"), p.index_of("11")}) hig.pass = true;
    }
  }
  out.push_back(hig);
  return out;
}

std::vector<StateCheck> dj_checks() {
  const OracleProblem p = gen_deutsch_jozsa(2);
  const BlockState fin = apply(input_state(p), builtin_circuit("dj2"));
  std::vector<StateCheck> out;
  // Displayed blocks only; the rest of the state is elided in the display.
  const std::vector<RefBlock> shown = {
      {"0000", 0, 1.0}, {"1111", 0, -1.0}, {"0011", 2, 1.0}, {"1100", 2, -1.0}};
  BlockState got = fin;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool keep = false;
    for (const RefBlock& r : shown) keep = keep || r.b == p.settings[i].b;
    if (!keep) {
      got.blocks[i].setZero();
      got.weights[i] = 0.0;
    } else {
      got.weights[i] = 1.0 / static_cast<double>(shown.size());
    }
  }
  out.push_back(compare("(tredj)", "blocks 0000, 1111 at A=|00>; 0011, 1100 at A=|10>", got,
                        reference_state(p, shown)));
  StateCheck cb;
  cb.label = "(tredj) A=00 iff constant";
  cb.description = "reading A=00 exactly on the constant tables";
  cb.pass = true;
  const Partition a_vals = discrete_partition(4);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BlockState one = apply(single_setting_state(p, i), builtin_circuit("dj2"));
    const double p00 = outcome_probabilities(one, Register::A, a_vals)[0];
    const double want = p.settings[i].verdict == "0" ? 1.0 : 0.0;
    cb.distance = std::max(cb.distance, std::abs(p00 - want));
  }
  cb.pass = cb.distance <= kTol;
  cb.dump = dump_state(fin);
  out.push_back(cb);
  return out;
}

std::vector<StateCheck> simon_checks() {
  const OracleProblem p = gen_simon(2);
  const Partition a_vals = discrete_partition(4);
  std::vector<StateCheck> out;
  std::vector<RefBlock> want;
  for (const Setting& s : p.settings) want.push_back({s.b, from_bits(s.solution), 1.0});
  const BlockState fin = apply(input_state(p), builtin_circuit("simon2"));
  out.push_back(compare("(out)_BA", "each block b carries A=|h(b)>", fin, reference_state(p, want)));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BlockState one = apply(single_setting_state(p, i), builtin_circuit("simon2"));
    const double ph = outcome_probabilities(one, Register::A, a_vals)[from_bits(p.settings[i].solution)];
    out.push_back(scalar("h(" + p.settings[i].b + ")=" + p.settings[i].solution,
                         "A reads h(b) with probability 1", ph, 1.0, one));
  }
  return out;
}

}  // namespace

std::vector<StateCheck> check_states(std::string_view circuit,
                                     const std::optional<std::string>& setting) {
  if (circuit == "deutsch") {
    const std::string b = setting.value_or("01");
    gen_deutsch().index_of(b);
    return deutsch_checks(b);
  }
  if (circuit == "grover2") return grover_checks();
  if (circuit == "dj2") return dj_checks();
  if (circuit == "simon2") return simon_checks();
  throw UnknownCircuit("unknown circuit '" + std::string(circuit) + "'");
}

}  // namespace retro
