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

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "retro/errors.hpp"
#include "retro/simulator.hpp"

namespace retro {

namespace {

struct Walker {
  const OracleProblem& problem;
  const Circuit& circuit;
  std::vector<std::vector<std::size_t>> ub_maps;  // per gate, empty unless U_B
  std::size_t da;
  std::vector<History>& out;

  void step(History& h, std::size_t g) {
    if (g == circuit.gates.size()) {
      out.push_back(h);
      return;
    }
    const Gate& gate = circuit.gates[g];
    const BasisState cur = h.states.back();
    auto go = [&](BasisState next, cplx amp) {
      h.states.push_back(next);
      h.steps.push_back(amp);
      const cplx saved = h.amplitude;
      h.amplitude *= amp;
      step(h, g + 1);
      h.amplitude = saved;
      h.steps.pop_back();
      h.states.pop_back();
    };
    switch (gate.kind) {
      case GateKind::H_A: {
        const double s = 1.0 / std::sqrt(static_cast<double>(da));
        for (std::uint64_t a = 0; a < da; ++a) {
          const bool odd = std::popcount(cur.a & a) & 1;
          go({cur.b, a, cur.v}, cplx(odd ? -s : s, 0.0));
        }
        break;
      }
      case GateKind::U_f: {
        const int fv = static_cast<int>(problem.settings[cur.b].f(cur.a) & 1u);
        const std::size_t before = h.query_setting;
        const bool first = h.queries.empty();
        h.queries.push_back(cur.a);
        if (first) h.query_setting = cur.b;
        go({cur.b, cur.a, cur.v ^ fv}, cplx(1.0, 0.0));
        h.queries.pop_back();
        h.query_setting = before;
        break;
      }
      case GateKind::INV_A: {
        const double m = 2.0 / static_cast<double>(da);
        for (std::uint64_t a = 0; a < da; ++a) {
          const double amp = m - (a == cur.a ? 1.0 : 0.0);
          if (amp != 0.0) go({cur.b, a, cur.v}, cplx(amp, 0.0));
        }
        break;
      }
      case GateKind::PERM_A:
        if (gate.perm.size() != da) throw DimensionMismatch("PERM_A does not match register A");
        go({cur.b, gate.perm[cur.a], cur.v}, cplx(1.0, 0.0));
        break;
      case GateKind::U_B:
        go({ub_maps[g][cur.b], cur.a, cur.v}, cplx(1.0, 0.0));
        break;
    }
  }
};

}  // namespace

std::vector<History> enumerate_histories(const OracleProblem& problem, const Circuit& circuit,
                                         std::size_t b) {
  if (b >= problem.size()) throw UnknownSetting("setting index out of range");
  if (problem.out_bits != 1) throw DimensionMismatch("register V holds one qubit");
  std::vector<History> out;
  Walker w{problem, circuit, {}, problem.num_args(), out};
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::U_B) {
      w.ub_maps.push_back(setting_permutation(problem, Circuit{"", {g}}));
    } else {
      w.ub_maps.emplace_back();
    }
  }
  for (int v = 0; v < 2; ++v) {
    History h;
    h.states.push_back({b, 0, v});
    h.initial = cplx((v == 0 ? 1.0 : -1.0) / std::numbers::sqrt2, 0.0);
    h.amplitude = h.initial;
    h.query_setting = b;
    w.step(h, 0);
  }
  return out;
}

std::map<std::tuple<std::size_t, std::uint64_t, int>, cplx> sum_histories(
    const std::vector<History>& histories) {
  std::map<std::tuple<std::size_t, std::uint64_t, int>, cplx> sum;
  for (const History& h : histories) {
    const BasisState& e = h.states.back();
    sum[{e.b, e.a, e.v}] += h.amplitude;
  }
  return sum;
}

std::vector<KnowledgeInstance> classify_history(const OracleProblem& problem,
                                                const History& history,
                                                const std::vector<KnowledgeInstance>& instances) {
  std::vector<KnowledgeInstance> out;
  for (const KnowledgeInstance& k : instances) {
    if (k.b != history.query_setting) continue;
    std::map<std::vector<std::uint32_t>, std::string_view> seen;
    bool ok = true;
    for (std::size_t m : k.subset) {
      std::vector<std::uint32_t> key;
      for (std::uint64_t a : history.queries) key.push_back(problem.settings[m].f(a));
      auto [it, fresh] = seen.emplace(key, problem.settings[m].solution);
      if (!fresh && it->second != problem.settings[m].solution) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

std::vector<KnowledgeInstance> classify_history(const OracleProblem& problem,
                                                const History& history,
                                                const FeedbackConfig& config, Strategy strategy) {
  const std::string& b = problem.settings.at(history.query_setting).b;
  return classify_history(problem, history, all_instances(problem, b, config, strategy));
}

}  // namespace retro
