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

#include "retro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "retro/bitstring.hpp"
#include "retro/errors.hpp"
#include "retro/feedback.hpp"
#include "retro/problems.hpp"
#include "retro/query_oracle.hpp"
#include "retro/report.hpp"
#include "retro/retro_model.hpp"
#include "retro/simulator.hpp"
#include "retro/walkthrough.hpp"

#ifndef RETRO_VERSION
#define RETRO_VERSION "0.0.0"
#endif

namespace retro {

namespace {

constexpr std::size_t kPairRowsPerSetting = 100;

struct Options {
  std::string problem;
  std::string file;
  int n = 2;
  std::string setting;
  double r = 0.5;
  double r_tolerance = 0.0;
  std::string apply_no = "auto";
  std::string strategy;
  std::string policy = "minimax";
  std::string format = "md";
  std::uint64_t seed = 0;
  bool strict = false;
  bool check_states = false;
  bool require_all = false;
  std::string out;
  std::string circuit;
  std::vector<std::string> measures;
  int n_min = 2;
  int n_max = 2;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "retro";
  for (const std::string& a : args) s += " " + a;
  return s;
}

std::string fmt(double v) { return format_sig12(v); }

std::vector<std::string> base_footnotes() {
  return {
      "Entropies are base-2 Shannon entropies under a uniform prior over the settings.",
      "Delta E_solution of an instance: entropy of s(b) over all settings minus its entropy over "
      "the instance subset.",
      "Delta H_setting of an instance: log2 c - log2 |subset|, with c the number of settings.",
      "R of an instance: 1 - log2 |subset| / log2 c.",
      "Pair conditions in verdict order: C-nr (both conditional outcome entropies positive, a "
      "singleton class at b fails, and for unstructured setting sets the two outcomes are "
      "independent), C-I (classes of b meet only in b), C-eq (classes of b have equal size), C-no "
      "(the coarse verdict varies on both classes; DJ verdict is constant/balanced).",
      "Aggregation: minimax takes, per setting, the best valid pair's larger instance depth and "
      "then the maximum over settings; maximax takes the largest depth over all instances.",
      "Grover optimal count K = ceil(pi / (4 asin 2^(-n/2)) - 1/2); known bits for R are "
      "floor(R n).",
  };
}

OracleProblem resolve_problem(const Options& o) {
  if (!o.file.empty() && !o.problem.empty()) {
    throw FormatError("give either --problem or --file, not both");
  }
  if (!o.file.empty()) return load_problem(o.file);
  if (o.problem.empty()) throw FormatError("one of --problem or --file is required");
  return gen_builtin(o.problem, o.n);
}

FeedbackConfig make_config(const Options& o) {
  FeedbackConfig c;
  c.apply_no = parse_apply_no(o.apply_no);
  c.require_all_settings = o.require_all;
  c.r_tolerance = o.r_tolerance;
  return c;
}

Strategy make_strategy(const Options& o, const OracleProblem& p) {
  return o.strategy.empty() ? default_strategy(p) : parse_strategy(o.strategy);
}

void echo_common(Report& rep, const std::vector<std::string>& args, const Options& o) {
  rep.echo.push_back({"command", join_args(args)});
  rep.echo.push_back({"version", RETRO_VERSION});
  rep.echo.push_back({"seed", std::to_string(o.seed)});
  rep.echo.push_back({"format", o.format});
}

void echo_problem(Report& rep, const OracleProblem& p, const FeedbackConfig& c, Strategy s,
                  Policy pol) {
  rep.echo.push_back({"problem", p.name});
  rep.echo.push_back({"arg_bits", std::to_string(p.arg_bits)});
  rep.echo.push_back({"out_bits", std::to_string(p.out_bits)});
  rep.echo.push_back({"settings", std::to_string(p.size())});
  rep.echo.push_back({"structured", p.structured ? "true" : "false"});
  rep.echo.push_back({"strategy", std::string(to_string(s))});
  rep.echo.push_back({"policy", std::string(to_string(pol))});
  rep.echo.push_back({"apply_no", std::string(to_string(c.apply_no))});
  rep.echo.push_back({"C-no enforced", c.condition_no_applies(p) ? "true" : "false"});
  rep.echo.push_back({"require_all_settings", c.require_all_settings ? "true" : "false"});
  rep.echo.push_back({"r_target", c.r_target ? fmt(*c.r_target) : "none"});
  rep.echo.push_back({"r_tolerance", fmt(c.r_tolerance)});
}

std::string histogram_text(const std::map<Condition, std::size_t>& h) {
  std::string s;
  for (const auto& [cond, count] : h) {
    if (cond == Condition::valid) continue;
    if (!s.empty()) s += ", ";
    s += std::string(to_string(cond)) + ": " + std::to_string(count);
  }
  return s;
}

std::string partition_cell(const OracleProblem& p, const Partition& part) {
  std::string s = format_partition(p, part);
  if (!part.descriptor.empty()) s = part.descriptor + " " + s;
  return s;
}

Table settings_table(const OracleProblem& p, const Prediction& pred) {
  Table t{"settings", {"setting", "valid pairs", "instances", "aggregate depth", "best pair", "status"},
          {}, {}};
  for (const SettingPrediction& sp : pred.settings) {
    std::string best = sp.best_i.empty() ? "-" : format_subset(p, sp.best_i) + " + " +
                                                     format_subset(p, sp.best_j);
    std::string status = sp.aggregate >= 0 ? "ok" : "no valid sharing (" + histogram_text(sp.histogram) + ")";
    t.add({p.settings[sp.b].b, sp.pair_count, sp.instances.size(),
           sp.aggregate >= 0 ? Cell(sp.aggregate) : Cell("-"), best, status});
  }
  return t;
}

Table prediction_table(const OracleProblem& p, const Prediction& pred) {
  Table t{"prediction", {"quantity", "value"}, {}, {}};
  if (pred.feasible()) {
    t.add({"predicted queries", pred.predicted_queries});
  } else {
    std::string missing;
    for (const SettingPrediction& sp : pred.settings) {
      if (sp.aggregate >= 0) continue;
      if (!missing.empty()) missing += ",";
      missing += p.settings[sp.b].b;
    }
    t.add({"predicted queries", "none: no valid sharing at " + missing});
  }
  return t;
}

void check_strict(const Options& o, const OracleProblem& p, const Prediction& pred) {
  if (!o.strict || pred.feasible()) return;
  for (const SettingPrediction& sp : pred.settings) {
    if (sp.aggregate < 0) {
      throw NoValidSharing("no valid sharing at setting " + p.settings[sp.b].b + " (" +
                           histogram_text(sp.histogram) + ")");
    }
  }
}

Report cmd_analyze(const std::vector<std::string>& args, const Options& o) {
  const OracleProblem p = resolve_problem(o);
  const FeedbackConfig cfg = make_config(o);
  const Strategy strat = make_strategy(o, p);
  const Policy pol = parse_policy(o.policy);
  std::vector<std::size_t> chosen;
  if (!o.setting.empty()) {
    chosen.push_back(p.index_of(o.setting));
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) chosen.push_back(i);
  }

  const Prediction pred = evaluate_prediction(p, cfg, strat, pol);
  check_strict(o, p, pred);

  Report rep;
  rep.title = "analyze " + p.name;
  echo_common(rep, args, o);
  rep.echo.push_back({"setting", o.setting.empty() ? "all" : o.setting});
  echo_problem(rep, p, cfg, strat, pol);

  FeedbackEngine engine(p, cfg, strat);
  rep.echo.push_back({"partitions", std::to_string(engine.partitions().size())});
  Table pairs{"pairs", {"setting", "pair", "p_i", "p_j", "class_i(b)", "class_j(b)"}, {}, {}};
  Table inst{"instances",
             {"setting", "subset", "size", "R", "dE_solution", "dH_setting", "depth", "witness"},
             {}, {}};
  std::size_t omitted = 0;
  for (std::size_t b : chosen) {
    const std::vector<FeedbackPair> fps = engine.find_pairs(b);
    for (std::size_t k = 0; k < fps.size(); ++k) {
      if (k >= kPairRowsPerSetting) {
        omitted += fps.size() - k;
        break;
      }
      pairs.add({p.settings[b].b, k + 1, partition_cell(p, *fps[k].p_i),
                 partition_cell(p, *fps[k].p_j), format_subset(p, fps[k].p_i->class_at(b)),
                 format_subset(p, fps[k].p_j->class_at(b))});
    }
    for (const KnowledgeInstance& k : all_instances(p, fps, b)) {
      const QueryBound qb = minimax_depth(p, k.subset);
      inst.add({p.settings[b].b, format_subset(p, k.subset), k.subset.size(), k.r_value,
                k.delta_e_solution, k.delta_h_setting, qb.depth, format_tree(p, *qb.tree)});
    }
  }
  if (omitted > 0) {
    pairs.note = std::to_string(omitted) + " further pairs omitted (first " +
                 std::to_string(kPairRowsPerSetting) + " per setting shown).";
  }
  rep.add_table(std::move(pairs));
  rep.add_table(std::move(inst));
  rep.add_table(settings_table(p, pred));
  rep.add_table(prediction_table(p, pred));
  rep.footnotes = base_footnotes();
  return rep;
}

Report cmd_predict(const std::vector<std::string>& args, const Options& o) {
  if (!(o.r > 0.0 && o.r <= 1.0)) throw RangeError("--r must lie in (0, 1]");
  const OracleProblem p = resolve_problem(o);
  FeedbackConfig cfg = make_config(o);
  const Strategy strat = make_strategy(o, p);
  const Policy pol = parse_policy(o.policy);
  const bool half = std::abs(o.r - 0.5) < 1e-12;
  const bool full = o.r == 1.0;
  if (!half && !full) cfg.r_target = o.r;

  Report rep;
  rep.title = "predict " + p.name;
  echo_common(rep, args, o);
  rep.echo.push_back({"r", fmt(o.r)});
  echo_problem(rep, p, cfg, strat, pol);

  if (full) {
    Table t{"prediction", {"quantity", "value"}, {}, {}};
    t.add({"predicted queries", 0});
    t.note = "R = 1: the setting is known in advance, no pair search is run.";
    rep.add_table(std::move(t));
  } else {
    const Prediction pred = evaluate_prediction(p, cfg, strat, pol);
    check_strict(o, p, pred);
    rep.add_table(settings_table(p, pred));
    rep.add_table(prediction_table(p, pred));
  }
  if (p.name == "grover" && o.file.empty()) {
    Table g{"grover closed forms", {"quantity", "value"}, {}, {}};
    const int n = p.arg_bits;
    g.add({"2^(n - floor(R n)) - 1", grover_queries_for_r(n, o.r)});
    const std::uint64_t k = grover_optimal_k(n);
    g.add({"optimal K", k});
    g.add({"R inferred from optimal K", infer_r(n, k).r_value});
    g.add({"(pi/4) 2^(n/2)", M_PI / 4.0 * std::exp2(n / 2.0)});
    rep.add_table(std::move(g));
  }
  rep.footnotes = base_footnotes();
  rep.footnotes.push_back(
      "R = 1/2 is the equal-sharing case encoded by C-eq, so no R filter is applied; other R in "
      "(0,1) keep instances with |R - r| <= r_tolerance.");
  return rep;
}

Report cmd_infer_r(const std::vector<std::string>& args, const Options& o) {
  Report rep;
  rep.title = "infer-r";
  echo_common(rep, args, o);
  rep.echo.push_back({"n_min", std::to_string(o.n_min)});
  rep.echo.push_back({"n_max", std::to_string(o.n_max)});
  Table t{"R scan", {"n", "K", "R", "2^(n/2)-1", "(pi/4) 2^(n/2)"}, {}, {}};
  for (const ScanRow& row : grover_r_scan(o.n_min, o.n_max)) {
    t.add({row.n, row.k_opt, row.r, row.half_bits_count, row.quarter_pi});
  }
  rep.add_table(std::move(t));
  rep.footnotes = base_footnotes();
  rep.footnotes.push_back("R = 1 - log2(K + 1) / n inverts K = 2^((1 - R) n) - 1.");
  return rep;
}

struct MeasureSpec {
  Register reg = Register::A;
  std::vector<int> bits;  // B only; empty means the full register
  std::string value;      // forced value, empty to sample
};

MeasureSpec parse_measure(const std::string& spec) {
  MeasureSpec m;
  std::string head = spec;
  const auto eq = spec.find('=');
  if (eq != std::string::npos) {
    head = spec.substr(0, eq);
    m.value = spec.substr(eq + 1);
    if (m.value.empty()) throw FormatError("empty forced value in --measure " + spec);
  }
  if (head == "A") return m;
  if (head.empty() || head[0] != 'B') throw FormatError("--measure must start with A or B: " + spec);
  m.reg = Register::B;
  if (head.size() == 1) return m;
  if (head[1] != '@') throw FormatError("bad --measure spec " + spec);
  std::stringstream ss(head.substr(2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("bad bit position in --measure " + spec);
    }
    m.bits.push_back(std::stoi(item));
  }
  return m;
}

std::string a_readout(const BlockState& s) {
  const Partition a_vals = discrete_partition(s.a_dim());
  const std::vector<double> pr = outcome_probabilities(s, Register::A, a_vals);
  std::string out;
  for (std::size_t a = 0; a < pr.size(); ++a) {
    if (pr[a] < 1e-14) continue;
    if (!out.empty()) out += " ";
    out += to_bits(a, s.a_bits) + ":" + fmt(pr[a]);
  }
  return out;
}

Report cmd_simulate(const std::vector<std::string>& args, const Options& o, bool& failed) {
  const Circuit c = builtin_circuit(o.circuit);
  const OracleProblem p = builtin_circuit_problem(o.circuit);
  const std::optional<std::string> setting =
      o.setting.empty() ? std::nullopt : std::optional<std::string>(o.setting);
  if (setting) p.index_of(*setting);
  Rng rng(o.seed);

  Report rep;
  rep.title = "simulate " + c.name;
  echo_common(rep, args, o);
  rep.echo.push_back({"circuit", c.name});
  rep.echo.push_back({"problem", p.name});
  rep.echo.push_back({"setting", setting.value_or("all")});
  std::string gates;
  for (const Gate& g : c.gates) gates += (gates.empty() ? "" : " ") + gate_name(g);
  rep.echo.push_back({"gates (in order)", gates});
  rep.echo.push_back({"check_states", o.check_states ? "true" : "false"});

  const BlockState in = setting ? single_setting_state(p, p.index_of(*setting)) : input_state(p);
  const BlockState fin = apply(in, c);
  rep.add_text("input state", dump_state(in));
  rep.add_text("output state", dump_state(fin));

  Table ent{"entropies", {"state", "E_A", "E_B"}, {}, {}};
  ent.add({"input", entropy_of(in, Register::A), entropy_of(in, Register::B)});
  ent.add({"output", entropy_of(fin, Register::A), entropy_of(fin, Register::B)});
  rep.add_table(std::move(ent));

  Table read{"readout", {"setting", "s(b)", "A distribution", "deterministic", "A = s(b)"}, {}, {}};
  const Partition a_vals = discrete_partition(in.a_dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (setting && p.settings[i].b != *setting) continue;
    const BlockState one = apply(single_setting_state(p, i), c);
    const std::vector<double> pr = outcome_probabilities(one, Register::A, a_vals);
    const auto top = static_cast<std::size_t>(std::max_element(pr.begin(), pr.end()) - pr.begin());
    const bool det = std::abs(pr[top] - 1.0) <= 1e-12;
    const std::string& sol = p.settings[i].solution;
    std::string match = "n/a";
    if (static_cast<int>(sol.size()) == in.a_bits) {
      match = det && to_bits(top, in.a_bits) == sol ? "yes" : "no";
    }
    read.add({p.settings[i].b, sol, a_readout(one), det ? "yes" : "no", match});
  }
  rep.add_table(std::move(read));

  if (!o.measures.empty()) {
    Table meas{"measurements", {"step", "spec", "outcome", "probability"}, {}, {}};
    BlockState cur = fin;
    for (std::size_t k = 0; k < o.measures.size(); ++k) {
      const MeasureSpec m = parse_measure(o.measures[k]);
      Partition part = m.reg == Register::A
                           ? discrete_partition(cur.a_dim())
                           : (m.bits.empty() ? discrete_partition(p.size()) : bit_partition(p, m.bits));
      std::optional<std::size_t> forced;
      if (!m.value.empty()) {
        if (m.reg == Register::A) {
          if (static_cast<int>(m.value.size()) != cur.a_bits || !is_bit_string(m.value)) {
            throw FormatError("forced A value must be " + std::to_string(cur.a_bits) + " bits");
          }
          forced = from_bits(m.value);
        } else {
          forced = part.label[p.index_of(m.value)];
        }
      }
      const MeasureResult res = measure_partition(cur, m.reg, part, forced, &rng);
      std::string outcome;
      if (m.reg == Register::A) {
        outcome = "A=" + to_bits(res.outcome, cur.a_bits);
      } else {
        outcome = format_subset(p, part.classes[res.outcome]);
      }
      meas.add({k + 1, o.measures[k], outcome, res.probability});
      cur = res.state;
      rep.add_text("after measurement " + std::to_string(k + 1), dump_state(cur));
    }
    rep.add_table(std::move(meas));
  }

  if (o.check_states) {
    Table chk{"state checks", {"label", "description", "result", "max deviation"}, {}, {}};
    for (const StateCheck& sc : check_states(o.circuit, setting)) {
      chk.add({sc.label, sc.description, sc.pass ? "PASS" : "FAIL", sc.distance});
      failed = failed || !sc.pass;
    }
    chk.note = "States are compared block by block up to each block's global phase, tolerance 1e-12.";
    rep.add_table(std::move(chk));
  }
  rep.footnotes = base_footnotes();
  rep.footnotes.push_back(
      "Blocks are an incoherent mixture over settings; dump lines read b|a|v re im weight.");
  return rep;
}

std::string basis_text(const OracleProblem& p, const BasisState& s, int a_bits) {
  return p.settings[s.b].b + "|" + to_bits(s.a, a_bits) + "|" + std::to_string(s.v);
}

Report cmd_histories(const std::vector<std::string>& args, const Options& o) {
  const Circuit c = builtin_circuit(o.circuit);
  const OracleProblem p = builtin_circuit_problem(o.circuit);
  if (o.setting.empty()) throw FormatError("histories needs --setting");
  const std::size_t b = p.index_of(o.setting);
  const FeedbackConfig cfg = make_config(o);
  const Strategy strat = make_strategy(o, p);

  Report rep;
  rep.title = "histories " + c.name;
  echo_common(rep, args, o);
  rep.echo.push_back({"circuit", c.name});
  rep.echo.push_back({"setting", o.setting});
  echo_problem(rep, p, cfg, strat, Policy::minimax);

  const std::vector<History> hs = enumerate_histories(p, c, b);
  const std::vector<KnowledgeInstance> inst = all_instances(p, o.setting, cfg, strat);
  Table t{"histories", {"#", "path", "amplitude", "queries", "justified by"}, {}, {}};
  std::size_t unjustified = 0;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const History& h = hs[k];
    std::string path = basis_text(p, h.states[0], p.arg_bits);
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
      path += " -" + gate_name(c.gates[g]) + "-> " + basis_text(p, h.states[g + 1], p.arg_bits);
    }
    std::string q;
    for (std::uint64_t a : h.queries) q += (q.empty() ? "" : ",") + to_bits(a, p.arg_bits);
    std::string just;
    for (const KnowledgeInstance& ki : classify_history(p, h, inst)) {
      just += (just.empty() ? "" : " ") + format_subset(p, ki.subset);
    }
    if (just.empty()) {
      just = "UNJUSTIFIED";
      ++unjustified;
    }
    t.add({k + 1, path, fmt(h.amplitude.real()) + (h.amplitude.imag() != 0.0 ? " + " + fmt(h.amplitude.imag()) + "i" : ""),
           q.empty() ? "-" : q, just});
  }
  rep.add_table(std::move(t));

  const BlockState sim = apply(single_setting_state(p, b), c);
  double dev = 0.0;
  const auto sums = sum_histories(hs);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t a = 0; a < sim.a_dim(); ++a) {
      for (int v = 0; v < 2; ++v) {
        auto it = sums.find({i, a, v});
        const cplx z = it == sums.end() ? cplx(0.0, 0.0) : it->second;
        dev = std::max(dev, std::abs(z - sim.blocks[i](static_cast<Eigen::Index>(a * 2 + static_cast<std::size_t>(v)))));
      }
    }
  }
  Table s{"summary", {"quantity", "value"}, {}, {}};
  s.add({"histories", hs.size()});
  s.add({"unjustified histories", unjustified});
  s.add({"max |path sum - simulated amplitude|", dev});
  rep.add_table(std::move(s));
  rep.footnotes = base_footnotes();
  rep.footnotes.push_back(
      "A history is justified by an instance when its queried values split the instance into "
      "parts of constant solution.");
  return rep;
}

void add_problem_options(CLI::App* sub, Options& o) {
  sub->add_option("--problem", o.problem, "built-in problem: deutsch, dj, grover, simon")
      ->check(CLI::IsMember({"deutsch", "dj", "grover", "simon"}));
  sub->add_option("--file", o.file, "problem file (JSON)");
  sub->add_option("--n", o.n, "bit count for the built-in families");
}

void add_engine_options(CLI::App* sub, Options& o) {
  sub->add_option("--apply-no", o.apply_no, "condition C-no: auto, on, off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  sub->add_option("--strategy", o.strategy, "partition family: general, bitmask, half-table")
      ->check(CLI::IsMember({"general", "bitmask", "half-table", "half_table"}));
  sub->add_flag("--require-all", o.require_all, "pair conditions must hold at every setting");
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--out", o.out, "write the report here instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Retrocausality model of the quantum speedup", "retro"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RETRO_VERSION);

  CLI::App* analyze = app.add_subcommand("analyze", "valid pairs, instances and query depths");
  add_problem_options(analyze, o);
  add_engine_options(analyze, o);
  add_output_options(analyze, o);
  analyze->add_option("--setting", o.setting, "setting to analyse (default all)");
  analyze->add_option("--policy", o.policy, "minimax or maximax")
      ->check(CLI::IsMember({"minimax", "maximax"}));
  analyze->add_flag("--strict", o.strict, "fail when a setting has no valid sharing");

  CLI::App* predict = app.add_subcommand("predict", "predicted number of queries for R");
  add_problem_options(predict, o);
  add_engine_options(predict, o);
  add_output_options(predict, o);
  predict->add_option("--r", o.r, "retrocausality fraction in (0, 1]");
  predict->add_option("--r-tolerance", o.r_tolerance, "accepted |R - r| for r other than 1/2");
  predict->add_option("--policy", o.policy, "minimax or maximax")
      ->check(CLI::IsMember({"minimax", "maximax"}));
  predict->add_flag("--strict", o.strict, "fail when a setting has no valid sharing");

  CLI::App* infer = app.add_subcommand("infer-r", "R explaining the optimal Grover count");
  add_output_options(infer, o);
  infer->add_option("--n-min", o.n_min, "smallest even n");
  infer->add_option("--n-max", o.n_max, "largest even n");

  CLI::App* simulate = app.add_subcommand("simulate", "run a built-in circuit");
  add_output_options(simulate, o);
  simulate->add_option("--circuit", o.circuit, "deutsch, grover2, dj2, simon2")->required();
  simulate->add_option("--setting", o.setting, "simulate this setting only");
  simulate->add_option("--measure", o.measures,
                       "measurement on the output, in order: A, A=<bits>, B, B=<setting>, "
                       "B@<positions>[=<setting>]");
  simulate->add_flag("--check-states", o.check_states, "compare against the reference states");

  CLI::App* histories = app.add_subcommand("histories", "classical histories of a circuit");
  add_engine_options(histories, o);
  add_output_options(histories, o);
  histories->add_option("--circuit", o.circuit, "deutsch, grover2, dj2, simon2")->required();
  histories->add_option("--setting", o.setting, "setting")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Report rep;
    bool failed = false;
    if (analyze->parsed()) rep = cmd_analyze(args, o);
    else if (predict->parsed()) rep = cmd_predict(args, o);
    else if (infer->parsed()) rep = cmd_infer_r(args, o);
    else if (simulate->parsed()) rep = cmd_simulate(args, o, failed);
    else rep = cmd_histories(args, o);

    const std::string text = o.format == "csv" ? render_csv(rep) : render_markdown(rep);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw FormatError("cannot write " + o.out);
      f << text;
    }
    if (failed) {
      err << "error: state checks failed\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace retro
