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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "retro/bitstring.hpp"
#include "retro/errors.hpp"
#include "retro/problems.hpp"

namespace retro {

using nlohmann::json;

std::string problem_to_json(const OracleProblem& p) {
  json j;
  j["name"] = p.name;
  j["arg_bits"] = p.arg_bits;
  j["out_bits"] = p.out_bits;
  json arr = json::array();
  for (const Setting& s : p.settings) {
    json e;
    e["b"] = s.b;
    json t = json::object();
    for (std::uint64_t a = 0; a < p.num_args(); ++a) {
      t[to_bits(a, p.arg_bits)] = to_bits(s.f(a), p.out_bits);
    }
    e["table"] = std::move(t);
    e["solution"] = s.solution;
    if (s.verdict != s.solution) e["verdict"] = s.verdict;
    arr.push_back(std::move(e));
  }
  j["settings"] = std::move(arr);
  if (!p.period.empty()) j["period"] = p.period;
  return j.dump(2) + "\n";
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::string bit_field(const json& v, const std::string& where) {
  if (!v.is_string() || !is_bit_string(v.get<std::string>())) {
    throw FormatError(where + ": expected a bit string");
  }
  return v.get<std::string>();
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key, "problem");
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "': expected an integer");
  return v.get<int>();
}

}  // namespace

OracleProblem problem_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  const json& name = field(j, "name", "problem");
  if (!name.is_string()) throw FormatError("field 'name': expected a string");
  int arg_bits = int_field(j, "arg_bits");
  int out_bits = int_field(j, "out_bits");
  if (arg_bits < 1 || arg_bits > 16) throw ValidationError("arg_bits must be in [1, 16]");
  if (out_bits < 1 || out_bits > 31) throw ValidationError("out_bits must be in [1, 31]");

  const json& arr = field(j, "settings", "problem");
  if (!arr.is_array()) throw FormatError("field 'settings': expected an array");
  std::vector<Setting> settings;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "settings[" + std::to_string(i) + "]";
    const json& e = arr[i];
    Setting s;
    s.b = bit_field(field(e, "b", where), where + ".b");
    const json& t = field(e, "table", where);
    if (!t.is_object()) throw FormatError(where + ".table: expected an object");
    s.table.assign(std::size_t{1} << arg_bits, 0);
    std::vector<bool> seen(s.table.size(), false);
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string& key = it.key();
      if (!is_bit_string(key) || static_cast<int>(key.size()) != arg_bits) {
        throw ValidationError(where + ".table: argument '" + key + "' is not an " +
                              std::to_string(arg_bits) + "-bit string");
      }
      std::string v = bit_field(it.value(), where + ".table." + key);
      if (static_cast<int>(v.size()) != out_bits) {
        throw ValidationError(where + ".table." + key + ": value is not " +
                              std::to_string(out_bits) + " bits");
      }
      std::uint64_t a = from_bits(key);
      s.table[a] = static_cast<std::uint32_t>(from_bits(v));
      seen[a] = true;
    }
    for (std::size_t a = 0; a < seen.size(); ++a) {
      if (!seen[a]) {
        throw ValidationError("table of " + s.b + " is missing argument " + to_bits(a, arg_bits));
      }
    }
    const json& sol = field(e, "solution", where);
    if (!sol.is_string() || sol.get<std::string>().empty()) {
      throw ValidationError(where + ": solution must be a non-empty string");
    }
    s.solution = sol.get<std::string>();
    if (e.contains("verdict")) {
      if (!e["verdict"].is_string()) throw FormatError(where + ".verdict: expected a string");
      s.verdict = e["verdict"].get<std::string>();
    }
    settings.push_back(std::move(s));
  }

  std::map<std::string, std::string> period;
  if (j.contains("period")) {
    const json& pm = j["period"];
    if (!pm.is_object()) throw FormatError("field 'period': expected an object");
    for (auto it = pm.begin(); it != pm.end(); ++it) {
      period[it.key()] = bit_field(it.value(), "period." + it.key());
    }
  }
  return make_problem(name.get<std::string>(), arg_bits, out_bits, std::move(settings),
                      std::move(period));
}

OracleProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open problem file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return problem_from_json(ss.str());
}

void save_problem(const OracleProblem& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write problem file " + path);
  out << problem_to_json(p);
}

}  // namespace retro
