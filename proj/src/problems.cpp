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

#include "retro/problems.hpp"

#include <algorithm>
#include <bit>

#include "retro/bitstring.hpp"
#include "retro/errors.hpp"

namespace retro {

std::size_t OracleProblem::index_of(std::string_view b) const {
  auto it = index_.find(std::string(b));
  if (it == index_.end()) {
    throw UnknownSetting("setting '" + std::string(b) + "' is not in problem " + name);
  }
  return it->second;
}

bool OracleProblem::contains(std::string_view b) const {
  return index_.count(std::string(b)) != 0;
}

bool OracleProblem::table_suffix() const {
  if (setting_bits() != static_cast<int>(num_args()) * out_bits) return false;
  for (const Setting& s : settings) {
    std::string t;
    for (std::uint64_t a = 0; a < num_args(); ++a) t += to_bits(s.f(a), out_bits);
    if (t != s.b) return false;
  }
  return true;
}

bool operator==(const OracleProblem& x, const OracleProblem& y) {
  if (x.name != y.name || x.arg_bits != y.arg_bits || x.out_bits != y.out_bits ||
      x.structured != y.structured || x.period != y.period ||
      x.settings.size() != y.settings.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.settings.size(); ++i) {
    const Setting& s = x.settings[i];
    const Setting& t = y.settings[i];
    if (s.b != t.b || s.solution != t.solution || s.verdict != t.verdict) return false;
    for (std::uint64_t a = 0; a < x.num_args(); ++a) {
      if (s.f(a) != t.f(a)) return false;
    }
  }
  return true;
}

namespace {

void check_simon_period(const OracleProblem& p) {
  for (const auto& [b, h] : p.period) {
    if (!p.contains(b)) throw ValidationError("period given for unknown setting " + b);
    if (!is_bit_string(h) || static_cast<int>(h.size()) != p.arg_bits) {
      throw ValidationError("period of " + b + " must be an " + std::to_string(p.arg_bits) +
                            "-bit string");
    }
    std::uint64_t hv = from_bits(h);
    if (hv == 0) throw ValidationError("period of " + b + " is all zeros");
    const Setting& s = p.settings[p.index_of(b)];
    for (std::uint64_t a = 0; a < p.num_args(); ++a) {
      for (std::uint64_t c = 0; c < p.num_args(); ++c) {
        bool same = s.f(a) == s.f(c);
        if (same != (a == c || a == (c ^ hv))) {
          throw ValidationError("setting " + b + " is not periodic with period " + h);
        }
      }
    }
  }
}

}  // namespace

OracleProblem make_problem(std::string name, int arg_bits, int out_bits,
                           std::vector<Setting> settings,
                           std::map<std::string, std::string> period) {
  if (arg_bits < 1 || arg_bits > 16) {
    throw ValidationError("arg_bits must be in [1, 16], got " + std::to_string(arg_bits));
  }
  if (out_bits < 1 || out_bits > 31) {
    throw ValidationError("out_bits must be in [1, 31], got " + std::to_string(out_bits));
  }
  if (settings.empty()) throw ValidationError("problem has no settings");

  OracleProblem p;
  p.name = std::move(name);
  p.arg_bits = arg_bits;
  p.out_bits = out_bits;
  std::sort(settings.begin(), settings.end(),
            [](const Setting& x, const Setting& y) { return x.b < y.b; });
  p.settings = std::move(settings);
  p.period = std::move(period);

  const std::size_t len = p.settings.front().b.size();
  const std::uint64_t nargs = p.num_args();
  const std::uint32_t vmax = (std::uint32_t{1} << out_bits) - 1;
  for (std::size_t i = 0; i < p.settings.size(); ++i) {
    Setting& s = p.settings[i];
    if (!is_bit_string(s.b)) throw ValidationError("setting id '" + s.b + "' is not a bit string");
    if (s.b.size() != len) throw ValidationError("setting ids have different lengths");
    if (i > 0 && p.settings[i - 1].b == s.b) throw ValidationError("duplicate setting id " + s.b);
    if (s.point < 0) {
      if (s.table.size() != nargs) {
        throw ValidationError("table of " + s.b + " does not cover every argument");
      }
      for (std::uint32_t v : s.table) {
        if (v > vmax) throw ValidationError("table of " + s.b + " has a value wider than out_bits");
      }
    } else if (static_cast<std::uint64_t>(s.point) >= nargs) {
      throw ValidationError("point function of " + s.b + " outside the argument range");
    }
    if (s.solution.empty()) throw ValidationError("setting " + s.b + " has an empty solution");
    if (s.verdict.empty()) s.verdict = s.solution;
    p.index_.emplace(s.b, i);
  }
  p.structured = len >= 63 || p.settings.size() < (std::uint64_t{1} << len);
  check_simon_period(p);
  return p;
}

OracleProblem gen_deutsch() {
  std::vector<Setting> s;
  for (std::uint32_t t = 0; t < 4; ++t) {
    Setting x;
    x.table = {t >> 1, t & 1};
    x.b = to_bits(t, 2);
    x.solution = (x.table[0] == x.table[1]) ? "0" : "1";
    s.push_back(x);
  }
  return make_problem("deutsch", 1, 1, std::move(s));
}

OracleProblem gen_grover(int n) {
  if (n < 1 || n > 16) throw SizeError("grover needs 1 <= n <= 16, got " + std::to_string(n));
  std::vector<Setting> s;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    Setting x;
    x.b = to_bits(b, n);
    x.point = static_cast<std::int64_t>(b);
    x.solution = x.b;
    s.push_back(std::move(x));
  }
  return make_problem("grover", n, 1, std::move(s));
}

OracleProblem gen_deutsch_jozsa(int n) {
  if (n < 1 || n > 4) throw SizeError("dj needs 1 <= n <= 4, got " + std::to_string(n));
  const int len = 1 << n;
  std::vector<std::string> ids;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << len); ++t) {
    int ones = std::popcount(t);
    if (ones == 0 || ones == len || ones == len / 2) ids.push_back(to_bits(t, len));
  }
  std::sort(ids.begin(), ids.end());
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  const int w = index_width(ids.size());

  std::vector<Setting> s;
  for (const std::string& b : ids) {
    Setting x;
    x.b = b;
    for (char c : b) x.table.push_back(c == '1');
    x.solution = to_bits(pos[std::min(b, complement_bits(b))], w);
    bool constant = std::count(b.begin(), b.end(), b[0]) == len;
    x.verdict = constant ? "0" : "1";
    s.push_back(std::move(x));
  }
  return make_problem("dj", n, 1, std::move(s));
}

OracleProblem gen_simon(int n) {
  if (n != 2 && n != 3) throw SizeError("simon needs n = 2 or 3, got " + std::to_string(n));
  const int m = n - 1;
  const std::uint64_t nargs = std::uint64_t{1} << n;
  std::vector<Setting> s;
  std::map<std::string, std::string> period;
  for (std::uint64_t h = 1; h < nargs; ++h) {
    // Coset representatives in increasing order; the i-th coset takes value perm[i].
    std::vector<std::uint64_t> reps;
    for (std::uint64_t a = 0; a < nargs; ++a) {
      if (a < (a ^ h)) reps.push_back(a);
    }
    std::vector<std::uint32_t> perm(reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
    do {
      Setting x;
      x.table.assign(nargs, 0);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        x.table[reps[i]] = perm[i];
        x.table[reps[i] ^ h] = perm[i];
      }
      for (std::uint32_t v : x.table) x.b += to_bits(v, m);
      x.solution = to_bits(h, n);
      period[x.b] = x.solution;
      s.push_back(std::move(x));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return make_problem("simon", n, m, std::move(s), std::move(period));
}

OracleProblem gen_builtin(std::string_view family, int n) {
  if (family == "deutsch") return gen_deutsch();
  if (family == "grover") return gen_grover(n);
  if (family == "dj") return gen_deutsch_jozsa(n);
  if (family == "simon") return gen_simon(n);
  throw FormatError("unknown problem family '" + std::string(family) + "'");
}

}  // namespace retro
