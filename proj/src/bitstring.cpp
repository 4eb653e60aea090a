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

#include "retro/bitstring.hpp"

#include "retro/errors.hpp"

namespace retro {

bool is_bit_string(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

std::string to_bits(std::uint64_t value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> i) & 1u) out[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  return out;
}

std::uint64_t from_bits(std::string_view s) {
  if (!is_bit_string(s) || s.size() > 64) {
    throw FormatError("not a bit string: '" + std::string(s) + "'");
  }
  std::uint64_t v = 0;
  for (char c : s) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

std::string complement_bits(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

int index_width(std::size_t count) {
  int w = 1;
  while ((std::size_t{1} << w) < count) ++w;
  return w;
}

}  // namespace retro
