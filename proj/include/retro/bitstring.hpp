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

#include <cstdint>
#include <string>
#include <string_view>

namespace retro {

/// True iff `s` is non-empty and made only of '0' and '1'.
bool is_bit_string(std::string_view s);

/// Renders the low `width` bits of `value`, most significant bit first.
std::string to_bits(std::uint64_t value, int width);

/// Parses a most-significant-bit-first bit string. Throws FormatError.
std::uint64_t from_bits(std::string_view s);

/// Bitwise complement of a bit string.
std::string complement_bits(std::string_view s);

/// Number of bits needed to index `count` items (at least 1).
int index_width(std::size_t count);

}  // namespace retro
