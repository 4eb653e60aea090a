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

#include <stdexcept>
#include <string>

namespace retro {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a desk-scale cap (bit count, enumeration size, solver size).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A problem file could not be parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A problem violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownSetting : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  using Error::Error;
};

/// Some setting admits no valid sharing of the selection.
class NoValidSharing : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityOutcome : public Error {
 public:
  using Error::Error;
};

class UnknownCircuit : public Error {
 public:
  using Error::Error;
};

}  // namespace retro
