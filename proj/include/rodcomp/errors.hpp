// Copyright 2026 the rodcomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rodcomp {

/// Base class of all rodcomp errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or contradictory input data (bad slope text, zero vectors,
/// configs violating validity invariants, ...). CLI exit code 1.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input outside the supported hypotheses (k > 3,
/// dependent directions, unrealizable orthogonality, ...). CLI exit code 2.
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

/// An internal search limit was reached before an answer stabilized.
/// CLI exit code 3.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Violated internal consistency check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rodcomp
