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

#include <string>
#include <vector>

#include "rodcomp/lattice.hpp"

namespace rodcomp {

// Rod configuration files are JSON:
//   {"rods": [{"base": ["a/b", "c/d", "e/f"], "direction": [p, q, r]}, ...]}
// Base coordinates are rationals written "num/den" or "num"; directions are
// integers. The echo emits reduced fractions and canonical directions,
// bit-exact for identical inputs.

/// Parses a config document; errors carry the JSON path of the offending
/// element.
std::vector<Rod> parse_rods_json(const std::string& text);

/// Reads and parses a config file.
std::vector<Rod> load_rods_file(const std::string& path);

/// Canonical JSON echo of a rod list.
std::string rods_to_json(const std::vector<Rod>& rods, int indent = -1);

}  // namespace rodcomp
