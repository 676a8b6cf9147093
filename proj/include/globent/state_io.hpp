// Copyright 2026 The globent Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "globent/state_zoo.hpp"

namespace globent {

/// Malformed or invariant-violating state file. what() names the problem
/// and, for invariant violations, the measured defect.
class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State file JSON:
///   {"dims": [2,2], "kind": "pure",    "data": [[re,im], ...]}
///   {"dims": [2,2], "kind": "density", "data": [[[re,im], ...], ...]}
/// Pure data has prod(dims) entries; density data is row-major rows.
/// With `renormalize`, pure amplitudes are divided by their norm and
/// density matrices by their trace before validation.
ZooState parse_state_json(const std::string& text, bool renormalize = false);
ZooState read_state_file(const std::filesystem::path& path, bool renormalize = false);

/// Serializes a state in the same schema, with round-trip precision.
std::string to_state_json(const ZooState& state);

}  // namespace globent
