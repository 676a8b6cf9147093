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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "globent/linalg.hpp"

namespace globent {

/// Unordered two-block split of the subsystems. Canonical form keeps
/// subsystem 0 in `left`, so every split has exactly one representation.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  /// left followed by right: the subsystem order the partition operators act in.
  std::vector<int> order() const;
  /// e.g. "{0}|{1,2}"
  std::string label() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Canonicalizes `block` (either side may be given) into a Bipartition.
/// Throws std::invalid_argument unless both sides are nonempty.
Bipartition make_bipartition(const Dims& dims, std::span<const int> block);

/// Number of distinct bipartitions of n subsystems, evaluated with the
/// even/odd binomial sum (half the middle coefficient for even n).
std::uint64_t num_bipartitions(int n);

/// All canonical bipartitions, ordered by |left| then lexicographically.
std::vector<Bipartition> enumerate_bipartitions(const Dims& dims);

}  // namespace globent
