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

#include <string>
#include <vector>

#include "globent/linalg.hpp"
#include "globent/mixed_bound.hpp"

namespace globent {

enum class Exactness { kExact, kLowerBound };

const char* to_string(Exactness e);

struct TangleComponent {
  std::string name;  // e.g. "C^2_AB", "C^2_A(BC)"
  double value = 0.0;
  Exactness exactness = Exactness::kExact;
};

/// lhs - sum(components) = residual. For mixed components evaluated by the
/// lower bound the residual is an upper estimate, which the flags record.
struct TangleReport {
  std::string focus;      // grouping label, e.g. "A(BC)" or "(AB)CD"
  std::string lhs_label;  // e.g. "C^2_A(BCD)"
  double lhs = 0.0;
  Exactness lhs_exactness = Exactness::kExact;
  std::vector<TangleComponent> components;
  double residual = 0.0;
  /// Further decomposition of a component, when one applies (the
  /// three-party tangle of a reduced state in the four-party audit).
  std::vector<TangleReport> expansions;

  bool all_exact() const;
};

/// Subsystem letter: 0 -> 'A', 1 -> 'B', ...
char subsystem_letter(int index);

/// C^2_{m(bc)} - C^2_{mb} - C^2_{mc} for a three-qubit pure state; every
/// term is exact (Wootters for the pairs).
TangleReport three_tangle(const PureState& psi, int focus);

/// The same decomposition for a tripartite mixed state of qudits. Terms are
/// lower bounds unless the state has rank one (lhs) or the pair is two
/// qubits (Wootters).
TangleReport tangle_mixed_focus(const DensityMatrix& rho, int focus, const BoundOptions& opts = {});

/// The ten focus groupings of a four-party pure state: A(BC)D, B(AC)D,
/// C(AB)D, D(BC)A and the six ordered two-two splits.
struct FourPartiteAudit {
  std::vector<TangleReport> groupings;
  /// max |lhs(XY|ZW) - lhs(ZW|XY)| over the three complementary pairs,
  /// each side computed from its own reduced state.
  double complementary_defect = 0.0;
};

FourPartiteAudit four_partite_audit(const PureState& psi, const BoundOptions& opts = {});

}  // namespace globent
