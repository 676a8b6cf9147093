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
#include <vector>

#include "globent/linalg.hpp"
#include "globent/partitions.hpp"

namespace globent {

/// Components C_ab = <psi| L_a (x) L_b |psi*> for one bipartition, ordered
/// like partition_operators (alpha-major). Conjugation is taken in the
/// computational basis.
struct ConcurrenceVector {
  Bipartition partition;
  std::vector<Complex> components;

  double norm() const;
};

ConcurrenceVector concurrence_vector(const PureState& psi, const Bipartition& partition);

/// Length of the concurrence vector.
double bipartite_concurrence(const PureState& psi, const Bipartition& partition);

/// sqrt(2 (1 - Tr rho_left^2)); agrees with bipartite_concurrence.
double bipartite_concurrence_from_purity(const PureState& psi, const Bipartition& partition);

struct PartitionTerm {
  Bipartition partition;
  double squared_concurrence = 0.0;  // from the concurrence vector
  double reduced_purity = 0.0;       // Tr rho_left^2
};

struct GlobalEntanglementReport {
  double value_vector_formula = 0.0;
  double value_purity_formula = 0.0;
  std::vector<PartitionTerm> per_partition;
  std::uint64_t num = 0;

  /// The purity-formula value, the default route.
  double value() const noexcept { return value_purity_formula; }
};

/// Computes the measure twice: as the root-sum-square of every concurrence
/// vector component, and as sqrt(2 (Num - sum_p Tr rho_p^2)). The two routes
/// share no intermediate results.
GlobalEntanglementReport global_entanglement(const PureState& psi);

/// The purity route only.
double global_entanglement_value(const PureState& psi);

bool is_fully_separable(const PureState& psi, double tol = 1e-10);

}  // namespace globent
