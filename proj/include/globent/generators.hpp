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

#include <memory>
#include <utility>
#include <vector>

#include "globent/linalg.hpp"
#include "globent/partitions.hpp"

namespace globent {

/// Index pair (j, k), j < k, of an SO(n) generator: +1 at (j,k), -1 at (k,j).
using GeneratorPair = std::pair<int, int>;

struct GeneratorBasis {
  int n = 0;
  std::vector<GeneratorPair> pairs;   // lexicographic in (j, k)
  std::vector<RMatrix> matrices;      // same order as pairs
};

/// The n(n-1)/2 antisymmetric generators of SO(n) with unit entries.
GeneratorBasis so_basis(int n);

/// L_alpha (x) L_beta for one bipartition. The matrix acts on states whose
/// subsystems are ordered as partition.order().
struct PartitionOperator {
  Bipartition partition;
  int alpha = 0;  // 0-based into so_basis(n1)
  int beta = 0;   // 0-based into so_basis(n2)
  std::shared_ptr<const RMatrix> matrix;
};

/// All P*Q operators of the partition, alpha-major. Matrices come from a
/// process-wide cache keyed on (n1, n2); the cache is safe for concurrent use.
std::vector<PartitionOperator> partition_operators(const Dims& dims, const Bipartition& partition);

/// Cached dense L_alpha (x) L_beta matrices for block sizes (n1, n2), alpha-major.
std::shared_ptr<const std::vector<RMatrix>> cached_operator_matrices(std::size_t n1, std::size_t n2);

/// x^T (L_a (x) L_b) y for vectors given as n1 x n2 coefficient matrices,
/// evaluated from the two nonzeros of each generator.
Complex generator_bilinear_form(const CMatrix& x, const CMatrix& y, GeneratorPair a,
                                GeneratorPair b);

}  // namespace globent
