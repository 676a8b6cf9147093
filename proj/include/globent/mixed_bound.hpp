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

/// Position of one A-matrix: partition index (into AMatrixSet::partitions)
/// and 0-based generator indices.
struct AIndex {
  std::size_t partition = 0;
  int alpha = 0;
  int beta = 0;
};

/// A_i = M^{1/2} Phi^T S_i Phi M^{1/2} for every partition operator S_i,
/// where rho = Phi M Phi^dag is the rank-truncated eigendecomposition and
/// Phi^T is the plain transpose. Flat order is partition-major, then
/// alpha-major. Immutable once built.
struct AMatrixSet {
  Dims dims;
  SpectralDecomp decomp;
  std::vector<Bipartition> partitions;
  std::vector<CMatrix> entries;
  std::vector<AIndex> index;

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t rank() const noexcept { return decomp.rank(); }
};

/// Complex coefficient vector on the unit sphere.
class CoefficientVector {
 public:
  /// Throws InvariantError unless |z| = 1 within 1e-12.
  explicit CoefficientVector(CVector z);
  static CoefficientVector normalized(CVector z);

  const CVector& values() const noexcept { return z_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(z_.size()); }

 private:
  CVector z_;
};

struct BoundOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_iters = 2000;   // per continuation stage
  double tol = 1e-7;      // relative improvement that ends a stage
  unsigned threads = 0;   // 0: hardware concurrency
};

struct BoundResult {
  double value = 0.0;          // max(0, raw_objective)
  double raw_objective = 0.0;  // lambda_1 - sum_{i>1} lambda_i at best_z
  CoefficientVector best_z{CVector::Ones(1)};
  int restarts_used = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // per-restart raw optimum
  std::size_t rank = 0;
  /// True when the input had rank one and the maximizer was taken in
  /// closed form (the value is then the exact pure-state measure).
  bool exact = false;
};

AMatrixSet build_a_matrices(const DensityMatrix& rho);
AMatrixSet build_a_matrices(const DensityMatrix& rho, std::vector<Bipartition> partitions);

/// lambda_1 - sum_{i>1} lambda_i for the singular values of sum_i z_i A_i.
double objective(const AMatrixSet& aset, const CoefficientVector& z);

/// Multi-start maximization of the objective over the complex unit sphere.
/// Deterministic for fixed (aset, seed, restarts) whatever the thread count.
BoundResult maximize_lower_bound(const AMatrixSet& aset, const BoundOptions& opts = {});

/// Lower bound on the mixed-state global entanglement over all bipartitions.
BoundResult global_lower_bound(const DensityMatrix& rho, const BoundOptions& opts = {});

/// Same bound restricted to one bipartition: a lower bound on the concurrence
/// of rho across that cut.
BoundResult partition_lower_bound(const DensityMatrix& rho, const Bipartition& partition,
                                  const BoundOptions& opts = {});

/// Exact two-qubit concurrence max(0, mu1 - mu2 - mu3 - mu4).
double wootters_concurrence(const DensityMatrix& rho);

}  // namespace globent
