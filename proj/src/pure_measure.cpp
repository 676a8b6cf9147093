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

#include "globent/pure_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "globent/generators.hpp"

namespace globent {

namespace {

void check_partition(const PureState& psi, const Bipartition& partition) {
  if (partition.left.size() + partition.right.size() != psi.num_subsystems() ||
      psi.dims().block_total(partition.left) != partition.n1 ||
      psi.dims().block_total(partition.right) != partition.n2) {
    throw std::invalid_argument("partition does not match the state's dimensions");
  }
}

double concurrence_from_purity(double p) { return std::sqrt(std::max(0.0, 2.0 * (1.0 - p))); }

}  // namespace

double ConcurrenceVector::norm() const {
  double s = 0.0;
  for (const auto& c : components) s += std::norm(c);
  return std::sqrt(s);
}

ConcurrenceVector concurrence_vector(const PureState& psi, const Bipartition& partition) {
  check_partition(psi, partition);
  const auto permuted = permute_subsystems(psi, partition.order());
  const CMatrix x = coefficient_matrix(permuted.amplitudes(), partition.n1, partition.n2);
  const auto left = so_basis(static_cast<int>(partition.n1));
  const auto right = so_basis(static_cast<int>(partition.n2));

  ConcurrenceVector out;
  out.partition = partition;
  out.components.reserve(left.pairs.size() * right.pairs.size());
  for (const auto& a : left.pairs) {
    for (const auto& b : right.pairs) {
      // <psi|S|psi*> = conj(psi^T S psi) because S is real.
      out.components.push_back(std::conj(generator_bilinear_form(x, x, a, b)));
    }
  }
  return out;
}

double bipartite_concurrence(const PureState& psi, const Bipartition& partition) {
  return concurrence_vector(psi, partition).norm();
}

double bipartite_concurrence_from_purity(const PureState& psi, const Bipartition& partition) {
  check_partition(psi, partition);
  return concurrence_from_purity(reduced_purity(psi, partition.left));
}

GlobalEntanglementReport global_entanglement(const PureState& psi) {
  if (psi.num_subsystems() < 2) {
    throw std::invalid_argument("global_entanglement: at least two subsystems are required");
  }
  GlobalEntanglementReport report;
  report.num = num_bipartitions(static_cast<int>(psi.num_subsystems()));

  double vector_sum = 0.0;
  double purity_sum = 0.0;
  for (auto& partition : enumerate_bipartitions(psi.dims())) {
    const double c = concurrence_vector(psi, partition).norm();
    const double p = reduced_purity(psi, partition.left);
    vector_sum += c * c;
    purity_sum += p;
    report.per_partition.push_back(PartitionTerm{std::move(partition), c * c, p});
  }
  report.value_vector_formula = std::sqrt(vector_sum);
  report.value_purity_formula =
      std::sqrt(std::max(0.0, 2.0 * (static_cast<double>(report.num) - purity_sum)));
  return report;
}

double global_entanglement_value(const PureState& psi) {
  if (psi.num_subsystems() < 2) {
    throw std::invalid_argument("global_entanglement: at least two subsystems are required");
  }
  const auto partitions = enumerate_bipartitions(psi.dims());
  double purity_sum = 0.0;
  for (const auto& partition : partitions) purity_sum += reduced_purity(psi, partition.left);
  return std::sqrt(
      std::max(0.0, 2.0 * (static_cast<double>(partitions.size()) - purity_sum)));
}

bool is_fully_separable(const PureState& psi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_fully_separable: tol must be > 0");
  // The vector formula sums squared minors and stays accurate near zero; the
  // purity formula takes a square root of a cancellation and bottoms out
  // near 1e-8 for inputs carrying rounding error.
  double squared = 0.0;
  for (const auto& p : enumerate_bipartitions(psi.dims())) {
    const double c = bipartite_concurrence(psi, p);
    squared += c * c;
  }
  return std::sqrt(squared) <= tol;
}

}  // namespace globent
