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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace globent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tolerance {
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-10;
inline constexpr double kRank = 1e-12;
inline constexpr double kEntropyCutoff = 1e-14;
}  // namespace tolerance

/// Raised when a state or operator violates one of its construction
/// invariants. Carries the invariant name and the measured defect so
/// callers (the CLI in particular) can report what went wrong.
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string invariant, double defect);

  const std::string& invariant() const noexcept { return invariant_; }
  double defect() const noexcept { return defect_; }

 private:
  std::string invariant_;
  double defect_;
};

/// Ordered subsystem dimensions. Amplitudes are flattened row-major over
/// this list: subsystem 0 varies slowest.
class Dims {
 public:
  Dims() = default;
  explicit Dims(std::vector<int> dims);
  Dims(std::initializer_list<int> dims) : Dims(std::vector<int>(dims)) {}

  std::size_t size() const noexcept { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_[i]; }
  std::size_t total() const noexcept { return total_; }
  const std::vector<int>& values() const noexcept { return dims_; }

  /// Product of the dimensions of the listed subsystems.
  std::size_t block_total(std::span<const int> subsystems) const;
  /// Dimensions of the listed subsystems, in the listed order.
  Dims select(std::span<const int> subsystems) const;

  std::string to_string() const;

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  std::vector<int> dims_;
  std::size_t total_ = 1;
};

class PureState {
 public:
  /// Throws InvariantError unless the amplitudes have unit norm.
  PureState(Dims dims, CVector amplitudes);

  /// Divides by the norm first; throws for a zero vector.
  static PureState normalized(Dims dims, CVector amplitudes);

  const Dims& dims() const noexcept { return dims_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

 private:
  Dims dims_;
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates hermiticity, unit trace and positive semidefiniteness.
  DensityMatrix(Dims dims, CMatrix entries);

  /// |psi><psi|
  static DensityMatrix from_pure(const PureState& psi);

  /// Symmetrizes (M + M^dag)/2 before validating. Used for matrices that
  /// are Hermitian up to rounding, e.g. results of partial traces.
  static DensityMatrix hermitized(Dims dims, const CMatrix& entries);

  const Dims& dims() const noexcept { return dims_; }
  const CMatrix& entries() const noexcept { return entries_; }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

 private:
  Dims dims_;
  CMatrix entries_;
};

/// rho = Phi diag(M) Phi^dag restricted to eigenvalues above the rank
/// tolerance, eigenvalues descending.
struct SpectralDecomp {
  CMatrix eigenvectors;
  RVector eigenvalues;
  double rank_tolerance = tolerance::kRank;

  std::size_t rank() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// For each flat output index, the flat input index it is copied from when
/// the subsystems are reordered so that output subsystem k is input
/// subsystem perm[k].
std::vector<std::size_t> permutation_indices(const Dims& dims, std::span<const int> perm);

/// Output subsystem k is input subsystem perm[k]. Throws std::invalid_argument
/// for a non-bijective perm.
PureState permute_subsystems(const PureState& psi, std::span<const int> perm);

/// Reorders the columns' tensor factors of a total x K matrix of state
/// vectors (same convention as permute_subsystems).
CMatrix permute_columns(const Dims& dims, const CMatrix& vectors, std::span<const int> perm);

/// Reduced state on `keep` (any order accepted, original order preserved).
DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

double purity(const DensityMatrix& rho);
/// Purity of the reduced state of `keep`, computed from the Schmidt matrix
/// without forming a DensityMatrix.
double reduced_purity(const PureState& psi, std::span<const int> keep);

/// -sum lambda log2 lambda over eigenvalues above 1e-14.
double von_neumann_entropy(const DensityMatrix& rho);

SpectralDecomp spectral_decomposition(const DensityMatrix& rho,
                                      double rank_tolerance = tolerance::kRank);

/// Descending singular values of a square matrix.
RVector singular_values(const CMatrix& m);

/// Reshape a state in (left, right) order into the n_left x n_right
/// coefficient matrix a_ij.
CMatrix coefficient_matrix(const CVector& amplitudes, std::size_t n_left, std::size_t n_right);

/// The complement of `subsystems` in {0..n-1}, ascending.
std::vector<int> complement(std::span<const int> subsystems, std::size_t n);

}  // namespace globent
