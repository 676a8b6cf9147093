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

#include "globent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace globent {

namespace {

std::string describe_invariant(const std::string& invariant, double defect) {
  std::ostringstream os;
  os << "invariant '" << invariant << "' violated (defect " << defect << ")";
  return os.str();
}

// Sorted, deduplicated, range-checked subsystem list.
std::vector<int> checked_keep(std::span<const int> keep, std::size_t n) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("partial_trace: repeated subsystem index");
  }
  if (sorted.front() < 0 || static_cast<std::size_t>(sorted.back()) >= n) {
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  }
  return sorted;
}

std::vector<int> keep_then_rest(const std::vector<int>& keep, std::size_t n) {
  std::vector<int> perm = keep;
  const auto rest = complement(keep, n);
  perm.insert(perm.end(), rest.begin(), rest.end());
  return perm;
}

}  // namespace

InvariantError::InvariantError(std::string invariant, double defect)
    : std::invalid_argument(describe_invariant(invariant, defect)),
      invariant_(std::move(invariant)),
      defect_(defect) {}

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("Dims: at least one subsystem is required");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument("Dims: every subsystem dimension must be >= 2");
    }
    total_ *= static_cast<std::size_t>(d);
  }
}

std::size_t Dims::block_total(std::span<const int> subsystems) const {
  std::size_t t = 1;
  for (int s : subsystems) t *= static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(s)));
  return t;
}

Dims Dims::select(std::span<const int> subsystems) const {
  std::vector<int> out;
  out.reserve(subsystems.size());
  for (int s : subsystems) out.push_back(dims_.at(static_cast<std::size_t>(s)));
  return Dims(std::move(out));
}

std::string Dims::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ',';
    os << dims_[i];
  }
  os << ']';
  return os.str();
}

PureState::PureState(Dims dims, CVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total()) {
    throw InvariantError("amplitude count equals total dimension",
                         std::abs(static_cast<double>(amplitudes_.size()) -
                                  static_cast<double>(dims_.total())));
  }
  const double defect = std::abs(amplitudes_.norm() - 1.0);
  if (!(defect <= tolerance::kNorm)) {
    throw InvariantError("unit norm", defect);
  }
}

PureState PureState::normalized(Dims dims, CVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvariantError("nonzero finite norm", n);
  }
  amplitudes /= n;
  return PureState(std::move(dims), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(Dims dims, CMatrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(dims_.total());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw InvariantError("square matrix of total dimension",
                         static_cast<double>(std::max(std::abs(entries_.rows() - d),
                                                      std::abs(entries_.cols() - d))));
  }
  if (!entries_.allFinite()) {
    throw InvariantError("finite entries", std::numeric_limits<double>::infinity());
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance::kHermitian) {
    throw InvariantError("Hermitian", herm);
  }
  const double trace_defect = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (trace_defect > tolerance::kTrace) {
    throw InvariantError("unit trace", trace_defect);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(entries_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tolerance::kNegativeEigenvalue) {
    throw InvariantError("positive semidefinite", -min_eig);
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return hermitized(psi.dims(), a * a.adjoint());
}

DensityMatrix DensityMatrix::hermitized(Dims dims, const CMatrix& entries) {
  CMatrix h = 0.5 * (entries + entries.adjoint());
  return DensityMatrix(std::move(dims), std::move(h));
}

std::vector<int> complement(std::span<const int> subsystems, std::size_t n) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    if (std::find(subsystems.begin(), subsystems.end(), i) == subsystems.end()) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> permutation_indices(const Dims& dims, std::span<const int> perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) {
    throw std::invalid_argument("permutation length does not match subsystem count");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("permutation is not a bijection on {0..N-1}");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }

  std::vector<std::size_t> in_stride(n);
  std::size_t s = 1;
  for (std::size_t k = n; k-- > 0;) {
    in_stride[k] = s;
    s *= static_cast<std::size_t>(dims[k]);
  }

  std::vector<int> out_dims(n);
  for (std::size_t k = 0; k < n; ++k) out_dims[k] = dims[static_cast<std::size_t>(perm[k])];

  // Walk output multi-indices in row-major order, tracking the source index.
  std::vector<std::size_t> src(dims.total());
  std::vector<int> digit(n, 0);
  std::size_t in_flat = 0;
  for (std::size_t out_flat = 0; out_flat < src.size(); ++out_flat) {
    src[out_flat] = in_flat;
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t stride = in_stride[static_cast<std::size_t>(perm[k])];
      if (++digit[k] < out_dims[k]) {
        in_flat += stride;
        break;
      }
      in_flat -= stride * static_cast<std::size_t>(out_dims[k] - 1);
      digit[k] = 0;
    }
  }
  return src;
}

PureState permute_subsystems(const PureState& psi, std::span<const int> perm) {
  const auto src = permutation_indices(psi.dims(), perm);
  CVector out(psi.amplitudes().size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = psi.amplitudes()[static_cast<Eigen::Index>(src[i])];
  }
  return PureState(psi.dims().select(perm), std::move(out));
}

CMatrix permute_columns(const Dims& dims, const CMatrix& vectors, std::span<const int> perm) {
  const auto src = permutation_indices(dims, perm);
  CMatrix out(vectors.rows(), vectors.cols());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = vectors.row(static_cast<Eigen::Index>(src[i]));
  }
  return out;
}

CMatrix coefficient_matrix(const CVector& amplitudes, std::size_t n_left, std::size_t n_right) {
  if (static_cast<std::size_t>(amplitudes.size()) != n_left * n_right) {
    throw std::invalid_argument("coefficient_matrix: size mismatch");
  }
  // Row-major flattening: a_ij sits at i * n_right + j.
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      amplitudes.data(), static_cast<Eigen::Index>(n_left), static_cast<Eigen::Index>(n_right));
}

DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep) {
  const auto kept = checked_keep(keep, psi.num_subsystems());
  const auto perm = keep_then_rest(kept, psi.num_subsystems());
  const auto permuted = permute_subsystems(psi, perm);
  const std::size_t nk = psi.dims().block_total(kept);
  const CMatrix x = coefficient_matrix(permuted.amplitudes(), nk, psi.dims().total() / nk);
  return DensityMatrix::hermitized(psi.dims().select(kept), x * x.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto kept = checked_keep(keep, rho.num_subsystems());
  const auto perm = keep_then_rest(kept, rho.num_subsystems());
  const auto src = permutation_indices(rho.dims(), perm);
  const std::size_t nk = rho.dims().block_total(kept);
  const std::size_t nr = rho.dims().total() / nk;

  CMatrix reduced = CMatrix::Zero(static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk));
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < nk; ++j) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < nr; ++r) {
        acc += rho.entries()(static_cast<Eigen::Index>(src[i * nr + r]),
                             static_cast<Eigen::Index>(src[j * nr + r]));
      }
      reduced(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix::hermitized(rho.dims().select(kept), reduced);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

double reduced_purity(const PureState& psi, std::span<const int> keep) {
  const auto kept = checked_keep(keep, psi.num_subsystems());
  const auto perm = keep_then_rest(kept, psi.num_subsystems());
  const auto permuted = permute_subsystems(psi, perm);
  const std::size_t nk = psi.dims().block_total(kept);
  const CMatrix x = coefficient_matrix(permuted.amplitudes(), nk, psi.dims().total() / nk);
  if (x.rows() <= x.cols()) {
    return (x * x.adjoint()).squaredNorm();
  }
  return (x.adjoint() * x).squaredNorm();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.entries(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : es.eigenvalues()) {
    if (lambda > tolerance::kEntropyCutoff) s -= lambda * std::log2(lambda);
  }
  return s;
}

SpectralDecomp spectral_decomposition(const DensityMatrix& rho, double rank_tolerance) {
  if (!(rank_tolerance >= 0.0)) {
    throw std::invalid_argument("spectral_decomposition: rank tolerance must be >= 0");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.entries());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decomposition: eigensolver failed");
  }
  const auto& values = es.eigenvalues();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = values.size(); i-- > 0;) {
    if (values[i] > rank_tolerance) kept.push_back(i);
  }
  SpectralDecomp out;
  out.rank_tolerance = rank_tolerance;
  out.eigenvalues.resize(static_cast<Eigen::Index>(kept.size()));
  out.eigenvectors.resize(values.size(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    out.eigenvalues[col] = values[kept[k]];
    out.eigenvectors.col(col) = es.eigenvectors().col(kept[k]);
  }
  return out;
}

RVector singular_values(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("singular_values: matrix is not square");
  }
  if (m.size() == 0) return RVector();
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

}  // namespace globent
