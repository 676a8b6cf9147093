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

// Brute-force reference implementations shared by the unit tests. These are
// written directly from index arithmetic and do not call into the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "globent/linalg.hpp"

namespace testsupport {

using globent::CMatrix;
using globent::Complex;
using globent::CVector;

// Mixed-radix digits of `index`, subsystem 0 most significant.
inline std::vector<int> digits(std::size_t index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
    index /= static_cast<std::size_t>(dims[k]);
  }
  return out;
}

inline std::size_t compose(const std::vector<int>& digit, const std::vector<int>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * static_cast<std::size_t>(dims[k]) + digit[k];
  return index;
}

inline std::size_t product(const std::vector<int>& dims) {
  std::size_t p = 1;
  for (int d : dims) p *= static_cast<std::size_t>(d);
  return p;
}

// Reduced matrix on `keep` (sorted) by summing over matching traced digits.
inline CMatrix naive_partial_trace(const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims[static_cast<std::size_t>(k)]);
  const auto dk = static_cast<Eigen::Index>(product(kept_dims));
  CMatrix out = CMatrix::Zero(dk, dk);
  const std::size_t total = product(dims);
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits(i, dims);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits(j, dims);
      bool traced_equal = true;
      for (std::size_t s = 0; s < dims.size() && traced_equal; ++s) {
        if (std::find(keep.begin(), keep.end(), static_cast<int>(s)) == keep.end() && di[s] != dj[s]) {
          traced_equal = false;
        }
      }
      if (!traced_equal) continue;
      std::vector<int> ki, kj;
      for (int k : keep) {
        ki.push_back(di[static_cast<std::size_t>(k)]);
        kj.push_back(dj[static_cast<std::size_t>(k)]);
      }
      out(static_cast<Eigen::Index>(compose(ki, kept_dims)), static_cast<Eigen::Index>(compose(kj, kept_dims))) +=
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

// Partial transpose on subsystem `site`.
inline CMatrix partial_transpose(const CMatrix& rho, const std::vector<int>& dims, int site) {
  const std::size_t total = product(dims);
  CMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      auto di = digits(i, dims);
      auto dj = digits(j, dims);
      std::swap(di[static_cast<std::size_t>(site)], dj[static_cast<std::size_t>(site)]);
      out(static_cast<Eigen::Index>(compose(di, dims)), static_cast<Eigen::Index>(compose(dj, dims))) =
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

inline double min_eigenvalue(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline CVector gaussian_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Purity of the reduced state on `keep`, from the brute-force partial trace.
inline double naive_reduced_purity(const CVector& psi, const std::vector<int>& dims, const std::vector<int>& keep) {
  const CMatrix r = naive_partial_trace(psi * psi.adjoint(), dims, keep);
  return (r * r).trace().real();
}

// Pure measure from the purity route, enumerating every nonempty proper
// subset that contains subsystem 0.
inline double naive_global_measure(const CVector& psi, const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  double num = 0.0, purities = 0.0;
  for (unsigned mask = 0; mask < (1u << (n - 1)) - 1; ++mask) {
    std::vector<int> left{0};
    for (int k = 1; k < n; ++k) {
      if (mask & (1u << (k - 1))) left.push_back(k);
    }
    num += 1.0;
    purities += naive_reduced_purity(psi, dims, left);
  }
  return std::sqrt(std::max(0.0, 2.0 * (num - purities)));
}

// Two-qubit concurrence from the eigenvalues of rho (Y x Y) rho^* (Y x Y).
inline double naive_wootters(const CMatrix& rho) {
  CMatrix yy = CMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const CMatrix r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> es(r);
  std::vector<double> l;
  for (auto v : es.eigenvalues()) l.push_back(std::sqrt(std::max(0.0, v.real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace testsupport
