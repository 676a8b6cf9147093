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

#include "globent/generators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace globent {

namespace {

class OperatorCache {
 public:
  std::shared_ptr<const std::vector<RMatrix>> get(std::size_t n1, std::size_t n2) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = entries_[{n1, n2}];
    if (!slot) slot = build(n1, n2);
    return slot;
  }

 private:
  static std::shared_ptr<const std::vector<RMatrix>> build(std::size_t n1, std::size_t n2) {
    const auto left = so_basis(static_cast<int>(n1));
    const auto right = so_basis(static_cast<int>(n2));
    auto mats = std::make_shared<std::vector<RMatrix>>();
    mats->reserve(left.matrices.size() * right.matrices.size());
    for (const auto& la : left.matrices) {
      for (const auto& lb : right.matrices) {
        RMatrix k(la.rows() * lb.rows(), la.cols() * lb.cols());
        for (Eigen::Index i = 0; i < la.rows(); ++i) {
          for (Eigen::Index j = 0; j < la.cols(); ++j) {
            k.block(i * lb.rows(), j * lb.cols(), lb.rows(), lb.cols()) = la(i, j) * lb;
          }
        }
        mats->push_back(std::move(k));
      }
    }
    return mats;
  }

  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const std::vector<RMatrix>>>
      entries_;
};

OperatorCache& operator_cache() {
  static OperatorCache cache;
  return cache;
}

}  // namespace

GeneratorBasis so_basis(int n) {
  if (n < 2) throw std::invalid_argument("so_basis: n must be >= 2");
  GeneratorBasis basis;
  basis.n = n;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      RMatrix l = RMatrix::Zero(n, n);
      l(j, k) = 1.0;
      l(k, j) = -1.0;
      basis.pairs.emplace_back(j, k);
      basis.matrices.push_back(std::move(l));
    }
  }
  return basis;
}

std::shared_ptr<const std::vector<RMatrix>> cached_operator_matrices(std::size_t n1,
                                                                     std::size_t n2) {
  return operator_cache().get(n1, n2);
}

std::vector<PartitionOperator> partition_operators(const Dims& dims, const Bipartition& partition) {
  if (partition.left.size() + partition.right.size() != dims.size() ||
      dims.block_total(partition.left) != partition.n1 ||
      dims.block_total(partition.right) != partition.n2) {
    throw std::invalid_argument("partition_operators: partition does not match dims");
  }
  const auto mats = cached_operator_matrices(partition.n1, partition.n2);
  const int q = static_cast<int>(partition.n2 * (partition.n2 - 1) / 2);
  std::vector<PartitionOperator> out;
  out.reserve(mats->size());
  for (std::size_t i = 0; i < mats->size(); ++i) {
    // Aliasing constructor: shares ownership of the cached vector.
    std::shared_ptr<const RMatrix> m(mats, &(*mats)[i]);
    out.push_back(PartitionOperator{partition, static_cast<int>(i) / q, static_cast<int>(i) % q,
                                    std::move(m)});
  }
  return out;
}

Complex generator_bilinear_form(const CMatrix& x, const CMatrix& y, GeneratorPair a,
                                GeneratorPair b) {
  const auto [j, k] = a;
  const auto [l, m] = b;
  return x(j, l) * y(k, m) - x(j, m) * y(k, l) - x(k, l) * y(j, m) + x(k, m) * y(j, l);
}

}  // namespace globent
