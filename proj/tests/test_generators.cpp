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

#include <doctest.h>

#include <random>

#include "globent/generators.hpp"
#include "support.hpp"

using namespace globent;

TEST_CASE("SO(n) basis") {
  for (int n = 2; n <= 5; ++n) {
    const auto b = so_basis(n);
    REQUIRE(b.matrices.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::size_t i = 0; i < b.matrices.size(); ++i) {
      const auto& m = b.matrices[i];
      const auto [j, k] = b.pairs[i];
      CHECK(j < k);
      CHECK((m + m.transpose()).norm() == 0.0);
      CHECK(m(j, k) == 1.0);
      CHECK(m(k, j) == -1.0);
      CHECK(m.cwiseAbs().sum() == 2.0);
      if (i > 0) CHECK(b.pairs[i - 1] < b.pairs[i]);
    }
  }
  const auto b3 = so_basis(3);
  CHECK(b3.pairs == std::vector<GeneratorPair>{{0, 1}, {0, 2}, {1, 2}});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) CHECK((b3.matrices[i].transpose() * b3.matrices[j]).trace() == 0.0);
  }
  RMatrix l2(2, 2);
  l2 << 0.0, 1.0, -1.0, 0.0;
  CHECK(so_basis(2).matrices.front() == l2);
  CHECK_THROWS_AS(so_basis(1), std::invalid_argument);
}

TEST_CASE("two-qubit operator is the spin-flip matrix") {
  const auto ops = partition_operators(Dims{2, 2}, make_bipartition(Dims{2, 2}, std::vector<int>{0}));
  REQUIRE(ops.size() == 1);
  RMatrix expected = RMatrix::Zero(4, 4);
  expected(0, 3) = 1.0;
  expected(1, 2) = -1.0;
  expected(2, 1) = -1.0;
  expected(3, 0) = 1.0;
  CHECK((*ops[0].matrix - expected).norm() == 0.0);
}

TEST_CASE("operator count and symmetry") {
  const Dims dims{2, 3, 2};
  for (const auto& p : enumerate_bipartitions(dims)) {
    const auto ops = partition_operators(dims, p);
    CHECK(ops.size() == p.n1 * (p.n1 - 1) / 2 * p.n2 * (p.n2 - 1) / 2);
    for (const auto& op : ops) {
      CHECK((*op.matrix - op.matrix->transpose()).norm() == 0.0);
      CHECK(op.matrix->rows() == static_cast<Eigen::Index>(dims.total()));
    }
  }
}

TEST_CASE("operator cache returns shared storage") {
  const auto a = cached_operator_matrices(2, 4);
  const auto b = cached_operator_matrices(2, 4);
  CHECK(a.get() == b.get());
  CHECK(a->size() == 6);
}

TEST_CASE("bilinear form matches the dense kron product") {
  std::mt19937_64 rng(21);
  const int n1 = 3, n2 = 4;
  const auto ga = so_basis(n1);
  const auto gb = so_basis(n2);
  const CVector x = testsupport::gaussian_vector(rng, n1 * n2);
  const CVector y = testsupport::gaussian_vector(rng, n1 * n2);
  const CMatrix xm = coefficient_matrix(x, n1, n2);
  const CMatrix ym = coefficient_matrix(y, n1, n2);
  for (std::size_t a = 0; a < ga.pairs.size(); ++a) {
    for (std::size_t b = 0; b < gb.pairs.size(); ++b) {
      const CMatrix s = testsupport::kron(ga.matrices[a].cast<Complex>(), gb.matrices[b].cast<Complex>());
      const Complex dense = (x.transpose() * s * y)(0, 0);
      CHECK(std::abs(dense - generator_bilinear_form(xm, ym, ga.pairs[a], gb.pairs[b])) < 1e-13);
    }
  }
}

TEST_CASE("local unitaries preserve the span of partition operators") {
  // For U = U_A x U_B, U^T S U stays in the complex span of the S operators.
  std::mt19937_64 rng(4);
  const auto ops = partition_operators(Dims{2, 2, 2, 2},
                                       make_bipartition(Dims{2, 2, 2, 2}, std::vector<int>{0, 1}));
  const auto random_unitary = [&](int d) {
    CMatrix g(d, d);
    std::normal_distribution<double> nd;
    for (auto& v : g.reshaped()) v = Complex(nd(rng), nd(rng));
    return CMatrix(Eigen::HouseholderQR<CMatrix>(g).householderQ());
  };
  const CMatrix u = testsupport::kron(random_unitary(4), random_unitary(4));
  CMatrix basis(256, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    basis.col(static_cast<Eigen::Index>(i)) = ops[i].matrix->cast<Complex>().reshaped();
  }
  const Eigen::ColPivHouseholderQR<CMatrix> qr(basis);
  for (const auto& op : ops) {
    const CMatrix moved = u.transpose() * op.matrix->cast<Complex>() * u;
    const CVector target = moved.reshaped();
    const CVector coeff = qr.solve(target);
    CHECK((basis * coeff - target).norm() < 1e-10);
  }
}
