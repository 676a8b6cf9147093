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

#include <cmath>
#include <random>

#include "globent/generators.hpp"
#include "globent/pure_measure.hpp"
#include "globent/state_zoo.hpp"
#include "support.hpp"

using namespace globent;

namespace {

PureState random_pure(std::mt19937_64& rng, const Dims& dims) {
  return PureState(dims, testsupport::gaussian_vector(rng, dims.total()));
}

}  // namespace

TEST_CASE("reference values") {
  CHECK(global_entanglement_value(ghz(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(global_entanglement_value(w_state(3)) == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-12));
  CHECK(global_entanglement_value(ghz(4)) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
  CHECK(global_entanglement_value(bell()) == doctest::Approx(1.0).epsilon(1e-12));
  // Two-qutrit maximally entangled: purity 1/3 gives sqrt(2 * 2/3).
  CHECK(global_entanglement_value(ghz(2, 3)) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

  CVector b0 = CVector::Zero(8);
  b0[0] = b0[6] = 1.0 / std::sqrt(2.0);  // (|00> + |11>)|0>
  CHECK(global_entanglement_value(PureState(Dims{2, 2, 2}, b0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("product states have zero measure") {
  for (const char* labels : {"00", "0+1", "+-+-", "1-0+1"}) {
    const auto psi = product(labels);
    const auto r = global_entanglement(psi);
    CHECK(r.value_vector_formula <= 1e-10);
    CHECK(r.value_purity_formula <= 1e-10);
    CHECK(is_fully_separable(psi));
  }
  CHECK_FALSE(is_fully_separable(ghz(3)));
  CHECK_FALSE(is_fully_separable(bell()));
}

TEST_CASE("both formulas agree with an independent oracle") {
  std::mt19937_64 rng(17);
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 2}, {3, 2, 3}, {2, 2, 2, 2}};
  for (const auto& shape : shapes) {
    for (int t = 0; t < 4; ++t) {
      const auto psi = random_pure(rng, Dims(shape));
      const auto r = global_entanglement(psi);
      const double oracle = testsupport::naive_global_measure(psi.amplitudes(), shape);
      CHECK(std::abs(r.value_vector_formula - r.value_purity_formula) <= 1e-9);
      CHECK(std::abs(r.value_purity_formula - oracle) <= 1e-12);
      CHECK(r.num == num_bipartitions(static_cast<int>(shape.size())));
      CHECK(r.per_partition.size() == r.num);
    }
  }
}

TEST_CASE("per-partition concurrence from the vector and from purity") {
  std::mt19937_64 rng(2);
  const Dims dims{2, 3, 2};
  const auto psi = random_pure(rng, dims);
  for (const auto& p : enumerate_bipartitions(dims)) {
    const double v = bipartite_concurrence(psi, p);
    const double u = bipartite_concurrence_from_purity(psi, p);
    CHECK(std::abs(v - u) <= 1e-10);
    const double oracle = std::sqrt(2.0 * (1.0 - testsupport::naive_reduced_purity(psi.amplitudes(), dims.values(), p.left)));
    CHECK(std::abs(u - oracle) <= 1e-12);
  }
}

TEST_CASE("concurrence vector matches dense operators") {
  // Component = conj(psi'^T S psi') with psi' in (left, right) order.
  std::mt19937_64 rng(8);
  const Dims dims{2, 2, 3};
  const auto psi = random_pure(rng, dims);
  for (const auto& p : enumerate_bipartitions(dims)) {
    const auto cv = concurrence_vector(psi, p);
    const auto ops = partition_operators(dims, p);
    REQUIRE(cv.components.size() == ops.size());
    const auto order = p.order();
    const CVector moved = permute_subsystems(psi, order).amplitudes();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Complex dense = std::conj((moved.transpose() * ops[i].matrix->cast<Complex>() * moved)(0, 0));
      CHECK(std::abs(cv.components[i] - dense) < 1e-13);
    }
  }
}

TEST_CASE("two-qubit concurrence is twice |ad - bc|") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const auto psi = random_pure(rng, Dims{2, 2});
    const auto& a = psi.amplitudes();
    CHECK(global_entanglement_value(psi) == doctest::Approx(2.0 * std::abs(a[0] * a[3] - a[1] * a[2])).epsilon(1e-12));
  }
}

TEST_CASE("measure is invariant under subsystem relabeling") {
  std::mt19937_64 rng(12);
  const auto psi = random_pure(rng, Dims{2, 3, 2, 2});
  const std::vector<int> perm{3, 1, 0, 2};
  CHECK(global_entanglement_value(permute_subsystems(psi, perm)) ==
        doctest::Approx(global_entanglement_value(psi)).epsilon(1e-12));
}

TEST_CASE("single subsystem has no bipartitions") {
  CVector a = CVector::Zero(2);
  a[0] = 1.0;
  CHECK_THROWS_AS(global_entanglement(PureState(Dims{2}, a)), std::invalid_argument);
}
