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
#include <set>

#include "globent/state_zoo.hpp"
#include "globent/tangles.hpp"
#include "support.hpp"

using namespace globent;

namespace {

// Three-qubit residual tangle from the hyperdeterminant of the amplitudes.
double hyperdeterminant_tangle(const CVector& a) {
  const auto c = [&](int i, int j, int k) { return a[4 * i + 2 * j + k]; };
  const Complex d1 = c(0, 0, 0) * c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 1) + c(0, 0, 1) * c(0, 0, 1) * c(1, 1, 0) * c(1, 1, 0) +
                     c(0, 1, 0) * c(0, 1, 0) * c(1, 0, 1) * c(1, 0, 1) + c(1, 0, 0) * c(1, 0, 0) * c(0, 1, 1) * c(0, 1, 1);
  const Complex d2 = c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0) + c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0) +
                     c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1) + c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0) +
                     c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1) + c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1);
  const Complex d3 = c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1) + c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace

TEST_CASE("GHZ and W three-tangles") {
  const auto g = three_tangle(ghz(3), 0);
  CHECK(g.focus == "A(BC)");
  CHECK(g.lhs_label == "C^2_A(BC)");
  CHECK(g.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(g.residual - 1.0) <= 1e-8);
  CHECK(g.all_exact());
  REQUIRE(g.components.size() == 2);
  CHECK(g.components[0].name == "C^2_AB");
  CHECK(g.components[1].name == "C^2_AC");

  const auto w = three_tangle(w_state(3), 1);
  CHECK(w.focus == "B(AC)");
  CHECK(w.lhs == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(w.components[0].value == doctest::Approx(4.0 / 9.0).epsilon(1e-10));
  CHECK(std::abs(w.residual) <= 1e-6);
}

TEST_CASE("residual tangle matches the hyperdeterminant and is focus independent") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    const PureState psi(Dims{2, 2, 2}, testsupport::gaussian_vector(rng, 8));
    const double oracle = hyperdeterminant_tangle(psi.amplitudes());
    for (int focus = 0; focus < 3; ++focus) {
      // Rank-two reductions put rounding-level eigenvalues under a square
      // root in the pair concurrences, which limits agreement to ~1e-8.
      CHECK(std::abs(three_tangle(psi, focus).residual - oracle) <= 1e-7);
    }
  }
}

TEST_CASE("three_tangle argument checks") {
  CHECK_THROWS_AS(three_tangle(ghz(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(three_tangle(ghz(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(three_tangle(ghz(3, 3), 0), std::invalid_argument);
}

TEST_CASE("mixed focus report carries exactness flags") {
  const auto r = tangle_mixed_focus(upb_shifts(), 0);
  CHECK(r.focus == "A(BC)");
  CHECK(r.lhs_exactness == Exactness::kLowerBound);
  REQUIRE(r.components.size() == 2);
  for (const auto& c : r.components) CHECK(c.exactness == Exactness::kExact);
  CHECK_FALSE(r.all_exact());
  CHECK(std::string(to_string(Exactness::kExact)) == "exact");

  const auto pure = tangle_mixed_focus(DensityMatrix::from_pure(ghz(3)), 2);
  CHECK(pure.lhs_exactness == Exactness::kExact);
  CHECK(pure.residual == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("four-party audit lists ten groupings") {
  std::mt19937_64 rng(29);
  const PureState psi(Dims{2, 2, 2, 2}, testsupport::gaussian_vector(rng, 16));
  BoundOptions opts;
  opts.restarts = 8;
  const auto audit = four_partite_audit(psi, opts);
  REQUIRE(audit.groupings.size() == 10);
  std::set<std::string> labels;
  for (const auto& g : audit.groupings) labels.insert(g.focus);
  CHECK(labels.size() == 10);
  CHECK(labels.count("A(BC)D") == 1);
  CHECK(labels.count("(AB)CD") == 1);
  CHECK(audit.complementary_defect <= 1e-10);

  for (const auto& g : audit.groupings) {
    CHECK(g.lhs_exactness == Exactness::kExact);
    double sum = 0.0;
    for (const auto& c : g.components) sum += c.value;
    CHECK(g.residual == doctest::Approx(g.lhs - sum).epsilon(1e-12));
  }

  const auto& first = audit.groupings.front();
  CHECK(first.lhs_label == "C^2_A(BCD)");
  CHECK(first.lhs == doctest::Approx(2.0 * (1.0 - reduced_purity(psi, std::vector<int>{0}))).epsilon(1e-12));
  CHECK_THROWS_AS(four_partite_audit(ghz(3)), std::invalid_argument);
}

TEST_CASE("GHZ4 audit") {
  const auto audit = four_partite_audit(ghz(4));
  for (const auto& g : audit.groupings) {
    CHECK(g.lhs == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& c : g.components) CHECK(c.value <= 1e-6);
  }
}

TEST_CASE("subsystem letters") {
  CHECK(subsystem_letter(0) == 'A');
  CHECK(subsystem_letter(3) == 'D');
}
