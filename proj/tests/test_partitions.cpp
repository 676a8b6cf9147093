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

#include <set>

#include "globent/partitions.hpp"

using namespace globent;

namespace {

// Sum of C(N, k) over 1 <= k <= N/2, halving the middle term for even N.
std::uint64_t binomial_count(int n) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(n, k)
  for (int k = 1; 2 * k <= n; ++k) {
    c = c * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
    total += (2 * k == n) ? c / 2 : c;
  }
  return total;
}

}  // namespace

TEST_CASE("bipartition counts") {
  CHECK(num_bipartitions(2) == 1);
  CHECK(num_bipartitions(3) == 3);
  CHECK(num_bipartitions(4) == 7);
  for (int n = 2; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(num_bipartitions(n) == (std::uint64_t{1} << (n - 1)) - 1);
    CHECK(num_bipartitions(n) == binomial_count(n));
  }
  CHECK_THROWS_AS(num_bipartitions(1), std::invalid_argument);
}

TEST_CASE("four-party enumeration order") {
  const auto parts = enumerate_bipartitions(Dims{2, 2, 2, 2});
  const std::vector<std::vector<int>> left{{0}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  REQUIRE(parts.size() == left.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(parts[i].left == left[i]);
    CHECK(parts[i].n1 == (std::size_t{1} << left[i].size()));
    CHECK(parts[i].n1 * parts[i].n2 == 16);
  }
  CHECK(parts[0].label() == "{0}|{1,2,3}");
  CHECK(parts[3].order() == std::vector<int>{0, 3, 1, 2});
}

TEST_CASE("enumeration covers every unordered split once") {
  for (int n = 2; n <= 7; ++n) {
    const auto parts = enumerate_bipartitions(Dims(std::vector<int>(static_cast<std::size_t>(n), 2)));
    std::set<std::vector<int>> seen;
    for (const auto& p : parts) {
      CHECK(!p.left.empty());
      CHECK(!p.right.empty());
      CHECK(p.left.front() == 0);
      seen.insert(p.left);
      seen.insert(p.right);
    }
    CHECK(seen.size() == 2 * parts.size());
    CHECK(parts.size() == num_bipartitions(n));
  }
}

TEST_CASE("make_bipartition canonicalizes") {
  const Dims dims{2, 3, 2};
  const auto p = make_bipartition(dims, std::vector<int>{2, 1});
  CHECK(p.left == std::vector<int>{0});
  CHECK(p.right == std::vector<int>{1, 2});
  CHECK(p.n1 == 2);
  CHECK(p.n2 == 6);
  CHECK(p == make_bipartition(dims, std::vector<int>{0}));
  CHECK_THROWS_AS(make_bipartition(dims, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(make_bipartition(dims, std::vector<int>{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_bipartition(dims, std::vector<int>{5}), std::invalid_argument);
}
