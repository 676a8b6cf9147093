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

#include "globent/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace globent {

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

void append_set(std::ostringstream& os, const std::vector<int>& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
}

}  // namespace

std::vector<int> Bipartition::order() const {
  std::vector<int> o = left;
  o.insert(o.end(), right.begin(), right.end());
  return o;
}

std::string Bipartition::label() const {
  std::ostringstream os;
  append_set(os, left);
  os << '|';
  append_set(os, right);
  return os.str();
}

Bipartition make_bipartition(const Dims& dims, std::span<const int> block) {
  std::vector<int> side(block.begin(), block.end());
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  for (int s : side) {
    if (s < 0 || static_cast<std::size_t>(s) >= dims.size()) {
      throw std::invalid_argument("bipartition: subsystem index out of range");
    }
  }
  auto other = complement(side, dims.size());
  if (side.empty() || other.empty()) {
    throw std::invalid_argument("bipartition: both blocks must be nonempty");
  }
  Bipartition b;
  if (side.front() == 0) {
    b.left = std::move(side);
    b.right = std::move(other);
  } else {
    b.left = std::move(other);
    b.right = std::move(side);
  }
  b.n1 = dims.block_total(b.left);
  b.n2 = dims.block_total(b.right);
  return b;
}

std::uint64_t num_bipartitions(int n) {
  if (n < 2) {
    throw std::invalid_argument("num_bipartitions: at least two subsystems are required");
  }
  if (n > 62) {
    throw std::invalid_argument("num_bipartitions: subsystem count too large");
  }
  std::uint64_t total = 0;
  if (n % 2 == 0) {
    for (int i = 1; i <= (n - 2) / 2; ++i) total += binomial(n, i);
    total += binomial(n, n / 2) / 2;
  } else {
    for (int i = 1; i <= (n - 1) / 2; ++i) total += binomial(n, i);
  }
  return total;
}

std::vector<Bipartition> enumerate_bipartitions(const Dims& dims) {
  const int n = static_cast<int>(dims.size());
  if (n < 2) {
    throw std::invalid_argument("enumerate_bipartitions: at least two subsystems are required");
  }
  if (n > 30) {
    throw std::invalid_argument("enumerate_bipartitions: subsystem count too large");
  }
  // Subsets of {1..n-1} joined with 0, excluding the full set.
  std::vector<std::vector<int>> lefts;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask + 1 < limit; ++mask) {
    std::vector<int> left{0};
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) left.push_back(i);
    }
    lefts.push_back(std::move(left));
  }
  std::sort(lefts.begin(), lefts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<Bipartition> out;
  out.reserve(lefts.size());
  for (const auto& left : lefts) out.push_back(make_bipartition(dims, left));
  return out;
}

}  // namespace globent
