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

#include <cstdint>
#include <string>
#include <vector>

namespace globent::checks {

/// Outcome of one randomized or exhaustive property check. `worst` is the
/// extreme observed statistic, compared against `threshold` in the
/// direction given by `comparison` ("<=" or ">=").
struct CheckResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  double worst = 0.0;
  double threshold = 0.0;
  std::string comparison;
  std::string detail;
};

/// Partition counts for N = 2..10 and the four-party split listing.
std::vector<CheckResult> partitions();

/// Vector formula vs purity formula on Haar-random pure states with
/// N in {2,3,4} and local dimensions in {2,3}.
std::vector<CheckResult> equivalence(int trials, std::uint64_t seed);

/// Invariance of the pure measure under random single-site unitaries.
std::vector<CheckResult> lu(int trials, std::uint64_t seed);

/// Non-negative margin under random local projective measurements on
/// random three- and four-qubit states, and zero margin for unitaries.
std::vector<CheckResult> monotone(int trials, std::uint64_t seed);

const std::vector<std::string>& suite_names();

/// Runs a suite by name ("all" runs every suite). Throws
/// std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace globent::checks
