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

#include "globent/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "globent/channels.hpp"
#include "globent/partitions.hpp"
#include "globent/pure_measure.hpp"
#include "globent/state_zoo.hpp"

namespace globent::checks {

namespace {

constexpr double kEquivalenceTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr double kMonotoneTol = -1e-8;

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t suite, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite,
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PureState random_state(std::mt19937_64& rng, const Dims& dims) {
  return haar_random_pure(dims, rng());
}

std::vector<CMatrix> random_rank_one_projectors(std::mt19937_64& rng, int d) {
  const CMatrix u = haar_unitary(d, rng);
  std::vector<CMatrix> out;
  for (int i = 0; i < d; ++i) out.push_back(u.col(i) * u.col(i).adjoint());
  return out;
}

CheckResult make(std::string name, int trials, double worst, double threshold,
                 std::string comparison, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.trials = trials;
  r.worst = worst;
  r.threshold = threshold;
  r.passed = comparison == "<=" ? worst <= threshold : worst >= threshold;
  r.comparison = std::move(comparison);
  r.detail = std::move(detail);
  return r;
}

void require_trials(int trials) {
  if (trials < 1) throw std::invalid_argument("checks: trials must be >= 1");
}

}  // namespace

std::vector<CheckResult> partitions() {
  std::vector<CheckResult> out;
  for (int n = 2; n <= 10; ++n) {
    const auto formula = num_bipartitions(n);
    const std::uint64_t closed = (std::uint64_t{1} << (n - 1)) - 1;
    const auto listed = enumerate_bipartitions(Dims(std::vector<int>(static_cast<std::size_t>(n), 2)));

    std::set<std::vector<int>> lefts;
    bool complements = false;
    for (const auto& b : listed) {
      lefts.insert(b.left);
      if (lefts.count(b.right)) complements = true;
    }
    const bool ok = formula == closed && listed.size() == closed && lefts.size() == listed.size() &&
                    !complements;
    std::ostringstream detail;
    detail << "formula " << formula << ", 2^(N-1)-1 = " << closed << ", enumerated " << listed.size();
    out.push_back(make("partitions N=" + std::to_string(n), 1, ok ? 0.0 : 1.0, 0.0, "<=", detail.str()));
  }

  // Four parties: A|BCD, AB|CD, AC|BD, AD|BC, ABC|D, ABD|C, ACD|B.
  const std::vector<std::vector<int>> expected_left = {{0},       {0, 1},    {0, 2},   {0, 3},
                                                       {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  std::vector<std::vector<int>> got;
  for (const auto& b : enumerate_bipartitions(Dims{2, 2, 2, 2})) got.push_back(b.left);
  out.push_back(make("four-party split listing", 1, got == expected_left ? 0.0 : 1.0, 0.0, "<=",
                     "7 splits: {0},{0,1},{0,2},{0,3},{0,1,2},{0,1,3},{0,2,3}"));
  return out;
}

std::vector<CheckResult> equivalence(int trials, std::uint64_t seed) {
  require_trials(trials);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 0x657175u, t);
    std::vector<int> dims(static_cast<std::size_t>(pick(rng, 2, 4)));
    for (auto& d : dims) d = pick(rng, 2, 3);
    const auto psi = random_state(rng, Dims(dims));
    const auto report = global_entanglement(psi);
    worst = std::max(worst, std::abs(report.value_vector_formula - report.value_purity_formula));
  }
  return {make("vector formula vs purity formula", trials, worst, kEquivalenceTol, "<=",
               "max |difference|")};
}

std::vector<CheckResult> lu(int trials, std::uint64_t seed) {
  require_trials(trials);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 0x6c75u, t);
    std::vector<int> dims(static_cast<std::size_t>(pick(rng, 2, 4)));
    for (auto& d : dims) d = pick(rng, 2, 3);
    const auto psi = random_state(rng, Dims(dims));
    const int site = pick(rng, 0, static_cast<int>(dims.size()) - 1);
    const CMatrix u = haar_unitary(dims[static_cast<std::size_t>(site)], rng);
    const auto moved = apply_local_unitary(psi, site, u);
    worst = std::max(worst, std::abs(global_entanglement_value(moved) - global_entanglement_value(psi)));
  }
  return {make("local-unitary invariance", trials, worst, kUnitaryTol, "<=", "max |change|")};
}

std::vector<CheckResult> monotone(int trials, std::uint64_t seed) {
  require_trials(trials);
  double min_margin = std::numeric_limits<double>::infinity();
  double worst_unitary = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 0x6d6f6eu, t);
    const int n = pick(rng, 3, 4);
    const Dims dims(std::vector<int>(static_cast<std::size_t>(n), 2));
    const auto psi = random_state(rng, dims);
    const int site = pick(rng, 0, n - 1);

    const auto measurement = LocalOperation::projective(site, random_rank_one_projectors(rng, 2));
    min_margin = std::min(min_margin, monotone_margin(psi, measurement).value);

    const auto unitary = LocalOperation::unitary(site, haar_unitary(2, rng));
    worst_unitary = std::max(worst_unitary, std::abs(monotone_margin(psi, unitary).value));
  }
  return {make("projective-measurement margin", trials, min_margin, kMonotoneTol, ">=", "min margin"),
          make("local-unitary margin", trials, worst_unitary, kUnitaryTol, "<=", "max |margin|")};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"equivalence", "lu", "monotone", "partitions"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, int trials, std::uint64_t seed) {
  if (name == "partitions") return partitions();
  if (name == "equivalence") return equivalence(trials, seed);
  if (name == "lu") return lu(trials, seed);
  if (name == "monotone") return monotone(trials, seed);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, trials, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown check suite '" + name + "'");
}

}  // namespace globent::checks
