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

#include <vector>

#include "globent/linalg.hpp"
#include "globent/mixed_bound.hpp"

namespace globent {

/// A selective operation on one subsystem. outcomes[k] lists the Kraus
/// operators whose results are lumped into outcome k; sum over all of
/// K^dag K must be the identity.
class LocalOperation {
 public:
  LocalOperation(int site, std::vector<std::vector<CMatrix>> outcomes);

  static LocalOperation unitary(int site, const CMatrix& u);
  /// One outcome per projector; projectors must be orthogonal and complete.
  static LocalOperation projective(int site, const std::vector<CMatrix>& projectors);
  /// One outcome per Kraus operator.
  static LocalOperation instrument(int site, const std::vector<CMatrix>& kraus);
  /// A single non-selective outcome.
  static LocalOperation channel(int site, const std::vector<CMatrix>& kraus);

  int site() const noexcept { return site_; }
  const std::vector<std::vector<CMatrix>>& outcomes() const noexcept { return outcomes_; }
  int local_dim() const;

 private:
  int site_;
  std::vector<std::vector<CMatrix>> outcomes_;
};

struct Outcome {
  double probability = 0.0;
  PureState state;
};

struct OutcomeEnsemble {
  std::vector<Outcome> outcomes;
};

/// (op acting on `site`) applied to a state vector, unnormalized.
CVector apply_local(const Dims& dims, const CVector& amplitudes, int site, const CMatrix& op);

PureState apply_local_unitary(const PureState& psi, int site, const CMatrix& u);

/// Outcomes with probability below 1e-14 are dropped.
OutcomeEnsemble measure_local(const PureState& psi, int site, const std::vector<CMatrix>& projectors);

struct MonotoneMargin {
  double value = 0.0;  // C(psi) - sum_k p_k C(outcome_k)
  /// False when some outcome was mixed and its measure was replaced by the
  /// optimized lower bound.
  bool exact = true;
  /// A negative margin computed with lower-bound outcome values does not
  /// count as a violation.
  bool inconclusive = false;
  std::size_t outcomes = 0;
};

MonotoneMargin monotone_margin(const PureState& psi, const LocalOperation& op,
                               const BoundOptions& opts = {});

}  // namespace globent
