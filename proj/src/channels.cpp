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

#include "globent/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "globent/pure_measure.hpp"

namespace globent {

namespace {

constexpr double kOperatorTolerance = 1e-10;
constexpr double kMinProbability = 1e-14;

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void check_site(const Dims& dims, int site) {
  if (site < 0 || static_cast<std::size_t>(site) >= dims.size()) {
    throw std::invalid_argument("local operation: site out of range");
  }
}

void check_projectors(const std::vector<CMatrix>& projectors) {
  if (projectors.empty()) throw std::invalid_argument("projective measurement: no projectors");
  const auto d = projectors.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const auto& p = projectors[i];
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("projective measurement: projector dimensions differ");
    }
    const double herm = max_abs(p - p.adjoint());
    const double idem = max_abs(p * p - p);
    if (herm > kOperatorTolerance) throw InvariantError("Hermitian projector", herm);
    if (idem > kOperatorTolerance) throw InvariantError("idempotent projector", idem);
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      const double overlap = max_abs(p * projectors[j]);
      if (overlap > kOperatorTolerance) throw InvariantError("orthogonal projectors", overlap);
    }
    sum += p;
  }
  const double defect = max_abs(sum - CMatrix::Identity(d, d));
  if (defect > kOperatorTolerance) throw InvariantError("complete projectors", defect);
}

}  // namespace

LocalOperation::LocalOperation(int site, std::vector<std::vector<CMatrix>> outcomes)
    : site_(site), outcomes_(std::move(outcomes)) {
  if (site_ < 0) throw std::invalid_argument("local operation: negative site");
  if (outcomes_.empty()) throw std::invalid_argument("local operation: no outcomes");
  Eigen::Index d = -1;
  CMatrix sum;
  for (const auto& outcome : outcomes_) {
    if (outcome.empty()) throw std::invalid_argument("local operation: empty outcome");
    for (const auto& k : outcome) {
      if (d < 0) {
        d = k.rows();
        sum = CMatrix::Zero(d, d);
      }
      if (k.rows() != d || k.cols() != d) {
        throw std::invalid_argument("local operation: Kraus operators must be square of equal size");
      }
      sum += k.adjoint() * k;
    }
  }
  const double defect = max_abs(sum - CMatrix::Identity(d, d));
  if (defect > kOperatorTolerance) throw InvariantError("trace preserving", defect);
}

LocalOperation LocalOperation::unitary(int site, const CMatrix& u) { return LocalOperation(site, {{u}}); }

LocalOperation LocalOperation::projective(int site, const std::vector<CMatrix>& projectors) {
  check_projectors(projectors);
  std::vector<std::vector<CMatrix>> outcomes;
  for (const auto& p : projectors) outcomes.push_back({p});
  return LocalOperation(site, std::move(outcomes));
}

LocalOperation LocalOperation::instrument(int site, const std::vector<CMatrix>& kraus) {
  std::vector<std::vector<CMatrix>> outcomes;
  for (const auto& k : kraus) outcomes.push_back({k});
  return LocalOperation(site, std::move(outcomes));
}

LocalOperation LocalOperation::channel(int site, const std::vector<CMatrix>& kraus) {
  return LocalOperation(site, {kraus});
}

int LocalOperation::local_dim() const { return static_cast<int>(outcomes_.front().front().rows()); }

CVector apply_local(const Dims& dims, const CVector& amplitudes, int site, const CMatrix& op) {
  check_site(dims, site);
  const auto s = static_cast<std::size_t>(site);
  const auto d = static_cast<Eigen::Index>(dims[s]);
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("local operation: operator dimension does not match the site");
  }
  std::size_t right = 1;
  for (std::size_t k = s + 1; k < dims.size(); ++k) right *= static_cast<std::size_t>(dims[k]);
  const std::size_t left = dims.total() / (right * static_cast<std::size_t>(d));

  CVector out = CVector::Zero(amplitudes.size());
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      const auto base = static_cast<Eigen::Index>(l * static_cast<std::size_t>(d) * right + r);
      const auto stride = static_cast<Eigen::Index>(right);
      for (Eigen::Index i = 0; i < d; ++i) {
        Complex acc = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) acc += op(i, j) * amplitudes[base + j * stride];
        out[base + i * stride] = acc;
      }
    }
  }
  return out;
}

PureState apply_local_unitary(const PureState& psi, int site, const CMatrix& u) {
  check_site(psi.dims(), site);
  if (u.rows() != u.cols()) throw std::invalid_argument("apply_local_unitary: matrix is not square");
  const double defect = max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
  if (defect > kOperatorTolerance) throw InvariantError("unitary", defect);
  return PureState::normalized(psi.dims(), apply_local(psi.dims(), psi.amplitudes(), site, u));
}

OutcomeEnsemble measure_local(const PureState& psi, int site, const std::vector<CMatrix>& projectors) {
  check_site(psi.dims(), site);
  check_projectors(projectors);
  OutcomeEnsemble ensemble;
  for (const auto& p : projectors) {
    CVector v = apply_local(psi.dims(), psi.amplitudes(), site, p);
    const double prob = v.squaredNorm();
    if (prob < kMinProbability) continue;
    ensemble.outcomes.push_back(Outcome{prob, PureState::normalized(psi.dims(), std::move(v))});
  }
  return ensemble;
}

MonotoneMargin monotone_margin(const PureState& psi, const LocalOperation& op,
                               const BoundOptions& opts) {
  check_site(psi.dims(), op.site());
  if (op.local_dim() != psi.dims()[static_cast<std::size_t>(op.site())]) {
    throw std::invalid_argument("monotone_margin: operator dimension does not match the site");
  }
  MonotoneMargin margin;
  double average = 0.0;
  for (const auto& outcome : op.outcomes()) {
    if (outcome.size() == 1) {
      CVector v = apply_local(psi.dims(), psi.amplitudes(), op.site(), outcome.front());
      const double prob = v.squaredNorm();
      if (prob < kMinProbability) continue;
      average += prob * global_entanglement_value(PureState::normalized(psi.dims(), std::move(v)));
      ++margin.outcomes;
      continue;
    }
    const auto dim = static_cast<Eigen::Index>(psi.dims().total());
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (const auto& k : outcome) {
      const CVector v = apply_local(psi.dims(), psi.amplitudes(), op.site(), k);
      rho += v * v.adjoint();
    }
    const double prob = rho.trace().real();
    if (prob < kMinProbability) continue;
    const auto bound = global_lower_bound(DensityMatrix::hermitized(psi.dims(), rho / prob), opts);
    if (!bound.exact) margin.exact = false;
    average += prob * bound.value;
    ++margin.outcomes;
  }
  margin.value = global_entanglement_value(psi) - average;
  margin.inconclusive = !margin.exact && margin.value < 0.0;
  return margin;
}

}  // namespace globent
