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

#include "globent/mixed_bound.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <ceres/ceres.h>

#include "globent/generators.hpp"
#include "globent/pure_measure.hpp"

namespace globent {

namespace {

// Continuation schedule for the smoothing width, relative to the largest
// A-matrix norm. Only the singular values below the top one are smoothed:
// they enter with a minus sign, so their kinks at zero are the ones a
// maximizer gets stuck on.
constexpr std::array<double, 8> kSmoothingSchedule = {1e-1, 3e-2, 1e-2, 3e-3,
                                                      1e-3, 1e-4, 1e-5, 1e-6};

CMatrix combine(const AMatrixSet& aset, const CVector& z) {
  const auto k = static_cast<Eigen::Index>(aset.rank());
  CMatrix b = CMatrix::Zero(k, k);
  for (std::size_t i = 0; i < aset.size(); ++i) b += z[static_cast<Eigen::Index>(i)] * aset.entries[i];
  return b;
}

double signed_sum(const RVector& s) {
  double v = s.size() > 0 ? s[0] : 0.0;
  for (Eigen::Index i = 1; i < s.size(); ++i) v -= s[i];
  return v;
}

// Cost for ceres: minus the smoothed objective of z = x / |x|, where x packs
// (Re z, Im z).
class SmoothedObjective final : public ceres::FirstOrderFunction {
 public:
  SmoothedObjective(const AMatrixSet& aset, double eps) : aset_(aset), eps_(eps) {}

  int NumParameters() const override { return 2 * static_cast<int>(aset_.size()); }

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const auto m = static_cast<Eigen::Index>(aset_.size());
    Eigen::Map<const RVector> x(parameters, 2 * m);
    const double n = x.norm();
    if (!(n > 0.0) || !std::isfinite(n)) return false;
    CVector z(m);
    for (Eigen::Index i = 0; i < m; ++i) z[i] = Complex(x[i], x[m + i]) / n;

    const CMatrix b = combine(aset_, z);
    const int flags = gradient ? (Eigen::ComputeFullU | Eigen::ComputeFullV) : 0;
    Eigen::JacobiSVD<CMatrix> svd(b, flags);
    const RVector& s = svd.singularValues();

    double f = s[0];
    RVector w(s.size());
    w[0] = 1.0;
    for (Eigen::Index i = 1; i < s.size(); ++i) {
      const double r = std::sqrt(s[i] * s[i] + eps_ * eps_);
      f -= r - eps_;
      w[i] = -s[i] / r;
    }
    *cost = -f;
    if (!gradient) return true;

    // d sigma_j = Re(u_j^H dB v_j), so df = Re(sum_i c_i dz_i) with
    // c_i = sum_ab conj(W)_ab (A_i)_ab and W = sum_j w_j u_j v_j^H.
    const CMatrix wm = svd.matrixU() * w.asDiagonal() * svd.matrixV().adjoint();
    RVector gz(2 * m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Complex c = (wm.conjugate().cwiseProduct(aset_.entries[static_cast<std::size_t>(i)])).sum();
      gz[i] = c.real();
      gz[m + i] = -c.imag();
    }
    // Chain rule through the normalization z = x / |x|.
    const RVector xhat = x / n;
    const RVector gx = (gz - gz.dot(xhat) * xhat) / n;
    Eigen::Map<RVector>(gradient, 2 * m) = -gx;
    return true;
  }

 private:
  const AMatrixSet& aset_;
  double eps_;
};

struct RestartOutcome {
  double raw = -std::numeric_limits<double>::infinity();
  CVector z;
  bool converged = false;
};

CVector random_unit_vector(std::size_t m, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x9e3779b9u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector z(static_cast<Eigen::Index>(m));
  for (auto& c : z) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = Complex(re, im);
  }
  return z / z.norm();
}

RestartOutcome run_restart(const AMatrixSet& aset, const BoundOptions& opts, double scale,
                           int restart) {
  const auto m = static_cast<Eigen::Index>(aset.size());
  const CVector z0 = random_unit_vector(aset.size(), opts.seed, restart);
  RVector x(2 * m);
  x.head(m) = z0.real();
  x.tail(m) = z0.imag();

  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::BFGS;
  options.max_num_iterations = opts.max_iters;
  options.function_tolerance = opts.tol;
  options.gradient_tolerance = 1e-4 * opts.tol;
  options.parameter_tolerance = 1e-12;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;

  RestartOutcome out;
  for (double rel : kSmoothingSchedule) {
    ceres::GradientProblem problem(new SmoothedObjective(aset, rel * scale));
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(options, problem, x.data(), &summary);
    out.converged = summary.termination_type == ceres::CONVERGENCE;
    x /= x.norm();
  }
  out.z.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) out.z[i] = Complex(x[i], x[m + i]);
  out.z /= out.z.norm();
  out.raw = signed_sum(singular_values(combine(aset, out.z)));
  return out;
}

void check_partitions(const Dims& dims, const std::vector<Bipartition>& partitions) {
  if (partitions.empty()) throw std::invalid_argument("at least one bipartition is required");
  for (const auto& p : partitions) {
    if (p.left.size() + p.right.size() != dims.size() || dims.block_total(p.left) != p.n1 ||
        dims.block_total(p.right) != p.n2) {
      throw std::invalid_argument("bipartition does not match the state's dimensions");
    }
  }
}

// Rank one: the maximizer of |sum_i z_i a_i| is z = conj(a) / |a|, and with
// Phi = psi the A-values are conj(C_i), so z is the normalized concurrence
// vector.
BoundResult rank_one_bound(const DensityMatrix& rho, const SpectralDecomp& decomp,
                           const std::vector<Bipartition>& partitions) {
  const auto psi = PureState::normalized(rho.dims(), decomp.eigenvectors.col(0));
  std::vector<Complex> c;
  for (const auto& p : partitions) {
    const auto v = concurrence_vector(psi, p);
    c.insert(c.end(), v.components.begin(), v.components.end());
  }
  CVector z = Eigen::Map<const CVector>(c.data(), static_cast<Eigen::Index>(c.size()));
  const double norm = z.norm();
  BoundResult r;
  r.rank = 1;
  r.exact = true;
  r.converged = true;
  r.raw_objective = norm * decomp.eigenvalues[0];
  r.value = std::max(0.0, r.raw_objective);
  if (norm > 0.0) {
    r.best_z = CoefficientVector::normalized(std::move(z));
  } else {
    CVector e = CVector::Zero(static_cast<Eigen::Index>(c.size()));
    e[0] = 1.0;
    r.best_z = CoefficientVector(std::move(e));
  }
  return r;
}

BoundResult bound_over(const DensityMatrix& rho, std::vector<Bipartition> partitions,
                       const BoundOptions& opts) {
  auto decomp = spectral_decomposition(rho);
  if (decomp.rank() == 1) return rank_one_bound(rho, decomp, partitions);
  return maximize_lower_bound(build_a_matrices(rho, std::move(partitions)), opts);
}

}  // namespace

CoefficientVector::CoefficientVector(CVector z) : z_(std::move(z)) {
  const double defect = std::abs(z_.norm() - 1.0);
  if (!(defect <= 1e-12)) throw InvariantError("unit-norm coefficient vector", defect);
}

CoefficientVector CoefficientVector::normalized(CVector z) {
  const double n = z.norm();
  if (!(n > 0.0)) throw InvariantError("nonzero coefficient vector", n);
  return CoefficientVector(z / n);
}

AMatrixSet build_a_matrices(const DensityMatrix& rho) {
  if (rho.num_subsystems() < 2) {
    throw std::invalid_argument("build_a_matrices: at least two subsystems are required");
  }
  return build_a_matrices(rho, enumerate_bipartitions(rho.dims()));
}

AMatrixSet build_a_matrices(const DensityMatrix& rho, std::vector<Bipartition> partitions) {
  check_partitions(rho.dims(), partitions);
  AMatrixSet set;
  set.dims = rho.dims();
  set.decomp = spectral_decomposition(rho);
  if (set.decomp.rank() == 0) {
    throw std::invalid_argument("build_a_matrices: no eigenvalue above the rank tolerance");
  }
  const RVector root = set.decomp.eigenvalues.cwiseSqrt();
  const CMatrix scaled = set.decomp.eigenvectors * root.asDiagonal();

  for (std::size_t p = 0; p < partitions.size(); ++p) {
    const auto& part = partitions[p];
    const CMatrix w = permute_columns(set.dims, scaled, part.order());
    const CMatrix wt = w.transpose();
    const auto mats = cached_operator_matrices(part.n1, part.n2);
    const int q = static_cast<int>(part.n2 * (part.n2 - 1) / 2);
    for (std::size_t i = 0; i < mats->size(); ++i) {
      CMatrix a = wt * (*mats)[i].cast<Complex>() * w;
      // Exactly symmetric in exact arithmetic (S is symmetric).
      a = 0.5 * (a + a.transpose()).eval();
      set.entries.push_back(std::move(a));
      set.index.push_back(AIndex{p, static_cast<int>(i) / q, static_cast<int>(i) % q});
    }
  }
  set.partitions = std::move(partitions);
  return set;
}

double objective(const AMatrixSet& aset, const CoefficientVector& z) {
  if (z.size() != aset.size()) throw std::invalid_argument("objective: length mismatch");
  return signed_sum(singular_values(combine(aset, z.values())));
}

BoundResult maximize_lower_bound(const AMatrixSet& aset, const BoundOptions& opts) {
  if (opts.restarts < 1) throw std::invalid_argument("maximize_lower_bound: restarts must be >= 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("maximize_lower_bound: tol must be > 0");
  if (opts.max_iters < 1) throw std::invalid_argument("maximize_lower_bound: max_iters must be >= 1");
  if (aset.size() == 0) throw std::invalid_argument("maximize_lower_bound: empty A-matrix set");

  double scale = 0.0;
  for (const auto& a : aset.entries) scale = std::max(scale, a.norm());
  if (scale == 0.0) scale = 1.0;

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < opts.restarts; r = next++) {
      outcomes[static_cast<std::size_t>(r)] = run_restart(aset, opts, scale, r);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(opts.restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  BoundResult result;
  result.rank = aset.rank();
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.objective_trace.push_back(outcomes[r].raw);
    if (outcomes[r].raw > outcomes[best].raw) best = r;
  }
  result.raw_objective = outcomes[best].raw;
  result.value = std::max(0.0, result.raw_objective);
  result.best_z = CoefficientVector::normalized(outcomes[best].z);
  result.restarts_used = opts.restarts;
  result.converged = outcomes[best].converged;
  return result;
}

BoundResult global_lower_bound(const DensityMatrix& rho, const BoundOptions& opts) {
  if (rho.num_subsystems() < 2) {
    throw std::invalid_argument("global_lower_bound: at least two subsystems are required");
  }
  return bound_over(rho, enumerate_bipartitions(rho.dims()), opts);
}

BoundResult partition_lower_bound(const DensityMatrix& rho, const Bipartition& partition,
                                  const BoundOptions& opts) {
  check_partitions(rho.dims(), {partition});
  return bound_over(rho, {partition}, opts);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) {
    throw std::invalid_argument("wootters_concurrence: requires dims [2,2]");
  }
  // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
  RMatrix yy = RMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const CMatrix& r = rho.entries();
  const CMatrix tilde = yy.cast<Complex>() * r.conjugate() * yy.cast<Complex>();

  // Eigenvalues of rho * tilde equal those of the Hermitian PSD matrix
  // sqrt(rho) tilde sqrt(rho).
  Eigen::SelfAdjointEigenSolver<CMatrix> es(r);
  const RVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix root = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  CMatrix h = root * tilde * root;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> hs(h, Eigen::EigenvaluesOnly);
  RVector mu = hs.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

}  // namespace globent
