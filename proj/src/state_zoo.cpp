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

#include "globent/state_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace globent {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CVector basis_vector(std::size_t dim, std::size_t index) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

CVector qubit(char label) {
  switch (label) {
    case '0': return basis_vector(2, 0);
    case '1': return basis_vector(2, 1);
    case '+': return CVector{{Complex(kInvSqrt2), Complex(kInvSqrt2)}};
    case '-': return CVector{{Complex(kInvSqrt2), Complex(-kInvSqrt2)}};
    default: throw std::invalid_argument(std::string("product: unknown qubit label '") + label + "'");
  }
}

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

CVector complex_gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(static_cast<Eigen::Index>(n));
  for (auto& c : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = Complex(re, im);
  }
  return v;
}

// Canonical family name: lower case, underscores replaced by hyphens.
std::string canonical_family(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) {
    return ch == '_' ? '-' : static_cast<char>(std::tolower(ch));
  });
  return name;
}

class ParamReader {
 public:
  ParamReader(const StateSpec& spec, std::set<std::string> allowed)
      : spec_(spec), family_(canonical_family(spec.family)) {
    for (const auto& [key, value] : spec.parameters) {
      if (!allowed.count(key)) {
        throw ZooError("family '" + family_ + "' has no parameter '" + key + "'");
      }
    }
  }

  double real(const std::string& key, double fallback) const {
    const auto it = spec_.parameters.find(key);
    if (it == spec_.parameters.end()) return fallback;
    return parse_real(key, it->second);
  }

  int integer(const std::string& key, int fallback) const {
    const auto it = spec_.parameters.find(key);
    if (it == spec_.parameters.end()) return fallback;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it->second.size()) bad(key, it->second);
    return v;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = spec_.parameters.find(key);
    return it == spec_.parameters.end() ? fallback : it->second;
  }

  std::uint64_t seed() const {
    const auto it = spec_.parameters.find("seed");
    if (it != spec_.parameters.end()) {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(it->second, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != it->second.size()) bad("seed", it->second);
      return v;
    }
    return spec_.seed.value_or(0);
  }

  Dims dims(const std::string& fallback) const {
    const std::string raw = text("dims", fallback);
    std::vector<int> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) bad("dims", raw);
      out.push_back(v);
    }
    try {
      return Dims(std::move(out));
    } catch (const std::invalid_argument&) {
      bad("dims", raw);
    }
  }

  [[noreturn]] void bad(const std::string& key, const std::string& value) const {
    throw ZooError("family '" + family_ + "': invalid value '" + value + "' for '" + key + "'");
  }

 private:
  double parse_real(const std::string& key, const std::string& raw) const {
    // Accepts plain numbers and simple fractions such as 1/3.
    const auto slash = raw.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const double v = std::stod(raw, &used);
        if (used == raw.size() && std::isfinite(v)) return v;
      } else {
        const std::string num = raw.substr(0, slash);
        const std::string den = raw.substr(slash + 1);
        std::size_t un = 0, ud = 0;
        const double n = std::stod(num, &un);
        const double d = std::stod(den, &ud);
        if (un == num.size() && ud == den.size() && d != 0.0 && std::isfinite(n / d)) return n / d;
      }
    } catch (const std::exception&) {
    }
    bad(key, raw);
  }

  const StateSpec& spec_;
  std::string family_;
};

// Wraps constructor argument errors as zoo errors.
template <typename F>
ZooState guarded(const std::string& family, F&& build) {
  try {
    return build();
  } catch (const ZooError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ZooError("family '" + family + "': " + e.what());
  }
}

}  // namespace

PureState ghz(int n, int d) {
  if (n < 2) throw std::invalid_argument("ghz: n must be >= 2");
  if (d < 2) throw std::invalid_argument("ghz: d must be >= 2");
  Dims dims(std::vector<int>(static_cast<std::size_t>(n), d));
  CVector a = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
  // |k...k> sits at k * (d^{n-1} + ... + 1).
  std::size_t step = 0;
  for (int i = 0; i < n; ++i) step = step * static_cast<std::size_t>(d) + 1;
  for (int k = 0; k < d; ++k) a[static_cast<Eigen::Index>(static_cast<std::size_t>(k) * step)] = 1.0;
  return PureState::normalized(std::move(dims), std::move(a));
}

PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w: n must be >= 2");
  Dims dims(std::vector<int>(static_cast<std::size_t>(n), 2));
  CVector a = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
  for (int i = 0; i < n; ++i) a[Eigen::Index{1} << i] = 1.0;
  return PureState::normalized(std::move(dims), std::move(a));
}

PureState bell() { return ghz(2, 2); }

PureState product(std::string_view labels) {
  if (labels.empty()) throw std::invalid_argument("product: no qubit labels");
  std::vector<CVector> factors;
  for (char c : labels) factors.push_back(qubit(c));
  return product(factors);
}

PureState product(const std::vector<CVector>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  std::vector<int> dims;
  CVector state = CVector::Ones(1);
  for (const auto& f : factors) {
    const double n = f.norm();
    if (!(n > 0.0)) throw std::invalid_argument("product: zero factor");
    dims.push_back(static_cast<int>(f.size()));
    state = kron(state, f / n);
  }
  return PureState::normalized(Dims(std::move(dims)), std::move(state));
}

std::array<CVector, 4> upb_shifts_vectors() {
  auto triple = [](char a, char b, char c) { return kron(kron(qubit(a), qubit(b)), qubit(c)); };
  return {triple('0', '1', '+'), triple('1', '+', '0'), triple('+', '0', '1'),
          triple('-', '-', '-')};
}

DensityMatrix upb_shifts() {
  CMatrix m = CMatrix::Identity(8, 8);
  for (const auto& v : upb_shifts_vectors()) m -= projector(v);
  return DensityMatrix::hermitized(Dims{2, 2, 2}, m / 4.0);
}

DensityMatrix dct(double lambda0_plus, double lambda0_minus, double lambda01, double lambda10,
                  double lambda11) {
  const std::array<double, 5> w{lambda0_plus, lambda0_minus, lambda01, lambda10, lambda11};
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument("dct: weights must be nonnegative");
  }
  const double sum = lambda0_plus + lambda0_minus + 2.0 * (lambda01 + lambda10 + lambda11);
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("dct: weights must satisfy l0+ + l0- + 2(l01 + l10 + l11) = 1");
  }
  // |Psi_k^s> = (|k1 k2 0> + s |~k1 ~k2 1>) / sqrt(2); index of |b0 b1 b2> is 4 b0 + 2 b1 + b2.
  auto psi = [](int k, double sign) {
    const int k1 = (k >> 1) & 1;
    const int k2 = k & 1;
    CVector v = CVector::Zero(8);
    v[4 * k1 + 2 * k2] = kInvSqrt2;
    v[4 * (1 - k1) + 2 * (1 - k2) + 1] = sign * kInvSqrt2;
    return v;
  };
  CMatrix m = lambda0_plus * projector(psi(0, 1.0)) + lambda0_minus * projector(psi(0, -1.0));
  const std::array<std::pair<int, double>, 3> rest{{{1, lambda01}, {2, lambda10}, {3, lambda11}}};
  for (const auto& [k, lambda] : rest) {
    m += lambda * (projector(psi(k, 1.0)) + projector(psi(k, -1.0)));
  }
  return DensityMatrix::hermitized(Dims{2, 2, 2}, m);
}

DensityMatrix dct_preset() { return dct(1.0 / 3.0, 0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0); }

DensityMatrix bound_abc(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a + b + c)) {
    throw std::invalid_argument("bound_abc: a, b, c must be positive and finite");
  }
  const double norm = 2.0 + a + b + c + 1.0 / a + 1.0 / b + 1.0 / c;
  CMatrix m = 2.0 * projector(ghz(3, 2).amplitudes());
  const std::array<std::pair<int, double>, 6> diag{
      {{1, a}, {2, b}, {3, c}, {4, 1.0 / c}, {5, 1.0 / b}, {6, 1.0 / a}}};
  for (const auto& [index, weight] : diag) m(index, index) += weight;
  return DensityMatrix::hermitized(Dims{2, 2, 2}, m / norm);
}

PureState haar_random_pure(const Dims& dims, std::uint64_t seed) {
  auto rng = seeded_rng(seed, 0x70757265u);
  return PureState::normalized(dims, complex_gaussian(dims.total(), rng));
}

DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed) {
  if (rank < 1 || static_cast<std::size_t>(rank) > dims.total()) {
    throw std::invalid_argument("random_density: rank must lie in [1, total dimension]");
  }
  auto rng = seeded_rng(seed, 0x6d697864u);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dims.total());
  CMatrix m = CMatrix::Zero(d, d);
  std::vector<double> weights;
  double total = 0.0;
  for (int k = 0; k < rank; ++k) {
    // Bounded away from zero so the rank is exactly `rank` generically.
    weights.push_back(0.05 + uniform(rng));
    total += weights.back();
  }
  for (int k = 0; k < rank; ++k) {
    CVector v = complex_gaussian(dims.total(), rng);
    v /= v.norm();
    m += (weights[static_cast<std::size_t>(k)] / total) * projector(v);
  }
  return DensityMatrix::hermitized(dims, m);
}

CMatrix haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
  CMatrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j) g.col(j) = complex_gaussian(static_cast<std::size_t>(d), rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

const std::vector<FamilyInfo>& zoo_families() {
  static const std::vector<FamilyInfo> families = {
      {"ghz", "n=3 d=2", "generalized GHZ state of n qudits"},
      {"w", "n=3", "n-qubit W state"},
      {"bell", "", "two-qubit Bell state (|00>+|11>)/sqrt(2)"},
      {"product", "labels=000", "qubit product state from labels in {0,1,+,-}"},
      {"haar-pure", "dims=2,2,2 seed=<--seed>", "Haar-random pure state"},
      {"random-density", "dims=2,2,2 rank=2 seed=<--seed>", "random mixed state of given rank"},
      {"upb-shifts", "", "bound entangled complement of the shifts UPB"},
      {"dct", "l0p=1/3 l0m=0 l01=1/6 l10=0 l11=1/6", "GHZ-diagonal three-qubit mixture"},
      {"bound-abc", "a=2 b=2 c=1/2",
       "three-qubit GHZ + diagonal family, weight a on |001><001|, normalized by "
       "N = 2+a+b+c+1/a+1/b+1/c"},
  };
  return families;
}

ZooState make_zoo_state(const StateSpec& spec) {
  const std::string family = canonical_family(spec.family);
  if (family == "ghz") {
    ParamReader p(spec, {"n", "d"});
    return guarded(family, [&] { return ZooState(ghz(p.integer("n", 3), p.integer("d", 2))); });
  }
  if (family == "w") {
    ParamReader p(spec, {"n"});
    return guarded(family, [&] { return ZooState(w_state(p.integer("n", 3))); });
  }
  if (family == "bell") {
    ParamReader p(spec, {});
    return ZooState(bell());
  }
  if (family == "product") {
    ParamReader p(spec, {"labels"});
    return guarded(family, [&] { return ZooState(product(p.text("labels", "000"))); });
  }
  if (family == "haar-pure") {
    ParamReader p(spec, {"dims", "seed"});
    return guarded(family, [&] { return ZooState(haar_random_pure(p.dims("2,2,2"), p.seed())); });
  }
  if (family == "random-density") {
    ParamReader p(spec, {"dims", "rank", "seed"});
    return guarded(family, [&] {
      return ZooState(random_density(p.dims("2,2,2"), p.integer("rank", 2), p.seed()));
    });
  }
  if (family == "upb-shifts") {
    ParamReader p(spec, {});
    return ZooState(upb_shifts());
  }
  if (family == "dct") {
    ParamReader p(spec, {"l0p", "l0m", "l01", "l10", "l11"});
    return guarded(family, [&] {
      return ZooState(dct(p.real("l0p", 1.0 / 3.0), p.real("l0m", 0.0), p.real("l01", 1.0 / 6.0),
                          p.real("l10", 0.0), p.real("l11", 1.0 / 6.0)));
    });
  }
  if (family == "bound-abc") {
    ParamReader p(spec, {"a", "b", "c"});
    return guarded(family, [&] {
      return ZooState(bound_abc(p.real("a", 2.0), p.real("b", 2.0), p.real("c", 0.5)));
    });
  }
  throw ZooError("unknown zoo family '" + spec.family + "'");
}

}  // namespace globent
