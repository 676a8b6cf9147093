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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "globent/linalg.hpp"

namespace globent {

/// (sum_{k<d} |k>^{(x)n}) / sqrt(d)
PureState ghz(int n, int d = 2);
/// Uniform superposition of the n single-excitation qubit basis states.
PureState w_state(int n);
/// (|00> + |11>) / sqrt(2)
PureState bell();
/// Qubit product state from labels in {0, 1, +, -}, e.g. "01+".
PureState product(std::string_view labels);
/// Tensor product of arbitrary local vectors (each normalized first).
PureState product(const std::vector<CVector>& factors);

/// The four orthonormal product vectors |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->.
std::array<CVector, 4> upb_shifts_vectors();
/// (I_8 - sum_i |psi_i><psi_i|) / 4 over the shifts UPB.
DensityMatrix upb_shifts();

/// GHZ-diagonal three-qubit mixture with weights on |Psi_0^+>, |Psi_0^->
/// and on both signs of |Psi_k^+-> for k = 01, 10, 11, where
/// |Psi_k^+-> = (|k1 k2 0> +- |~k1 ~k2 1>) / sqrt(2).
DensityMatrix dct(double lambda0_plus, double lambda0_minus, double lambda01, double lambda10,
                  double lambda11);
/// Weights (1/3, 0, 1/6, 0, 1/6).
DensityMatrix dct_preset();

/// (2|GHZ><GHZ| + a|001><001| + b|010><010| + c|011><011| + (1/c)|100><100|
///  + (1/b)|101><101| + (1/a)|110><110|) / N, N = 2 + a + b + c + 1/a + 1/b + 1/c.
DensityMatrix bound_abc(double a, double b, double c);

/// Haar-distributed direction from a normalized complex Gaussian vector.
PureState haar_random_pure(const Dims& dims, std::uint64_t seed);
/// sum_k w_k |psi_k><psi_k| over `rank` Haar vectors with random weights.
DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed);

/// Haar unitary via QR of a complex Ginibre matrix with phase correction.
CMatrix haar_unitary(int d, std::mt19937_64& rng);

/// Raised for unknown families or invalid family parameters.
class ZooError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StateSpec {
  std::string family;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
};

struct FamilyInfo {
  std::string name;        // canonical (hyphenated) CLI name
  std::string parameters;  // "key=default ..." summary
  std::string description;
};

const std::vector<FamilyInfo>& zoo_families();

using ZooState = std::variant<PureState, DensityMatrix>;

/// Builds a state from a family name (hyphens or underscores) and string
/// parameters. Throws ZooError on unknown families, keys or bad values.
ZooState make_zoo_state(const StateSpec& spec);

}  // namespace globent
