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

#include "globent/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace globent {

namespace {

using nlohmann::json;

Complex read_complex(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw StateFileError(where + ": expected a [re, im] pair of numbers");
  }
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw StateFileError(where + ": non-finite number");
  }
  return {re, im};
}

Dims read_dims(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw StateFileError("'dims' must be a nonempty integer list");
  }
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 2 || d.get<long long>() > 4096) {
      throw StateFileError("'dims' entries must be integers >= 2");
    }
    dims.push_back(d.get<int>());
  }
  if (dims.size() > 30) throw StateFileError("'dims' has too many subsystems");
  Dims out(std::move(dims));
  if (out.total() > 4096) throw StateFileError("total dimension exceeds 4096");
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

ZooState parse_state_json(const std::string& text, bool renormalize) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StateFileError("top level must be an object");
  const Dims dims = read_dims(doc);
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw StateFileError("'kind' must be \"pure\" or \"density\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains("data") || !doc["data"].is_array()) throw StateFileError("'data' must be a list");
  const json& data = doc["data"];
  const auto total = static_cast<Eigen::Index>(dims.total());

  try {
    if (kind == "pure") {
      if (data.size() != dims.total()) {
        throw StateFileError("'data' has " + std::to_string(data.size()) + " amplitudes, expected " +
                             std::to_string(dims.total()));
      }
      CVector a(total);
      for (Eigen::Index i = 0; i < total; ++i) {
        a[i] = read_complex(data[static_cast<std::size_t>(i)], "data[" + std::to_string(i) + "]");
      }
      if (renormalize) return PureState::normalized(dims, std::move(a));
      return PureState(dims, std::move(a));
    }
    if (kind == "density") {
      if (data.size() != dims.total()) {
        throw StateFileError("'data' has " + std::to_string(data.size()) + " rows, expected " +
                             std::to_string(dims.total()));
      }
      CMatrix m(total, total);
      for (Eigen::Index i = 0; i < total; ++i) {
        const json& row = data[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != dims.total()) {
          throw StateFileError("row " + std::to_string(i) + " must have " +
                               std::to_string(dims.total()) + " entries");
        }
        for (Eigen::Index j = 0; j < total; ++j) {
          m(i, j) = read_complex(row[static_cast<std::size_t>(j)],
                                 "data[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
      }
      if (renormalize) {
        const double tr = m.trace().real();
        if (!(tr > 0.0)) throw InvariantError("positive trace", tr);
        m /= tr;
      }
      return DensityMatrix(dims, std::move(m));
    }
  } catch (const InvariantError& e) {
    std::ostringstream os;
    os << kind << " state violates invariant '" << e.invariant() << "': measured defect "
       << e.defect();
    throw StateFileError(os.str());
  }
  throw StateFileError("'kind' must be \"pure\" or \"density\", got \"" + kind + "\"");
}

ZooState read_state_file(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str(), renormalize);
}

std::string to_state_json(const ZooState& state) {
  json doc;
  std::visit(
      [&](const auto& s) {
        doc["dims"] = s.dims().values();
        using T = std::decay_t<decltype(s)>;
        json data = json::array();
        if constexpr (std::is_same_v<T, PureState>) {
          doc["kind"] = "pure";
          for (const auto& c : s.amplitudes()) data.push_back(complex_json(c));
        } else {
          doc["kind"] = "density";
          const auto& m = s.entries();
          for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
            data.push_back(std::move(row));
          }
        }
        doc["data"] = std::move(data);
      },
      state);
  return doc.dump();
}

}  // namespace globent
