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

#include "globent/tangles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "globent/pure_measure.hpp"

namespace globent {

namespace {

// Group of subsystems as it appears in a label: "A" or "(BC)".
std::string group_label(const std::vector<int>& group) {
  std::string s;
  for (int g : group) s += subsystem_letter(g);
  return group.size() > 1 ? "(" + s + ")" : s;
}

std::string plain_letters(const std::vector<int>& group) {
  std::string s;
  for (int g : group) s += subsystem_letter(g);
  return s;
}

void finish(TangleReport& report) {
  double sum = 0.0;
  for (const auto& c : report.components) sum += c.value;
  report.residual = report.lhs - sum;
}

struct SquaredConcurrence {
  double value = 0.0;
  Exactness exactness = Exactness::kExact;
};

// Squared concurrence of rho across the cut `block` | rest.
SquaredConcurrence cut_concurrence_squared(const DensityMatrix& rho, const std::vector<int>& block,
                                           const BoundOptions& opts) {
  if (rho.dims() == Dims{2, 2}) {
    const double c = wootters_concurrence(rho);
    return {c * c, Exactness::kExact};
  }
  const auto result = partition_lower_bound(rho, make_bipartition(rho.dims(), block), opts);
  return {result.value * result.value, result.exact ? Exactness::kExact : Exactness::kLowerBound};
}

// Three-party mixed decomposition with global subsystem labels.
TangleReport mixed_focus_report(const DensityMatrix& rho, int focus, const std::vector<int>& labels,
                                const BoundOptions& opts) {
  if (rho.num_subsystems() != 3) {
    throw std::invalid_argument("tangle_mixed_focus: requires a tripartite state");
  }
  if (focus < 0 || focus > 2) throw std::invalid_argument("tangle_mixed_focus: focus out of range");
  std::vector<int> others;
  for (int i = 0; i < 3; ++i) {
    if (i != focus) others.push_back(i);
  }
  const auto global = [&](int local) { return labels[static_cast<std::size_t>(local)]; };

  TangleReport report;
  report.focus = std::string(1, subsystem_letter(global(focus))) + "(" +
                 subsystem_letter(global(others[0])) + subsystem_letter(global(others[1])) + ")";
  report.lhs_label = "C^2_" + report.focus;
  const auto lhs = cut_concurrence_squared(rho, {focus}, opts);
  report.lhs = lhs.value;
  report.lhs_exactness = lhs.exactness;
  for (int other : others) {
    const auto pair = partial_trace(rho, std::vector<int>{focus, other});
    const auto c2 = cut_concurrence_squared(pair, {0}, opts);
    report.components.push_back(TangleComponent{
        std::string("C^2_") + subsystem_letter(global(focus)) + subsystem_letter(global(other)),
        c2.value, c2.exactness});
  }
  finish(report);
  return report;
}

struct Grouping {
  std::vector<int> focus;
  std::vector<std::vector<int>> objects;
};

// Focus groupings A(BC)D, B(AC)D, C(AB)D, D(BC)A, (AB)CD, (AC)BD, (AD)BC,
// (BC)AD, (BD)AC, (CD)AB.
const std::vector<Grouping>& four_party_groupings() {
  static const std::vector<Grouping> groupings = {
      {{0}, {{1, 2}, {3}}},    {{1}, {{0, 2}, {3}}},    {{2}, {{0, 1}, {3}}},
      {{3}, {{1, 2}, {0}}},    {{0, 1}, {{2}, {3}}},    {{0, 2}, {{1}, {3}}},
      {{0, 3}, {{1}, {2}}},    {{1, 2}, {{0}, {3}}},    {{1, 3}, {{0}, {2}}},
      {{2, 3}, {{0}, {1}}},
  };
  return groupings;
}

TangleReport audit_grouping(const PureState& psi, const Grouping& g, const BoundOptions& opts) {
  TangleReport report;
  std::vector<int> rest;
  for (const auto& o : g.objects) {
    report.focus += group_label(o);
    rest.insert(rest.end(), o.begin(), o.end());
  }
  report.focus = group_label(g.focus) + report.focus;
  report.lhs_label = "C^2_" + group_label(g.focus) + group_label(rest);
  report.lhs = 2.0 * (1.0 - reduced_purity(psi, g.focus));
  report.lhs_exactness = Exactness::kExact;

  for (const auto& object : g.objects) {
    std::vector<int> kept = g.focus;
    kept.insert(kept.end(), object.begin(), object.end());
    std::sort(kept.begin(), kept.end());
    const auto reduced = partial_trace(psi, kept);

    std::vector<int> local_focus;
    for (int f : g.focus) {
      local_focus.push_back(static_cast<int>(std::find(kept.begin(), kept.end(), f) - kept.begin()));
    }
    const auto c2 = cut_concurrence_squared(reduced, local_focus, opts);
    report.components.push_back(
        TangleComponent{"C^2_" + group_label(g.focus) + group_label(object), c2.value, c2.exactness});

    if (g.focus.size() == 1 && object.size() == 2) {
      report.expansions.push_back(mixed_focus_report(reduced, local_focus[0], kept, opts));
    }
  }
  finish(report);
  return report;
}

}  // namespace

const char* to_string(Exactness e) {
  return e == Exactness::kExact ? "exact" : "lower-bound";
}

bool TangleReport::all_exact() const {
  if (lhs_exactness != Exactness::kExact) return false;
  return std::all_of(components.begin(), components.end(),
                     [](const auto& c) { return c.exactness == Exactness::kExact; });
}

char subsystem_letter(int index) {
  if (index < 0 || index >= 26) throw std::invalid_argument("subsystem_letter: index out of range");
  return static_cast<char>('A' + index);
}

TangleReport three_tangle(const PureState& psi, int focus) {
  if (psi.dims() != Dims{2, 2, 2}) throw std::invalid_argument("three_tangle: requires dims [2,2,2]");
  if (focus < 0 || focus > 2) throw std::invalid_argument("three_tangle: focus out of range");
  std::vector<int> others;
  for (int i = 0; i < 3; ++i) {
    if (i != focus) others.push_back(i);
  }
  TangleReport report;
  report.focus = std::string(1, subsystem_letter(focus)) + "(" + plain_letters(others) + ")";
  report.lhs_label = "C^2_" + report.focus;
  const double c = bipartite_concurrence(psi, make_bipartition(psi.dims(), std::vector<int>{focus}));
  report.lhs = c * c;
  for (int other : others) {
    const double w = wootters_concurrence(partial_trace(psi, std::vector<int>{focus, other}));
    report.components.push_back(TangleComponent{
        std::string("C^2_") + subsystem_letter(focus) + subsystem_letter(other), w * w,
        Exactness::kExact});
  }
  finish(report);
  return report;
}

TangleReport tangle_mixed_focus(const DensityMatrix& rho, int focus, const BoundOptions& opts) {
  return mixed_focus_report(rho, focus, {0, 1, 2}, opts);
}

FourPartiteAudit four_partite_audit(const PureState& psi, const BoundOptions& opts) {
  if (psi.num_subsystems() != 4) {
    throw std::invalid_argument("four_partite_audit: requires a four-party state");
  }
  FourPartiteAudit audit;
  for (const auto& g : four_party_groupings()) audit.groupings.push_back(audit_grouping(psi, g, opts));

  // Each two-two split appears twice, once from each side.
  const auto& groupings = four_party_groupings();
  for (std::size_t i = 0; i < groupings.size(); ++i) {
    if (groupings[i].focus.size() != 2) continue;
    for (std::size_t j = i + 1; j < groupings.size(); ++j) {
      if (groupings[j].focus.size() != 2) continue;
      const auto rest = complement(groupings[i].focus, 4);
      if (rest == groupings[j].focus) {
        audit.complementary_defect = std::max(
            audit.complementary_defect, std::abs(audit.groupings[i].lhs - audit.groupings[j].lhs));
      }
    }
  }
  return audit;
}

}  // namespace globent
