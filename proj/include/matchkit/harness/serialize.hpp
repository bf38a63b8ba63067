// Copyright 2026 The Authors.
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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "matchkit/fq_matching.hpp"
#include "matchkit/group_matching.hpp"

namespace matchkit::harness {

using nlohmann::json;

enum class Setting { Group, Field };

// A check request in canonical form: group elements in invariant-factor
// coordinates, sorted; subspaces as reduced row-echelon basis rows.
struct ProblemSpec {
  Setting setting = Setting::Group;
  std::vector<int> group;  // invariant factors
  int p = 0;
  int m = 0;
  std::vector<int> modulus;
  std::vector<std::vector<int>> A;
  std::vector<std::vector<int>> B;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample;
  std::optional<int> n;

  bool operator==(const ProblemSpec&) const = default;
};

// Accepts "group" as a shorthand string or an array of cyclic orders, and a
// "field" object {p, m, modulus?}. Elements of a cyclic group may be bare
// integers. Throws InvalidInput.
ProblemSpec parse_problem(const json& j);
json to_json(const ProblemSpec& spec);

group::FiniteAbelianGroup spec_group(const ProblemSpec& spec);
fq::ExtensionField spec_field(const ProblemSpec& spec);
group::GroupSubset spec_subset(const group::FiniteAbelianGroup& g,
                               const std::vector<std::vector<int>>& elements);
fq::FqSubspace spec_subspace(const fq::ExtensionField& field,
                             const std::vector<std::vector<int>>& rows);

// Group elements are bare integers in cyclic groups and residue arrays
// otherwise; field elements are ascending coefficient arrays.
json encode(const group::FiniteAbelianGroup& g, const group::GroupElement& x);
json encode(const group::FiniteAbelianGroup& g, const group::GroupSubset& s);
group::GroupElement decode_element(const group::FiniteAbelianGroup& g, const json& j);
group::GroupSubset decode_subset(const group::FiniteAbelianGroup& g, const json& j);

json encode(const fq::FieldElement& x);
json encode(const fq::FqSubspace& u);
fq::FieldElement decode_field_element(const fq::ExtensionField& field, const json& j);
fq::FqSubspace decode_subspace(const fq::ExtensionField& field, const json& j);

// {"matchable": ..., "witness" | "certificate": ...}
json to_json(const group::FiniteAbelianGroup& g, const group::GroupVerdict& v);
group::GroupVerdict group_verdict_from_json(const group::FiniteAbelianGroup& g,
                                            const json& j);
json to_json(const fq::LinearCertificate& cert);
json to_json(const fq::LinearVerdict& v);
fq::LinearVerdict linear_verdict_from_json(const fq::ExtensionField& field,
                                           const json& j);

}  // namespace matchkit::harness
