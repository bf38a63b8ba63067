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

#include <string>
#include <vector>

#include "matchkit/group_core.hpp"

namespace matchkit::harness {

// A product of cyclic groups as written ("Z3xZ2"), with an explicit
// isomorphism onto its invariant-factor form.
class CyclicProduct {
 public:
  // Every component >= 2; an empty list is the trivial group.
  explicit CyclicProduct(std::vector<int> components);

  const std::vector<int>& components() const { return components_; }
  const group::FiniteAbelianGroup& group() const { return group_; }
  bool is_canonical() const { return components_ == group_.invariant_factors(); }

  // Component residues -> invariant-factor element. Throws InvalidInput on
  // length mismatch; residues are reduced.
  group::GroupElement map(const std::vector<int>& residues) const;

 private:
  std::vector<int> components_;
  group::FiniteAbelianGroup group_;
  // images_[j] is the image of the generator of component j.
  std::vector<std::vector<int>> images_;
};

// Parses "Z12", "Z2xZ6", "Z/3 x Z/2", "Z_4*Z_4" and "Z1". Throws InvalidInput.
CyclicProduct parse_group_shorthand(const std::string& text);

// Invariant factors of Z/c_1 x ... x Z/c_k.
std::vector<int> invariant_factors(const std::vector<int>& components);

}  // namespace matchkit::harness
