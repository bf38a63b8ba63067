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
#include <ostream>
#include <utility>
#include <vector>

#include "matchkit/fq_matching.hpp"
#include "matchkit/group_matching.hpp"

namespace matchkit::harness {

struct CensusOptions {
  // Sample this many pairs instead of enumerating; needs a seed.
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  // Run every applicable decider and count disagreements.
  bool xcheck = false;
  // Per-record and total timings; the output is then not reproducible.
  bool timing = false;
  // Write one JSONL record per pair (the footer is always written).
  bool records = true;
  // Collect the unmatchable pairs in the summary.
  bool keep_unmatchable = false;
  std::uint64_t max_pairs = 5'000'000;
};

struct CensusSummary {
  std::uint64_t pairs = 0;
  std::uint64_t matchable = 0;
  std::uint64_t unmatchable = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::pair<group::IndexSet, group::IndexSet>> unmatchable_groups;
  std::vector<std::pair<fq::FqSubspace, fq::FqSubspace>> unmatchable_fields;
};

// Pairs of n-subsets with 0 outside B: A ranges over the n-subsets of G in
// lexicographic index order, B likewise inside G \ {0}, A outermost.
CensusSummary run_group_census(const group::FiniteAbelianGroup& g, std::size_t n,
                               const CensusOptions& options, std::ostream& out);

// Pairs of n-dimensional subspaces with 1 outside B, in canonical subspace
// order, A outermost.
CensusSummary run_field_census(const fq::ExtensionField& field, int n,
                               const CensusOptions& options, std::ostream& out);

}  // namespace matchkit::harness
