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

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "matchkit/group_core.hpp"

namespace matchkit::group {

// Matchability of pairs (A, B) of equal-size subsets of a finite abelian
// group, written additively: a matching is a bijection f: A -> B with
// a + f(a) outside A for every a.

struct DeltaRelation {
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
};

// { (a, b) in A x B : a + b not in A }, in lexicographic order.
DeltaRelation delta_relation(const GroupLaw& g, const GroupSubset& a,
                             const GroupSubset& b);

struct MatchingWitness {
  // (a, f(a)) pairs, ordered by a.
  std::vector<std::pair<GroupElement, GroupElement>> assignment;

  bool operator==(const MatchingWitness&) const = default;
};

// A = S u Y and B = R u Z (disjoint), S a union of <R>-cosets, |Y| < |R|.
struct NearlyPeriodicCertificate {
  GroupSubset R;
  GroupSubset S;
  GroupSubset Y;
  GroupSubset Z;
  Subgroup H;  // <R>

  bool operator==(const NearlyPeriodicCertificate&) const = default;
};

struct GroupVerdict {
  std::variant<MatchingWitness, NearlyPeriodicCertificate> payload;

  bool matchable() const {
    return std::holds_alternative<MatchingWitness>(payload);
  }
  const MatchingWitness& witness() const {
    return std::get<MatchingWitness>(payload);
  }
  const NearlyPeriodicCertificate& certificate() const {
    return std::get<NearlyPeriodicCertificate>(payload);
  }
};

struct NaiveWitness {
  GroupSubset S;
  GroupSubset R;
};

struct IndexCertificate {
  IndexSet R, S, Y, Z, H;
};

// --- index-level deciders --------------------------------------------------

bool has_matching(const GroupLaw& g, const IndexSet& a, const IndexSet& b);
// Lexicographically least matching as f(a_0), f(a_1), ... for a_0 < a_1 < ...
std::optional<std::vector<Index>> least_matching(const GroupLaw& g,
                                                 const IndexSet& a,
                                                 const IndexSet& b);
// The subgroup scan over a precomputed lattice (see find_certificate).
std::optional<IndexCertificate> search_certificate(
    const GroupLaw& g, const std::vector<IndexSet>& lattice, const IndexSet& a,
    const IndexSet& b);
bool check_certificate(const GroupLaw& g, const IndexCertificate& cert,
                       const IndexSet& a, const IndexSet& b);

// --- element-level operations ----------------------------------------------

// Throws InvalidInput on empty inputs or |A| != |B|.
std::optional<MatchingWitness> find_matching(const GroupLaw& g,
                                             const GroupSubset& a,
                                             const GroupSubset& b);

inline constexpr std::size_t kNaiveOracleBound = 7;

// Exhaustive search for S in A, R in B u {0} with S + R = S and
// |S| > |B \ R|. S is scanned by size, then lexicographically; R from the
// largest subset down. The identity is stripped from the returned R.
// Exponential: a test oracle only.
std::optional<NaiveWitness> naive_unmatchability_witness(
    const GroupLaw& g, const GroupSubset& a, const GroupSubset& b,
    std::size_t bound = kNaiveOracleBound);

// Scans subgroups H by size: R = B n H, K = <R>, S = maximal K-periodic part
// of A; accepts the first H with S nonempty and |A \ S| < |R|. When 0 is in B
// the trivial decomposition S = A, R = {0} is returned instead.
std::optional<NearlyPeriodicCertificate> find_certificate(const GroupLaw& g,
                                                          const GroupSubset& a,
                                                          const GroupSubset& b);
std::optional<NearlyPeriodicCertificate> find_certificate(
    const GroupLaw& g, const std::vector<IndexSet>& lattice,
    const GroupSubset& a, const GroupSubset& b);

bool verify_certificate(const NearlyPeriodicCertificate& cert, const GroupLaw& g,
                        const GroupSubset& a, const GroupSubset& b);

// find_matching, falling back to find_certificate.
GroupVerdict decide(const GroupLaw& g, const GroupSubset& a, const GroupSubset& b);

bool is_chowla_set(const GroupLaw& g, const GroupSubset& b);

// |<R> n A| >= |R| for every nonempty R in B; true implies matchable.
bool generalized_symmetric_sufficient(const GroupLaw& g, const GroupSubset& a,
                                      const GroupSubset& b);

// Is there a subgroup H with |H| <= n and |H| not dividing n + 1?
bool exists_unmatchable_group(const GroupLaw& g, std::size_t n);

struct UnmatchablePair {
  GroupSubset A;
  GroupSubset B;
  NearlyPeriodicCertificate certificate;
};

// Least suitable H; S = the first q cosets of H, Y = the first r elements
// outside S, R = H \ {0}, Z = the first n - |H| + 1 elements outside H.
UnmatchablePair construct_unmatchable_group(const GroupLaw& g, std::size_t n);

enum class QuotientGuarantee { UnmatchableInQuotient, NoGuarantee };

struct QuotientProjection {
  QuotientGroup quotient;
  bool hypothesis_holds = false;
  GroupSubset A;  // pi(A), as least coset representatives
  GroupSubset B;
  QuotientGuarantee guarantee = QuotientGuarantee::NoGuarantee;
  bool size_mismatch = false;
  // pi(S), pi(R) and the induced remainders, when the sizes agree and the
  // hypothesis holds.
  std::optional<NearlyPeriodicCertificate> projected_certificate;
};

// Checks H n ((S - S) u (R - R)) = {0} and projects (A, B) to G/H.
QuotientProjection quotient_project(const FiniteAbelianGroup& g,
                                    const Subgroup& h, const GroupSubset& a,
                                    const GroupSubset& b,
                                    const NearlyPeriodicCertificate& cert);

}  // namespace matchkit::group
