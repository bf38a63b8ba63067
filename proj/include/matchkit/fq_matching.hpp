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

#include <optional>
#include <vector>

#include "matchkit/fq_core.hpp"

namespace matchkit::fq {

// Matchability of equal-dimension F_p-subspaces A, B of L = F_{p^m}.

// A = S + Y and B = R + Z (direct), S stable under R, dim Y < dim R, and
// F_p(R) = F_{p^d}.
struct LinearCertificate {
  FqSubspace R;
  FqSubspace S;
  FqSubspace Y;
  FqSubspace Z;
  int d = 1;

  bool operator==(const LinearCertificate&) const = default;
};

struct BasisMatchingWitness {
  std::vector<FieldElement> a_basis;
  std::vector<FieldElement> b_basis;

  bool operator==(const BasisMatchingWitness&) const = default;
};

struct ViolatingPair {
  FqSubspace S;
  FqSubspace R;
};

struct LinearVerdict {
  bool matchable = false;
  std::optional<LinearCertificate> certificate;
  // Filled only when the definitional oracle ran.
  std::optional<std::vector<BasisMatchingWitness>> witnesses;

  bool operator==(const LinearVerdict&) const = default;
};

struct CriterionOptions {
  // Search R inside B + <1> (true) or inside B only.
  bool include_unit = true;
  // Enumerate every R for every S instead of only the R that stabilise S.
  bool literal = false;
  SubspaceBounds bounds;
};

// Nonzero S in A and R in B + <1> with <SR> = S and dim S > n - dim(R n B).
// S ascends, R descends. Throws PreconditionViolated if 1 is in B.
std::optional<ViolatingPair> criterion_verdict(const ExtensionField& field,
                                               const FqSubspace& a,
                                               const FqSubspace& b,
                                               const CriterionOptions& options = {});

// Trivial decomposition when 1 is in B; otherwise for each divisor d > 1,
// R = B n F_{p^d} and S = the F_{p^d}-stable core of A, accepting the first
// d with S nonzero and dim A - dim S < dim R.
std::optional<LinearCertificate> find_linear_certificate(const ExtensionField& field,
                                                         const FqSubspace& a,
                                                         const FqSubspace& b);

bool verify_linear_certificate(const LinearCertificate& cert,
                               const ExtensionField& field, const FqSubspace& a,
                               const FqSubspace& b);

struct DefinitionalResult {
  bool matched = false;
  // One per ordered basis of A, in enumeration order, when matched.
  std::vector<BasisMatchingWitness> witnesses;
  // The first ordered basis of A with no partner, otherwise.
  std::optional<std::vector<FieldElement>> unmatched_basis;
};

inline constexpr int kOracleMaxDim = 3;
inline constexpr int kOracleMaxDegree = 6;

// Tries every ordered basis of B against every ordered basis of A.
// p = 2, n <= 3, m <= 6 only.
DefinitionalResult definitional_oracle(const ExtensionField& field,
                                       const FqSubspace& a, const FqSubspace& b);

// find_linear_certificate, reported as a verdict.
LinearVerdict decide_linear(const ExtensionField& field, const FqSubspace& a,
                            const FqSubspace& b);

// [F_p(x) : F_p] >= dim B + 1 for every nonzero x in B.
bool is_chowla_subspace(const ExtensionField& field, const FqSubspace& b);

// Least d > 1 dividing m.
int n0_linear(const ExtensionField& field);

// Is there a divisor d of m with 1 < d <= n and d not dividing n + 1?
bool exists_unmatchable_linear(const ExtensionField& field, int n);

struct UnmatchableSubspaces {
  FqSubspace A;
  FqSubspace B;
  LinearCertificate certificate;
};

// Least suitable d, F = F_{p^d}, R the canonical complement of <1> in F,
// S = a_1 F + ... + a_q F with the a_i picked greedily in element order.
UnmatchableSubspaces construct_unmatchable_linear(const ExtensionField& field, int n);

// dim(F n A) >= dim(F n B) for every intermediate field F meeting B.
// True implies matchable. Throws PreconditionViolated if 1 is in A.
bool generalized_symmetric_sufficient_linear(const ExtensionField& field,
                                             const FqSubspace& a,
                                             const FqSubspace& b);

}  // namespace matchkit::fq
