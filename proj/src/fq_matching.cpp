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


#include "matchkit/fq_matching.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "matchkit/error.hpp"

namespace matchkit::fq {

namespace {

void require_field(const ExtensionField& field, const FqSubspace& u,
                   const char* name) {
  if (!(u.field() == field)) {
    fail(ErrorKind::InvalidInput,
         std::string(name) + " is not a subspace of " + to_string(field));
  }
}

int require_pair(const ExtensionField& field, const FqSubspace& a,
                 const FqSubspace& b) {
  require_field(field, a, "A");
  require_field(field, b, "B");
  if (a.dim() != b.dim()) {
    fail(ErrorKind::InvalidInput, "dim A = " + std::to_string(a.dim()) +
                                      " but dim B = " + std::to_string(b.dim()));
  }
  if (a.dim() == 0) fail(ErrorKind::InvalidInput, "A and B must be nonzero");
  return a.dim();
}

FqSubspace unit_line(const ExtensionField& field) {
  return span(field, {field.one()});
}

// Nonzero subspaces of V, largest first, canonical order within a dimension.
std::vector<FqSubspace> descending_nonzero(const FqSubspace& v,
                                           const SubspaceBounds& bounds) {
  std::vector<FqSubspace> all = enumerate_subspaces(v, std::nullopt, bounds);
  std::vector<FqSubspace> out;
  out.reserve(all.size());
  for (int d = v.dim(); d >= 1; --d) {
    for (const FqSubspace& u : all) {
      if (u.dim() == d) out.push_back(u);
    }
  }
  return out;
}

bool violates(const FqSubspace& s, const FqSubspace& r, const FqSubspace& b,
              int n) {
  if (s.dim() <= n - intersect(r, b).dim()) return false;
  return minkowski_span(s, r) == s;
}

void ordered_bases(const std::vector<FieldElement>& pool, const ExtensionField& field,
                   int n, std::vector<FieldElement>& chosen,
                   std::vector<std::vector<FieldElement>>& out) {
  if (static_cast<int>(chosen.size()) == n) {
    out.push_back(chosen);
    return;
  }
  const FqSubspace current = span(field, chosen);
  for (const FieldElement& x : pool) {
    if (current.contains(x)) continue;
    chosen.push_back(x);
    ordered_bases(pool, field, n, chosen, out);
    chosen.pop_back();
  }
}

std::vector<std::vector<FieldElement>> ordered_bases(const FqSubspace& v) {
  std::vector<FieldElement> pool;
  for (const FieldElement& x : v.elements()) {
    if (!x.is_zero()) pool.push_back(x);
  }
  std::vector<std::vector<FieldElement>> out;
  std::vector<FieldElement> chosen;
  ordered_bases(pool, v.field(), v.dim(), chosen, out);
  return out;
}

}  // namespace

std::optional<ViolatingPair> criterion_verdict(const ExtensionField& field,
                                               const FqSubspace& a,
                                               const FqSubspace& b,
                                               const CriterionOptions& options) {
  const int n = require_pair(field, a, b);
  if (b.contains(field.one())) {
    fail(ErrorKind::PreconditionViolated, "1 lies in B");
  }
  const FqSubspace space =
      options.include_unit ? sum(b, unit_line(field)) : b;
  require_enumerable(a, options.bounds);
  require_enumerable(space, options.bounds);

  std::vector<FqSubspace> all_r;
  if (options.literal) all_r = descending_nonzero(space, options.bounds);

  for (const FqSubspace& s : enumerate_subspaces(a, std::nullopt, options.bounds)) {
    if (s.is_zero()) continue;
    if (options.literal) {
      for (const FqSubspace& r : all_r) {
        if (violates(s, r, b, n)) return ViolatingPair{s, r};
      }
      continue;
    }
    // The x in the search space with s_i x in S for every basis vector s_i.
    FqSubspace stabiliser = space;
    for (const FieldElement& si : s.basis_elements()) {
      stabiliser = intersect(stabiliser, scale(field.inv(si), s));
      if (stabiliser.is_zero()) break;
    }
    if (stabiliser.is_zero()) continue;
    for (const FqSubspace& r : descending_nonzero(stabiliser, options.bounds)) {
      if (violates(s, r, b, n)) return ViolatingPair{s, r};
    }
  }
  return std::nullopt;
}

std::optional<LinearCertificate> find_linear_certificate(const ExtensionField& field,
                                                         const FqSubspace& a,
                                                         const FqSubspace& b) {
  const int n = require_pair(field, a, b);
  if (b.contains(field.one())) {
    const FqSubspace r = unit_line(field);
    return LinearCertificate{r, a, FqSubspace(field), complement(r, b), 1};
  }
  for (int d : divisors(field.m())) {
    if (d == 1) continue;
    const FqSubspace f = subfield_subspace(field, d);
    const FqSubspace r = intersect(b, f);
    if (r.is_zero()) continue;
    const FqSubspace s = stable_core(a, f);
    if (s.is_zero() || n - s.dim() >= r.dim()) continue;
    return LinearCertificate{r, s, complement(s, a), complement(r, b),
                             generated_subfield(r)};
  }
  return std::nullopt;
}

bool verify_linear_certificate(const LinearCertificate& cert,
                               const ExtensionField& field, const FqSubspace& a,
                               const FqSubspace& b) {
  try {
    for (const FqSubspace* u : {&cert.R, &cert.S, &cert.Y, &cert.Z, &a, &b}) {
      if (!(u->field() == field)) return false;
    }
    if (a.dim() != b.dim() || a.is_zero()) return false;
    if (cert.S.dim() + cert.Y.dim() != a.dim() || !(sum(cert.S, cert.Y) == a)) {
      return false;
    }
    if (cert.R.dim() + cert.Z.dim() != b.dim() || !(sum(cert.R, cert.Z) == b)) {
      return false;
    }
    if (cert.R.is_zero() || cert.S.is_zero()) return false;
    if (!cert.S.contains(minkowski_span(cert.S, cert.R))) return false;
    if (cert.Y.dim() >= cert.R.dim()) return false;
    if (cert.d != generated_subfield(cert.R)) return false;
    if (cert.S.dim() % cert.d != 0) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

DefinitionalResult definitional_oracle(const ExtensionField& field,
                                       const FqSubspace& a, const FqSubspace& b) {
  const int n = require_pair(field, a, b);
  if (field.p() != 2 || n > kOracleMaxDim || field.m() > kOracleMaxDegree) {
    fail(ErrorKind::InvalidInput,
         "definitional oracle needs p = 2, n <= 3 and m <= 6");
  }
  const auto b_bases = ordered_bases(b);
  // span{b_j : j != i} for every ordered basis of B.
  std::vector<std::vector<FqSubspace>> hyperplanes;
  hyperplanes.reserve(b_bases.size());
  for (const auto& basis : b_bases) {
    std::vector<FqSubspace> row;
    for (int i = 0; i < n; ++i) {
      std::vector<FieldElement> rest;
      for (int j = 0; j < n; ++j) {
        if (j != i) rest.push_back(basis[j]);
      }
      row.push_back(span(field, rest));
    }
    hyperplanes.push_back(std::move(row));
  }

  DefinitionalResult result;
  for (const auto& a_basis : ordered_bases(a)) {
    std::vector<FqSubspace> targets;
    for (const FieldElement& ai : a_basis) {
      targets.push_back(intersect(scale(field.inv(ai), a), b));
    }
    std::optional<std::size_t> partner;
    for (std::size_t k = 0; k < b_bases.size() && !partner; ++k) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = hyperplanes[k][i].contains(targets[i]);
      if (ok) partner = k;
    }
    if (!partner) {
      result.matched = false;
      result.witnesses.clear();
      result.unmatched_basis = a_basis;
      return result;
    }
    result.witnesses.push_back(BasisMatchingWitness{a_basis, b_bases[*partner]});
  }
  result.matched = true;
  return result;
}

LinearVerdict decide_linear(const ExtensionField& field, const FqSubspace& a,
                            const FqSubspace& b) {
  LinearVerdict verdict;
  verdict.certificate = find_linear_certificate(field, a, b);
  verdict.matchable = !verdict.certificate.has_value();
  return verdict;
}

bool is_chowla_subspace(const ExtensionField& field, const FqSubspace& b) {
  require_field(field, b, "B");
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "B must be nonzero");
  for (const FieldElement& x : b.elements()) {
    if (x.is_zero()) continue;
    if (minimal_degree(field, x) < b.dim() + 1) return false;
  }
  return true;
}

int n0_linear(const ExtensionField& field) {
  if (field.m() == 1) fail(ErrorKind::InvalidInput, "m = 1 has no proper extension");
  for (int d : divisors(field.m())) {
    if (d > 1) return d;
  }
  fail(ErrorKind::InternalInconsistency, "no divisor above 1");
}

namespace {

void require_boundary_range(const ExtensionField& field, int n) {
  const int m = field.m();
  if (m == 1 || n0_linear(field) == m) {
    fail(ErrorKind::InvalidInput, "m = " + std::to_string(m) + " is not composite");
  }
  if (n < n0_linear(field) || n >= m) {
    fail(ErrorKind::InvalidInput, "n = " + std::to_string(n) + " outside [" +
                                      std::to_string(n0_linear(field)) + ", " +
                                      std::to_string(m) + ")");
  }
}

std::optional<int> witness_divisor(const ExtensionField& field, int n) {
  for (int d : divisors(field.m())) {
    if (d > 1 && d <= n && (n + 1) % d != 0) return d;
  }
  return std::nullopt;
}

}  // namespace

bool exists_unmatchable_linear(const ExtensionField& field, int n) {
  require_boundary_range(field, n);
  return witness_divisor(field, n).has_value();
}

UnmatchableSubspaces construct_unmatchable_linear(const ExtensionField& field, int n) {
  require_boundary_range(field, n);
  const std::optional<int> d = witness_divisor(field, n);
  if (!d) {
    fail(ErrorKind::NoSuitableField,
         "no divisor d of m with 1 < d <= n and d not dividing n + 1");
  }
  const FqSubspace f = subfield_subspace(field, *d);
  const FqSubspace unit = unit_line(field);
  const FqSubspace r = complement(unit, f);
  const int q = n / *d;
  const int rem = n % *d;

  // T = F + a_1 F + ... is an F-subspace, so x F meets it only when x is in it.
  FqSubspace s(field);
  FqSubspace t = f;
  const std::vector<FieldElement> f_basis = f.basis_elements();
  for (std::uint64_t code = 1; s.dim() < q * *d; ++code) {
    if (code >= field.order()) {
      fail(ErrorKind::InternalInconsistency, "ran out of F-independent elements");
    }
    const FieldElement x = field.from_code(code);
    if (t.contains(x)) continue;
    std::vector<FieldElement> line;
    for (const FieldElement& fi : f_basis) line.push_back(field.mul(x, fi));
    const FqSubspace xf = span(field, line);
    s = sum(s, xf);
    t = sum(t, xf);
  }

  const FqSubspace whole = FqSubspace::whole(field);
  std::vector<FieldElement> y_vectors = complement_vectors(s, whole);
  y_vectors.resize(rem);
  std::vector<FieldElement> z_vectors = complement_vectors(f, whole);
  z_vectors.resize(n - *d + 1);

  UnmatchableSubspaces out{FqSubspace(field), FqSubspace(field),
                           LinearCertificate{r, s, span(field, y_vectors),
                                             span(field, z_vectors),
                                             generated_subfield(r)}};
  out.A = sum(s, out.certificate.Y);
  out.B = sum(r, out.certificate.Z);
  if (out.A.dim() != n || out.B.dim() != n || out.B.contains(field.one()) ||
      !verify_linear_certificate(out.certificate, field, out.A, out.B)) {
    fail(ErrorKind::InternalInconsistency, "constructed certificate does not verify");
  }
  return out;
}

bool generalized_symmetric_sufficient_linear(const ExtensionField& field,
                                             const FqSubspace& a,
                                             const FqSubspace& b) {
  require_pair(field, a, b);
  if (a.contains(field.one())) fail(ErrorKind::PreconditionViolated, "1 lies in A");
  for (int d : divisors(field.m())) {
    const FqSubspace f = subfield_subspace(field, d);
    const FqSubspace r = intersect(b, f);
    if (r.is_zero()) continue;
    if (intersect(f, a).dim() < r.dim()) return false;
  }
  return true;
}

}  // namespace matchkit::fq
