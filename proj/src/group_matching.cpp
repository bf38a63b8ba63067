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

#include "matchkit/group_matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "matchkit/bipartite.hpp"
#include "matchkit/error.hpp"

namespace matchkit::group {

namespace {

void require_pair(const GroupSubset& a, const GroupSubset& b) {
  if (a.empty() || b.empty()) fail(ErrorKind::InvalidInput, "A and B must be nonempty");
  if (a.size() != b.size()) {
    fail(ErrorKind::InvalidInput, "|A| = " + std::to_string(a.size()) +
                                      " differs from |B| = " + std::to_string(b.size()));
  }
}

BipartiteGraph delta_graph(const GroupLaw& g, const IndexSet& a, const IndexSet& b) {
  std::vector<char> in_a(g.order(), 0);
  for (Index x : a) in_a[x] = 1;
  BipartiteGraph graph(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!in_a[g.add(a[i], b[j])]) graph.add_edge(i, j);
    }
  }
  return graph;
}

NearlyPeriodicCertificate to_elements(const GroupLaw& g, const IndexCertificate& c) {
  return NearlyPeriodicCertificate{g.subset_of(c.R), g.subset_of(c.S),
                                   g.subset_of(c.Y), g.subset_of(c.Z),
                                   Subgroup{g.subset_of(c.H)}};
}

IndexCertificate to_indices(const GroupLaw& g, const NearlyPeriodicCertificate& c) {
  return IndexCertificate{g.indices_of(c.R), g.indices_of(c.S), g.indices_of(c.Y),
                          g.indices_of(c.Z), g.indices_of(c.H.carrier)};
}

IndexSet differences(const GroupLaw& g, const IndexSet& s) {
  std::vector<char> mask(g.order(), 0);
  for (Index x : s) {
    for (Index y : s) mask[g.add(x, g.negate(y))] = 1;
  }
  IndexSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

// Masks over n positions of the given popcount, in lexicographic order of
// the position lists they select.
std::vector<std::uint32_t> combinations_lex(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return out;
  while (true) {
    std::uint32_t mask = 0;
    for (std::size_t p : pick) mask |= std::uint32_t{1} << p;
    out.push_back(mask);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

// --- index level -----------------------------------------------------------

bool has_matching(const GroupLaw& g, const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return false;
  return has_perfect_matching(delta_graph(g, a, b));
}

std::optional<std::vector<Index>> least_matching(const GroupLaw& g,
                                                 const IndexSet& a,
                                                 const IndexSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto mate = lex_least_perfect_matching(delta_graph(g, a, b));
  if (!mate) return std::nullopt;
  std::vector<Index> out;
  out.reserve(a.size());
  for (std::uint32_t j : *mate) out.push_back(b[j]);
  return out;
}

std::optional<IndexCertificate> search_certificate(
    const GroupLaw& g, const std::vector<IndexSet>& lattice, const IndexSet& a,
    const IndexSet& b) {
  if (contains(b, 0)) {
    return IndexCertificate{IndexSet{0}, a, IndexSet{}, set_difference(b, IndexSet{0}),
                            IndexSet{0}};
  }
  for (const IndexSet& h : lattice) {
    IndexSet r = set_intersection(b, h);
    if (r.empty()) continue;
    IndexSet k = generated_subgroup(g, r);
    IndexSet s = periodic_part(g, a, k);
    if (s.empty() || a.size() - s.size() >= r.size()) continue;
    IndexCertificate cert;
    cert.Y = set_difference(a, s);
    cert.Z = set_difference(b, r);
    cert.R = std::move(r);
    cert.S = std::move(s);
    cert.H = std::move(k);
    return cert;
  }
  return std::nullopt;
}

bool check_certificate(const GroupLaw& g, const IndexCertificate& c,
                       const IndexSet& a, const IndexSet& b) {
  const auto canonical = [&](const IndexSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end() &&
           std::all_of(s.begin(), s.end(), [&](Index x) { return x < g.order(); });
  };
  for (const IndexSet* s : {&c.R, &c.S, &c.Y, &c.Z, &c.H, &a, &b}) {
    if (!canonical(*s)) return false;
  }
  if (!set_intersection(c.S, c.Y).empty() || set_union(c.S, c.Y) != a) return false;
  if (!set_intersection(c.R, c.Z).empty() || set_union(c.R, c.Z) != b) return false;
  if (c.R.empty() || c.S.empty()) return false;
  if (c.Y.size() >= c.R.size()) return false;
  if (generated_subgroup(g, c.R) != c.H) return false;
  if (!is_periodic(g, c.S, c.H)) return false;
  if (c.R == IndexSet{0} && !contains(b, 0)) return false;
  return true;
}

// --- element level ---------------------------------------------------------

DeltaRelation delta_relation(const GroupLaw& g, const GroupSubset& a,
                             const GroupSubset& b) {
  const IndexSet ai = g.indices_of(a);
  const IndexSet bi = g.indices_of(b);
  DeltaRelation out;
  for (Index x : ai) {
    for (Index y : bi) {
      if (!contains(ai, g.add(x, y))) {
        out.pairs.emplace_back(g.element_at(x), g.element_at(y));
      }
    }
  }
  return out;
}

std::optional<MatchingWitness> find_matching(const GroupLaw& g,
                                             const GroupSubset& a,
                                             const GroupSubset& b) {
  require_pair(a, b);
  const IndexSet ai = g.indices_of(a);
  const IndexSet bi = g.indices_of(b);
  auto image = least_matching(g, ai, bi);
  if (!image) return std::nullopt;
  MatchingWitness w;
  for (std::size_t i = 0; i < ai.size(); ++i) {
    w.assignment.emplace_back(g.element_at(ai[i]), g.element_at((*image)[i]));
  }
  return w;
}

std::optional<NaiveWitness> naive_unmatchability_witness(const GroupLaw& g,
                                                         const GroupSubset& a,
                                                         const GroupSubset& b,
                                                         std::size_t bound) {
  require_pair(a, b);
  const IndexSet ai = g.indices_of(a);
  const IndexSet bi = g.indices_of(b);
  if (contains(bi, 0)) {
    fail(ErrorKind::PreconditionViolated, "naive criterion requires 0 not in B");
  }
  if (ai.size() > bound || bound > 30) {
    fail(ErrorKind::InvalidInput, "naive oracle bound exceeded: |A| = " +
                                      std::to_string(ai.size()));
  }
  const std::size_t n = ai.size();
  // B u {0}, with the identity at position 0.
  IndexSet b1 = set_union(bi, IndexSet{0});
  const std::size_t m = b1.size();

  // position of a_i + b1_j inside A, or -1.
  std::vector<int> pos(n * m, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Index z = g.add(ai[i], b1[j]);
      auto it = std::lower_bound(ai.begin(), ai.end(), z);
      if (it != ai.end() && *it == z) pos[i * m + j] = static_cast<int>(it - ai.begin());
    }
  }

  std::vector<std::vector<std::uint32_t>> r_masks_by_size(m + 1);
  for (std::size_t k = 1; k <= m; ++k) r_masks_by_size[k] = combinations_lex(m, k);

  for (std::size_t s_size = 1; s_size <= n; ++s_size) {
    for (std::uint32_t s_mask : combinations_lex(n, s_size)) {
      // ok has bit j when S + b1_j is contained in S.
      std::uint32_t ok = 0;
      for (std::size_t j = 0; j < m; ++j) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
          if (!(s_mask >> i & 1u)) continue;
          const int p = pos[i * m + j];
          inside = p >= 0 && (s_mask >> p & 1u);
        }
        if (inside) ok |= std::uint32_t{1} << j;
      }
      for (std::size_t r_size = m; r_size >= 1; --r_size) {
        for (std::uint32_t r_mask : r_masks_by_size[r_size]) {
          if (r_mask & ~ok) continue;
          // |B \ R| counts only the members of R that lie in B.
          const std::size_t in_b = r_size - (r_mask & 1u);
          const std::size_t outside = bi.size() - in_b;
          if (s_size <= outside) continue;
          IndexSet s, r;
          for (std::size_t i = 0; i < n; ++i) {
            if (s_mask >> i & 1u) s.push_back(ai[i]);
          }
          for (std::size_t j = 1; j < m; ++j) {
            if (r_mask >> j & 1u) r.push_back(b1[j]);
          }
          return NaiveWitness{g.subset_of(s), g.subset_of(r)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<NearlyPeriodicCertificate> find_certificate(
    const GroupLaw& g, const std::vector<IndexSet>& lattice, const GroupSubset& a,
    const GroupSubset& b) {
  require_pair(a, b);
  auto cert = search_certificate(g, lattice, g.indices_of(a), g.indices_of(b));
  if (!cert) return std::nullopt;
  return to_elements(g, *cert);
}

std::optional<NearlyPeriodicCertificate> find_certificate(const GroupLaw& g,
                                                          const GroupSubset& a,
                                                          const GroupSubset& b) {
  require_pair(a, b);
  if (b.contains(g.element_at(0))) {
    return to_elements(g, *search_certificate(g, {}, g.indices_of(a), g.indices_of(b)));
  }
  return find_certificate(g, subgroup_lattice(g), a, b);
}

bool verify_certificate(const NearlyPeriodicCertificate& cert, const GroupLaw& g,
                        const GroupSubset& a, const GroupSubset& b) {
  try {
    return check_certificate(g, to_indices(g, cert), g.indices_of(a), g.indices_of(b));
  } catch (const Error&) {
    return false;
  }
}

GroupVerdict decide(const GroupLaw& g, const GroupSubset& a, const GroupSubset& b) {
  if (auto w = find_matching(g, a, b)) return GroupVerdict{*w};
  if (auto c = find_certificate(g, a, b)) return GroupVerdict{*c};
  fail(ErrorKind::InternalInconsistency,
       "no matching and no certificate found for the pair");
}

bool is_chowla_set(const GroupLaw& g, const GroupSubset& b) {
  if (b.empty()) fail(ErrorKind::InvalidInput, "Chowla test needs a nonempty set");
  for (Index x : g.indices_of(b)) {
    if (order_of(g, x) <= b.size()) return false;
  }
  return true;
}

bool generalized_symmetric_sufficient(const GroupLaw& g, const GroupSubset& a,
                                      const GroupSubset& b) {
  require_pair(a, b);
  const IndexSet ai = g.indices_of(a);
  const IndexSet bi = g.indices_of(b);
  if (contains(ai, 0)) {
    fail(ErrorKind::PreconditionViolated, "hypothesis requires 0 not in A");
  }
  // R in B n <R> and |<R> n A| <= |H n A| for <R> inside H, so comparing
  // |H n A| with |B n H| over all H is the same condition.
  for (const IndexSet& h : subgroup_lattice(g)) {
    const IndexSet r = set_intersection(bi, h);
    if (r.empty()) continue;
    if (set_intersection(h, ai).size() < r.size()) return false;
  }
  return true;
}

namespace {

void require_boundary_range(const GroupLaw& g, std::size_t n) {
  const auto n0 = n0_group(g);
  if (!n0) {
    fail(ErrorKind::InvalidInput, "group has no nontrivial proper subgroup");
  }
  if (n < *n0 || n >= g.order()) {
    fail(ErrorKind::InvalidInput, "n must satisfy n0(G) = " + std::to_string(*n0) +
                                      " <= n < |G| = " + std::to_string(g.order()));
  }
}

std::optional<IndexSet> boundary_subgroup(const std::vector<IndexSet>& lattice,
                                          std::size_t n) {
  for (const IndexSet& h : lattice) {
    if (h.size() > 1 && h.size() <= n && (n + 1) % h.size() != 0) return h;
  }
  return std::nullopt;
}

}  // namespace

bool exists_unmatchable_group(const GroupLaw& g, std::size_t n) {
  require_boundary_range(g, n);
  return boundary_subgroup(subgroup_lattice(g), n).has_value();
}

UnmatchablePair construct_unmatchable_group(const GroupLaw& g, std::size_t n) {
  require_boundary_range(g, n);
  const auto found = boundary_subgroup(subgroup_lattice(g), n);
  if (!found) {
    fail(ErrorKind::NoSuitableSubgroup,
         "no H with |H| <= " + std::to_string(n) + " and |H| not dividing " +
             std::to_string(n + 1));
  }
  const IndexSet& h = *found;
  const std::size_t m = h.size();
  const std::size_t q = n / m;
  const std::size_t r = n % m;

  std::vector<char> in_s(g.order(), 0);
  std::size_t cosets = 0;
  for (Index x = 0; x < g.order() && cosets < q; ++x) {
    if (in_s[x]) continue;
    // x is unused, so x + H is disjoint from the cosets already taken.
    for (Index y : h) in_s[g.add(x, y)] = 1;
    ++cosets;
  }
  IndexSet s, y, z;
  for (Index x = 0; x < g.order(); ++x) {
    if (in_s[x]) {
      s.push_back(x);
    } else if (y.size() < r) {
      y.push_back(x);
    }
  }
  for (Index x = 0; x < g.order() && z.size() < n - m + 1; ++x) {
    if (!contains(h, x)) z.push_back(x);
  }
  IndexCertificate cert{set_difference(h, IndexSet{0}), s, y, z, h};
  const IndexSet a = set_union(s, y);
  const IndexSet b = set_union(cert.R, z);
  if (!check_certificate(g, cert, a, b)) {
    fail(ErrorKind::InternalInconsistency, "constructed certificate failed to verify");
  }
  return UnmatchablePair{g.subset_of(a), g.subset_of(b), to_elements(g, cert)};
}

QuotientProjection quotient_project(const FiniteAbelianGroup& g,
                                    const Subgroup& h, const GroupSubset& a,
                                    const GroupSubset& b,
                                    const NearlyPeriodicCertificate& cert) {
  if (!verify_certificate(cert, g, a, b)) {
    fail(ErrorKind::InvalidInput, "certificate does not verify against (A, B)");
  }
  QuotientProjection out{QuotientGroup(g, h), false, {}, {},
                         QuotientGuarantee::NoGuarantee, false, std::nullopt};
  const QuotientGroup& q = out.quotient;
  const IndexSet hi = g.indices_of(h.carrier);
  const IndexSet si = g.indices_of(cert.S);
  const IndexSet ri = g.indices_of(cert.R);
  const IndexSet d = set_union(differences(g, si), differences(g, ri));
  out.hypothesis_holds = set_intersection(hi, d) == IndexSet{0};
  out.A = q.project(a);
  out.B = q.project(b);
  if (!out.hypothesis_holds) return out;

  out.guarantee = QuotientGuarantee::UnmatchableInQuotient;
  if (out.A.size() != out.B.size()) {
    out.size_mismatch = true;
    return out;
  }
  IndexCertificate projected;
  projected.S = q.indices_of(q.project(cert.S));
  projected.R = q.indices_of(q.project(cert.R));
  const IndexSet pa = q.indices_of(out.A);
  const IndexSet pb = q.indices_of(out.B);
  projected.Y = set_difference(pa, projected.S);
  projected.Z = set_difference(pb, projected.R);
  projected.H = generated_subgroup(q, projected.R);
  if (!check_certificate(q, projected, pa, pb)) {
    fail(ErrorKind::InternalInconsistency, "projected certificate failed to verify");
  }
  out.projected_certificate = to_elements(q, projected);
  return out;
}

}  // namespace matchkit::group
