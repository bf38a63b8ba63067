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


#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "matchkit/error.hpp"
#include "matchkit/group_matching.hpp"
#include "oracles.hpp"

using namespace matchkit;
using namespace matchkit::group;

namespace {

GroupSubset cyc(std::initializer_list<int> xs) {
  std::vector<GroupElement> v;
  for (int x : xs) v.push_back(GroupElement{{x}});
  return GroupSubset(v);
}

GroupElement el(int x) { return GroupElement{{x}}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

const FiniteAbelianGroup kZ5 = FiniteAbelianGroup::cyclic(5);
const FiniteAbelianGroup kZ6 = FiniteAbelianGroup::cyclic(6);
const FiniteAbelianGroup kZ8 = FiniteAbelianGroup::cyclic(8);
const FiniteAbelianGroup kZ12 = FiniteAbelianGroup::cyclic(12);

const GroupSubset kZ12A = cyc({0, 1, 3, 6, 9});
const GroupSubset kZ12B = cyc({1, 2, 3, 6, 9});
const GroupSubset kZ8A = cyc({0, 1, 2, 4, 6});
const GroupSubset kZ8B = cyc({1, 2, 3, 5, 6});

NearlyPeriodicCertificate z8_certificate() {
  return {cyc({2, 6}), cyc({0, 2, 4, 6}), cyc({1}), cyc({1, 3, 5}),
          make_subgroup(kZ8, cyc({0, 2, 4, 6}))};
}

// Lexicographically least valid f(a_0), f(a_1), ... by permutation search.
std::optional<std::vector<int>> brute_least(const oracle::Group& g, const std::vector<int>& a,
                                            std::vector<int> b) {
  std::sort(b.begin(), b.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = !oracle::member(a, g.add(a[i], b[i]));
    if (ok) return b;
  } while (std::next_permutation(b.begin(), b.end()));
  return std::nullopt;
}

}  // namespace

TEST(DeltaRelation, MatchesDefinition) {
  const DeltaRelation d = delta_relation(kZ12, kZ12A, kZ12B);
  std::size_t expected = 0;
  for (const auto& a : kZ12A)
    for (const auto& b : kZ12B) expected += !kZ12A.contains(kZ12.add(a, b));
  EXPECT_EQ(d.pairs.size(), expected);
  for (const auto& [a, b] : d.pairs) {
    EXPECT_TRUE(kZ12A.contains(a));
    EXPECT_TRUE(kZ12B.contains(b));
    EXPECT_FALSE(kZ12A.contains(kZ12.add(a, b)));
  }
  EXPECT_TRUE(std::is_sorted(d.pairs.begin(), d.pairs.end()));
}

TEST(FindMatching, Examples) {
  const auto w = find_matching(kZ5, cyc({1, 2}), cyc({1, 2}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->assignment, (std::vector<std::pair<GroupElement, GroupElement>>{
                               {el(1), el(2)}, {el(2), el(1)}}));
  EXPECT_FALSE(find_matching(kZ6, cyc({1, 2}), cyc({0, 4})));
  EXPECT_FALSE(find_matching(kZ12, kZ12A, kZ12B));
  EXPECT_EQ(kind_of([] { find_matching(kZ5, cyc({1, 2}), cyc({1})); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { find_matching(kZ5, GroupSubset{}, GroupSubset{}); }),
            ErrorKind::InvalidInput);
}

TEST(FindMatching, LexLeastAgainstPermutationSearch) {
  std::mt19937_64 rng(5);
  for (const std::vector<int>& n : std::vector<std::vector<int>>{{7}, {8}, {2, 4}, {9}, {12}, {2, 6}}) {
    const FiniteAbelianGroup g(n);
    const oracle::Group o{n};
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t k = 1 + rng() % 5;
      std::vector<int> pool(g.order());
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> a(pool.begin(), pool.begin() + k);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> b(pool.begin(), pool.begin() + k);
      std::sort(a.begin(), a.end());
      IndexSet ai(a.begin(), a.end()), bi(b.begin(), b.end());
      std::sort(bi.begin(), bi.end());
      const auto w = find_matching(g, g.subset_of(ai), g.subset_of(bi));
      const auto expected = brute_least(o, a, b);
      ASSERT_EQ(w.has_value(), expected.has_value());
      if (!w) continue;
      std::vector<int> got;
      for (const auto& [x, y] : w->assignment) got.push_back(static_cast<int>(g.index_of(y)));
      EXPECT_EQ(got, *expected);
    }
  }
}

TEST(NaiveWitness, Examples) {
  const auto w = naive_unmatchability_witness(kZ12, kZ12A, kZ12B);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->S, cyc({0, 3, 6, 9}));
  EXPECT_EQ(w->R, cyc({3, 6, 9}));
  EXPECT_FALSE(naive_unmatchability_witness(kZ5, cyc({1, 2}), cyc({1, 2})));
  const auto w6 = naive_unmatchability_witness(kZ6, cyc({0, 3}), cyc({1, 3}));
  ASSERT_TRUE(w6);
  EXPECT_EQ(w6->S, cyc({0, 3}));
  EXPECT_EQ(w6->R, cyc({3}));
  EXPECT_EQ(kind_of([] { naive_unmatchability_witness(kZ6, cyc({1, 2}), cyc({0, 1})); }),
            ErrorKind::PreconditionViolated);
  const FiniteAbelianGroup z20 = FiniteAbelianGroup::cyclic(20);
  EXPECT_EQ(kind_of([&] {
              naive_unmatchability_witness(z20, cyc({0, 1, 2, 3, 4, 5, 6, 7}),
                                           cyc({1, 2, 3, 4, 5, 6, 7, 8}));
            }),
            ErrorKind::InvalidInput);
}

TEST(FindCertificate, Examples) {
  const auto c12 = find_certificate(kZ12, kZ12A, kZ12B);
  ASSERT_TRUE(c12);
  EXPECT_EQ(c12->R, cyc({3, 6, 9}));
  EXPECT_EQ(c12->S, cyc({0, 3, 6, 9}));
  EXPECT_EQ(c12->Y, cyc({1}));
  EXPECT_EQ(c12->Z, cyc({1, 2}));
  EXPECT_EQ(c12->H.carrier, cyc({0, 3, 6, 9}));

  const auto c8 = find_certificate(kZ8, kZ8A, kZ8B);
  ASSERT_TRUE(c8);
  EXPECT_EQ(*c8, z8_certificate());

  EXPECT_FALSE(find_certificate(kZ5, cyc({1, 2}), cyc({1, 2})));

  const auto trivial = find_certificate(kZ6, cyc({1, 2}), cyc({0, 4}));
  ASSERT_TRUE(trivial);
  EXPECT_EQ(trivial->S, cyc({1, 2}));
  EXPECT_TRUE(trivial->Y.empty());
  EXPECT_EQ(trivial->R, cyc({0}));
  EXPECT_EQ(trivial->Z, cyc({4}));
  EXPECT_TRUE(verify_certificate(*trivial, kZ6, cyc({1, 2}), cyc({0, 4})));
  EXPECT_EQ(kind_of([] { find_certificate(kZ6, cyc({1, 2}), cyc({4})); }),
            ErrorKind::InvalidInput);
}

TEST(VerifyCertificate, Examples) {
  EXPECT_TRUE(verify_certificate(z8_certificate(), kZ8, kZ8A, kZ8B));
  NearlyPeriodicCertificate gap = z8_certificate();
  // |Y| >= |R|: move 2 into Y and drop it from R.
  gap.R = cyc({6});
  gap.Z = cyc({1, 2, 3, 5});
  gap.H = make_subgroup(kZ8, cyc({0, 2, 4, 6}));
  EXPECT_FALSE(verify_certificate(gap, kZ8, kZ8A, kZ8B));
  NearlyPeriodicCertificate broken = z8_certificate();
  broken.S = cyc({0, 2, 4});
  broken.Y = cyc({1, 6});
  EXPECT_FALSE(verify_certificate(broken, kZ8, kZ8A, kZ8B));
  NearlyPeriodicCertificate wrong_h = z8_certificate();
  wrong_h.H = make_subgroup(kZ8, cyc({0, 4}));
  EXPECT_FALSE(verify_certificate(wrong_h, kZ8, kZ8A, kZ8B));
  // R = {0} is only allowed when 0 is in B.
  NearlyPeriodicCertificate unit{cyc({0}), kZ8A, {}, kZ8B, make_subgroup(kZ8, cyc({0}))};
  EXPECT_FALSE(verify_certificate(unit, kZ8, kZ8A, kZ8B));
}

TEST(Chowla, Examples) {
  EXPECT_TRUE(is_chowla_set(FiniteAbelianGroup::cyclic(7), cyc({1, 2, 3})));
  EXPECT_FALSE(is_chowla_set(kZ12, cyc({0, 5})));
  EXPECT_FALSE(is_chowla_set(kZ12, cyc({2, 4, 6})));
}

TEST(GeneralizedSymmetric, Examples) {
  EXPECT_TRUE(generalized_symmetric_sufficient(kZ12, cyc({1, 4, 6}), cyc({1, 4, 6})));
  EXPECT_FALSE(generalized_symmetric_sufficient(kZ6, cyc({1, 5}), cyc({2, 4})));
  EXPECT_EQ(kind_of([] { generalized_symmetric_sufficient(kZ12, kZ12A, kZ12B); }),
            ErrorKind::PreconditionViolated);
}

TEST(GeneralizedSymmetric, ImpliesMatchable) {
  std::mt19937_64 rng(99);
  for (const std::vector<int>& n : std::vector<std::vector<int>>{{8}, {2, 4}, {12}, {2, 6}, {3, 3}}) {
    const FiniteAbelianGroup g(n);
    int hits = 0;
    for (int trial = 0; trial < 1500; ++trial) {
      const std::size_t k = 1 + rng() % 5;
      std::vector<Index> pool(g.order() - 1);
      std::iota(pool.begin(), pool.end(), 1u);
      std::shuffle(pool.begin(), pool.end(), rng);
      IndexSet a(pool.begin(), pool.begin() + k);
      std::shuffle(pool.begin(), pool.end(), rng);
      IndexSet b(pool.begin(), pool.begin() + k);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (generalized_symmetric_sufficient(g, g.subset_of(a), g.subset_of(b))) {
        ++hits;
        EXPECT_TRUE(has_matching(g, a, b));
      }
    }
    EXPECT_GT(hits, 0);
  }
}

TEST(Boundary, ExistsExamples) {
  EXPECT_FALSE(exists_unmatchable_group(FiniteAbelianGroup::cyclic(4), 3));
  EXPECT_TRUE(exists_unmatchable_group(kZ12, 5));
  EXPECT_TRUE(exists_unmatchable_group(kZ6, 2));
  EXPECT_EQ(kind_of([] { exists_unmatchable_group(FiniteAbelianGroup::cyclic(7), 3); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { exists_unmatchable_group(kZ12, 1); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { exists_unmatchable_group(kZ12, 12); }), ErrorKind::InvalidInput);
}

TEST(Boundary, ConstructExamples) {
  const UnmatchablePair z6 = construct_unmatchable_group(kZ6, 2);
  EXPECT_EQ(z6.A, cyc({0, 3}));
  EXPECT_EQ(z6.B, cyc({1, 3}));
  EXPECT_EQ(z6.certificate.R, cyc({3}));
  EXPECT_EQ(z6.certificate.S, cyc({0, 3}));
  EXPECT_TRUE(z6.certificate.Y.empty());
  EXPECT_FALSE(find_matching(kZ6, z6.A, z6.B));

  EXPECT_EQ(kind_of([] { construct_unmatchable_group(FiniteAbelianGroup::cyclic(4), 3); }),
            ErrorKind::NoSuitableSubgroup);

  const UnmatchablePair z12 = construct_unmatchable_group(kZ12, 5);
  EXPECT_EQ(z12.A, kZ12A);
  EXPECT_EQ(z12.B, kZ12B);
  EXPECT_EQ(z12.certificate.Z.size(), 2u);
  EXPECT_TRUE(verify_certificate(z12.certificate, kZ12, z12.A, z12.B));
  EXPECT_FALSE(find_matching(kZ12, z12.A, z12.B));
}

TEST(Boundary, CongruenceSpecialisation) {
  for (const std::vector<int>& n : std::vector<std::vector<int>>{
           {4}, {6}, {8}, {9}, {10}, {12}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {15}, {16}, {18}}) {
    const FiniteAbelianGroup g(n);
    const std::size_t n0 = *n0_group(g);
    for (std::size_t k = n0; k < g.order(); ++k) {
      if (k % n0 != n0 - 1) {
        EXPECT_TRUE(exists_unmatchable_group(g, k)) << to_string(g) << k;
      }
    }
  }
}

TEST(Boundary, ConstructedPairsAreRefuted) {
  for (const std::vector<int>& n : std::vector<std::vector<int>>{
           {4}, {6}, {8}, {9}, {12}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {16}, {2, 8}, {24}}) {
    const FiniteAbelianGroup g(n);
    const std::size_t n0 = *n0_group(g);
    for (std::size_t k = n0; k < g.order(); ++k) {
      if (!exists_unmatchable_group(g, k)) {
        EXPECT_EQ(kind_of([&] { construct_unmatchable_group(g, k); }),
                  ErrorKind::NoSuitableSubgroup);
        continue;
      }
      const UnmatchablePair p = construct_unmatchable_group(g, k);
      EXPECT_EQ(p.A.size(), k);
      EXPECT_EQ(p.B.size(), k);
      EXPECT_FALSE(p.B.contains(g.identity()));
      EXPECT_TRUE(verify_certificate(p.certificate, g, p.A, p.B));
      EXPECT_FALSE(find_matching(g, p.A, p.B));
    }
  }
}

TEST(Quotient, Examples) {
  const Subgroup h4 = make_subgroup(kZ8, cyc({0, 4}));
  const QuotientProjection p8 = quotient_project(kZ8, h4, kZ8A, kZ8B, z8_certificate());
  EXPECT_FALSE(p8.hypothesis_holds);
  EXPECT_EQ(p8.guarantee, QuotientGuarantee::NoGuarantee);
  EXPECT_EQ(p8.A, cyc({0, 1, 2}));
  EXPECT_EQ(p8.B, cyc({1, 2, 3}));
  const auto w = find_matching(p8.quotient, p8.A, p8.B);
  ASSERT_TRUE(w);
  // 0 -> 3, 1 -> 2, 2 -> 1.
  EXPECT_EQ(w->assignment, (std::vector<std::pair<GroupElement, GroupElement>>{
                               {el(0), el(3)}, {el(1), el(2)}, {el(2), el(1)}}));

  const auto c12 = *find_certificate(kZ12, kZ12A, kZ12B);
  const Subgroup h3 = make_subgroup(kZ12, cyc({0, 4, 8}));
  const QuotientProjection p12 = quotient_project(kZ12, h3, kZ12A, kZ12B, c12);
  EXPECT_TRUE(p12.hypothesis_holds);
  EXPECT_EQ(p12.guarantee, QuotientGuarantee::UnmatchableInQuotient);
  EXPECT_TRUE(p12.size_mismatch);
  EXPECT_EQ(p12.A.size(), 4u);
  EXPECT_EQ(p12.B.size(), 3u);

  const Subgroup trivial = make_subgroup(kZ12, cyc({0}));
  const QuotientProjection same = quotient_project(kZ12, trivial, kZ12A, kZ12B, c12);
  EXPECT_TRUE(same.hypothesis_holds);
  EXPECT_EQ(same.A, kZ12A);
  EXPECT_EQ(same.B, kZ12B);
  ASSERT_TRUE(same.projected_certificate);
  EXPECT_TRUE(verify_certificate(*same.projected_certificate, same.quotient, same.A, same.B));
  EXPECT_FALSE(find_matching(same.quotient, same.A, same.B));

  NearlyPeriodicCertificate bad = c12;
  bad.Y = cyc({3});
  EXPECT_EQ(kind_of([&] { quotient_project(kZ12, h3, kZ12A, kZ12B, bad); }),
            ErrorKind::InvalidInput);
}

TEST(Deciders, ThreeWayAgreementOnSmallGroups) {
  for (const std::vector<int>& n : std::vector<std::vector<int>>{{6}, {2, 2}, {2, 4}, {9}}) {
    const FiniteAbelianGroup g(n);
    const oracle::Group o{n};
    const auto lattice = subgroup_lattice(g);
    const Index order = static_cast<Index>(g.order());
    for (std::uint32_t ma = 1; ma < (1u << order); ++ma) {
      IndexSet a;
      for (Index i = 0; i < order; ++i)
        if (ma >> i & 1u) a.push_back(i);
      if (a.size() > 4) continue;
      for (std::uint32_t mb = 2; mb < (1u << order); mb += 2) {
        if (static_cast<std::size_t>(__builtin_popcount(mb)) != a.size()) continue;
        IndexSet b;
        for (Index i = 0; i < order; ++i)
          if (mb >> i & 1u) b.push_back(i);
        const bool truth = oracle::matchable(o, {a.begin(), a.end()}, {b.begin(), b.end()});
        EXPECT_EQ(has_matching(g, a, b), truth);
        const auto cert = search_certificate(g, lattice, a, b);
        EXPECT_EQ(cert.has_value(), !truth);
        if (cert) {
          EXPECT_TRUE(check_certificate(g, *cert, a, b));
        }
        EXPECT_EQ(naive_unmatchability_witness(g, g.subset_of(a), g.subset_of(b)).has_value(),
                  !truth);
      }
    }
  }
}

TEST(Decide, ReturnsConsistentPayload) {
  const GroupVerdict v = decide(kZ12, kZ12A, kZ12B);
  EXPECT_FALSE(v.matchable());
  EXPECT_TRUE(verify_certificate(v.certificate(), kZ12, kZ12A, kZ12B));
  const GroupVerdict m = decide(kZ5, cyc({1, 2}), cyc({1, 2}));
  EXPECT_TRUE(m.matchable());
  EXPECT_EQ(m.witness().assignment.size(), 2u);
}
