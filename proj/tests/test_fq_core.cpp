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
#include <random>

#include <gtest/gtest.h>

#include "matchkit/error.hpp"
#include "matchkit/fq_core.hpp"
#include "oracles.hpp"

using namespace matchkit;
using namespace matchkit::fq;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

oracle::Gf2 oracle_for(const ExtensionField& f) {
  std::uint32_t mask = 0;
  for (int i = 0; i <= f.m(); ++i)
    if (f.modulus()[i]) mask |= 1u << i;
  return {f.m(), mask};
}

oracle::Codes codes(const FqSubspace& u) {
  oracle::Codes out;
  for (const auto& x : u.elements()) out.push_back(static_cast<std::uint32_t>(u.field().code(x)));
  std::sort(out.begin(), out.end());
  return out;
}

const ExtensionField& f16() {
  static const ExtensionField f = make_extension_field(2, 4, {1, 1, 0, 0, 1});
  return f;
}

// Polynomial notation helpers for F_16.
FieldElement e16(std::vector<int> c) { return f16().element(c); }
const std::vector<int> kOne{1, 0, 0, 0}, kT{0, 1, 0, 0}, kT2{0, 0, 1, 0}, kT3{0, 0, 0, 1};
const std::vector<int> kOmega{0, 1, 1, 0};  // t^2 + t

FqSubspace random_subspace(const ExtensionField& f, std::mt19937_64& rng, int max_dim) {
  const int k = static_cast<int>(rng() % (max_dim + 1));
  std::vector<FieldElement> v;
  for (int i = 0; i < k; ++i) v.push_back(f.from_code(rng() % f.order()));
  return span(f, v);
}

}  // namespace

TEST(ExtensionField, Construction) {
  EXPECT_NO_THROW(make_extension_field(2, 4, {1, 1, 0, 0, 1}));
  EXPECT_EQ(kind_of([] { make_extension_field(2, 2, {1, 0, 1}); }), ErrorKind::InvalidInput);
  EXPECT_NO_THROW(make_extension_field(2, 3, {1, 1, 0, 1}));
  EXPECT_EQ(kind_of([] { make_extension_field(4, 2, {1, 1, 1}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { make_extension_field(2, 2, {1, 1, 0}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { make_extension_field(2, 2, {1, 1}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { make_extension_field(3, 2, {1, 0, 3}); }), ErrorKind::InvalidInput);
  // t^4 + t^2 + 1 = (t^2 + t + 1)^2 has no root but is reducible.
  EXPECT_EQ(kind_of([] { make_extension_field(2, 4, {1, 0, 1, 0, 1}); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { ExtensionField::standard(2, 7); }), ErrorKind::InvalidInput);
}

TEST(ExtensionField, StandardModuliAreIrreducible) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {2, 12},
           {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}}) {
    const ExtensionField f = ExtensionField::standard(p, m);
    EXPECT_EQ(f.modulus(), *ExtensionField::default_modulus(p, m));
    EXPECT_NO_THROW(make_extension_field(p, m, f.modulus()));
    // Every element satisfies x^(p^m) = x; spot-check the generator.
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    EXPECT_EQ(f.pow(f.generator(), q), f.generator()) << p << "," << m;
  }
}

TEST(FieldArith, Examples) {
  const auto& f = f16();
  EXPECT_EQ(field_arith(f, e16(kT), e16(kT3), ArithOp::Mul), e16({1, 1, 0, 0}));
  EXPECT_EQ(f.inv(e16(kT)), e16({1, 0, 0, 1}));
  EXPECT_EQ(field_arith(f, e16(kT), e16(kT), ArithOp::Inv), e16({1, 0, 0, 1}));
  EXPECT_EQ(field_arith(f, e16(kT), e16(kT), ArithOp::Add), f.zero());
  EXPECT_EQ(field_arith(f, e16(kT), f.zero(), ArithOp::Pow, 15), f.one());
  for (std::uint64_t c = 0; c < 16; ++c) EXPECT_EQ(f.mul(f.from_code(c), f.one()), f.from_code(c));
  EXPECT_EQ(kind_of([&] { f.inv(f.zero()); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { f.element({0, 2, 0, 0}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { f.element({0, 1}); }), ErrorKind::InvalidInput);
}

TEST(FieldArith, TablesMatchCarrylessOracle) {
  for (int m : {2, 3, 4, 5, 6}) {
    const ExtensionField f = ExtensionField::standard(2, m);
    const oracle::Gf2 o = oracle_for(f);
    for (std::uint64_t x = 0; x < f.order(); ++x) {
      const auto fx = f.from_code(x);
      EXPECT_EQ(f.code(fx), x);
      if (x) {
        EXPECT_EQ(f.code(f.inv(fx)), o.inv(static_cast<std::uint32_t>(x)));
      }
      EXPECT_EQ(f.code(f.frobenius(fx)), o.mul(x, x));
      for (std::uint64_t y = 0; y < f.order(); ++y) {
        const auto fy = f.from_code(y);
        EXPECT_EQ(f.code(f.mul(fx, fy)), o.mul(static_cast<std::uint32_t>(x),
                                                static_cast<std::uint32_t>(y)));
        EXPECT_EQ(f.code(f.add(fx, fy)), x ^ y);
      }
    }
  }
}

TEST(FieldArith, OddCharacteristicAxioms) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {3, 4}}) {
    const ExtensionField f = ExtensionField::standard(p, m);
    std::mt19937_64 rng(static_cast<unsigned>(p * 10 + m));
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = f.from_code(rng() % f.order());
      const auto y = f.from_code(rng() % f.order());
      const auto z = f.from_code(rng() % f.order());
      EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
      EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      EXPECT_EQ(f.sub(f.add(x, y), y), x);
      EXPECT_EQ(f.frobenius(x), f.pow(x, static_cast<std::uint64_t>(p)));
      if (!x.is_zero()) {
        EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      }
      Row r = x.coeffs() * f.frobenius_matrix();
      reduce_mod(r, p);
      EXPECT_EQ(FieldElement(r), f.frobenius(x));
    }
  }
}

TEST(FieldElement, CanonicalOrderIsCodeOrder) {
  const ExtensionField f = ExtensionField::standard(3, 2);
  for (std::uint64_t x = 0; x + 1 < f.order(); ++x) EXPECT_LT(f.from_code(x), f.from_code(x + 1));
  EXPECT_EQ(to_string(e16({1, 1, 0, 1})), "t^3+t+1");
  EXPECT_EQ(to_string(f16().zero()), "0");
}

TEST(MinimalDegree, Examples) {
  const auto& f = f16();
  EXPECT_EQ(minimal_degree(f, e16(kT)), 4);
  EXPECT_EQ(minimal_degree(f, f.one()), 1);
  EXPECT_EQ(minimal_degree(f, e16(kOmega)), 2);
  EXPECT_EQ(kind_of([&] { minimal_degree(f, f.zero()); }), ErrorKind::InvalidInput);
  for (int m : {2, 3, 4, 6}) {
    const ExtensionField g = ExtensionField::standard(2, m);
    const oracle::Gf2 o = oracle_for(g);
    for (std::uint64_t x = 1; x < g.order(); ++x) {
      EXPECT_EQ(minimal_degree(g, g.from_code(x)), o.degree(static_cast<std::uint32_t>(x)));
    }
  }
}

TEST(SubfieldSubspace, Examples) {
  const auto& f = f16();
  EXPECT_EQ(subfield_subspace(f, 2), span(f, {f.one(), e16(kOmega)}));
  EXPECT_EQ(subfield_subspace(f, 1), span(f, {f.one()}));
  EXPECT_EQ(subfield_subspace(f, 4), FqSubspace::whole(f));
  EXPECT_EQ(kind_of([&] { subfield_subspace(f, 3); }), ErrorKind::InvalidInput);
}

TEST(SubfieldSubspace, FixedSpaceHasDimensionD) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {2, 12}, {3, 4}, {2, 8}, {5, 2}}) {
    const ExtensionField f = ExtensionField::standard(p, m);
    for (int d : divisors(m)) {
      const FqSubspace s = subfield_subspace(f, d);
      EXPECT_EQ(s.dim(), d) << p << "^" << m << " d=" << d;
      EXPECT_TRUE(s.contains(f.one()));
      if (f.order() <= 4096) {
        for (const auto& x : s.elements()) {
          if (!x.is_zero()) {
            EXPECT_EQ(m % minimal_degree(f, x), 0);
          }
          if (!x.is_zero()) {
            EXPECT_EQ(d % minimal_degree(f, x), 0);
          }
        }
      }
    }
  }
  const ExtensionField f64 = ExtensionField::standard(2, 6);
  const oracle::Gf2 o = oracle_for(f64);
  for (int d : divisors(6)) {
    oracle::Codes fixed;
    for (std::uint32_t x = 0; x < 64; ++x)
      if (o.pow(x, 1ull << d) == x) fixed.push_back(x);
    EXPECT_EQ(codes(subfield_subspace(f64, d)), fixed);
  }
}

TEST(GeneratedSubfield, Examples) {
  const auto& f = f16();
  EXPECT_EQ(generated_subfield(span(f, {e16(kOmega)})), 2);
  EXPECT_EQ(generated_subfield(span(f, {f.one()})), 1);
  EXPECT_EQ(generated_subfield(span(f, {e16(kT)})), 4);
  EXPECT_EQ(kind_of([&] { generated_subfield(FqSubspace(f)); }), ErrorKind::InvalidInput);
  const ExtensionField f64 = ExtensionField::standard(2, 6);
  // Elements of F_4 and F_8 together generate F_64.
  const FieldElement a = subfield_subspace(f64, 2).basis_element(1);
  const FieldElement b = subfield_subspace(f64, 3).basis_element(1);
  EXPECT_EQ(generated_subfield(span(f64, {a})), 2);
  EXPECT_EQ(generated_subfield(span(f64, {b})), 3);
  EXPECT_EQ(generated_subfield(span(f64, {a, b})), 6);
}

TEST(SubspaceOps, Examples) {
  const auto& f = f16();
  EXPECT_EQ(intersect(span(f, {f.one(), e16(kOmega)}), span(f, {e16(kOmega), e16(kT)})),
            span(f, {e16(kOmega)}));
  const FqSubspace u = span(f, {e16(kT), e16(kT3)});
  EXPECT_EQ(sum(u, FqSubspace(f)), u);
  EXPECT_EQ(complement(span(f, {e16(kT)}), u), span(f, {e16(kT3)}));
  EXPECT_EQ(kind_of([&] { complement(span(f, {e16(kT2)}), u); }), ErrorKind::InvalidInput);
}

TEST(SubspaceOps, CanonicalFormIsStructural) {
  const auto& f = f16();
  const FqSubspace a = span(f, {e16({1, 1, 0, 0}), e16({0, 1, 1, 0})});
  const FqSubspace b = span(f, {e16({1, 0, 1, 0}), e16({1, 1, 0, 0}), e16({0, 1, 1, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
  // Reduced row-echelon: unit pivots, zero above and below.
  const Matrix& m = a.basis();
  for (int r = 0; r < a.dim(); ++r) {
    const int piv = a.pivots()[r];
    EXPECT_EQ(m(r, piv), 1);
    for (int s = 0; s < a.dim(); ++s)
      if (s != r) {
        EXPECT_EQ(m(s, piv), 0);
      }
    for (int c = 0; c < piv; ++c) EXPECT_EQ(m(r, c), 0);
    if (r > 0) {
      EXPECT_LT(a.pivots()[r - 1], piv);
    }
  }
}

TEST(SubspaceOps, AgreeWithElementSets) {
  std::mt19937_64 rng(3);
  for (int m : {4, 6}) {
    const ExtensionField f = ExtensionField::standard(2, m);
    const oracle::Gf2 o = oracle_for(f);
    for (int trial = 0; trial < 300; ++trial) {
      const FqSubspace u = random_subspace(f, rng, m);
      const FqSubspace v = random_subspace(f, rng, m);
      const auto cu = codes(u), cv = codes(v);
      EXPECT_EQ(codes(intersect(u, v)), oracle::meet(cu, cv));
      oracle::Codes joined = cu;
      joined.insert(joined.end(), cv.begin(), cv.end());
      EXPECT_EQ(codes(sum(u, v)), oracle::span(joined));
      EXPECT_EQ(u.contains(v), oracle::within(cv, cu));
      const FqSubspace w = sum(u, v);
      const FqSubspace y = complement(u, w);
      EXPECT_EQ(y.dim() + u.dim(), w.dim());
      EXPECT_EQ(sum(u, y), w);
      EXPECT_TRUE(intersect(u, y).is_zero());
      if (!u.is_zero() && !v.is_zero()) {
        EXPECT_EQ(codes(minkowski_span(u, v)), oracle::product_span(o, cu, cv));
      }
      const auto x = f.from_code(1 + rng() % (f.order() - 1));
      EXPECT_EQ(codes(scale(x, u)), oracle::scale(o, static_cast<std::uint32_t>(f.code(x)), cu));
    }
  }
}

TEST(MinkowskiSpan, Examples) {
  const auto& f = f16();
  const FqSubspace s = span(f, {e16(kT), e16({0, 0, 1, 1})});
  EXPECT_EQ(minkowski_span(s, span(f, {e16(kOmega)})), s);
  EXPECT_EQ(minkowski_span(s, span(f, {f.one()})), s);
  EXPECT_EQ(minkowski_span(span(f, {f.one()}), span(f, {e16(kT)})), span(f, {e16(kT)}));
  EXPECT_EQ(kind_of([&] { minkowski_span(s, FqSubspace(f)); }), ErrorKind::InvalidInput);
}

TEST(MinkowskiSpan, MonotoneInBothArguments) {
  std::mt19937_64 rng(8);
  const auto& f = f16();
  for (int trial = 0; trial < 300; ++trial) {
    const FqSubspace s = random_subspace(f, rng, 3), r = random_subspace(f, rng, 3);
    const FqSubspace s2 = sum(s, random_subspace(f, rng, 2));
    const FqSubspace r2 = sum(r, random_subspace(f, rng, 2));
    if (s.is_zero() || r.is_zero()) continue;
    EXPECT_TRUE(minkowski_span(s2, r2).contains(minkowski_span(s, r)));
  }
}

TEST(StableCore, Examples) {
  const auto& f = f16();
  const FqSubspace f4 = subfield_subspace(f, 2);
  const FqSubspace a = span(f, {e16(kT), e16({0, 0, 1, 1})});
  EXPECT_EQ(stable_core(a, f4), a);
  EXPECT_EQ(stable_core(a, subfield_subspace(f, 1)), a);
  EXPECT_TRUE(stable_core(span(f, {e16(kT), e16(kT2)}), f4).is_zero());
}

TEST(StableCore, IsTheLargestStableSubspace) {
  const auto& f = f16();
  const FqSubspace f4 = subfield_subspace(f, 2);
  const auto all = enumerate_subspaces(FqSubspace::whole(f));
  for (const FqSubspace& a : all) {
    const FqSubspace core = stable_core(a, f4);
    EXPECT_TRUE(a.contains(core));
    for (const auto& x : f4.basis_elements()) EXPECT_TRUE(core.contains(scale(x, core)));
    for (const FqSubspace& s : all) {
      if (!a.contains(s) || s.is_zero()) continue;
      if (minkowski_span(s, f4) == s) {
        EXPECT_TRUE(core.contains(s));
      }
    }
  }
}

TEST(EnumerateSubspaces, Examples) {
  const auto& f = f16();
  EXPECT_EQ(enumerate_subspaces(span(f, {e16(kT), e16(kT2)})).size(), 5u);
  const auto zero = enumerate_subspaces(FqSubspace(f));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  EXPECT_EQ(enumerate_subspaces(FqSubspace::whole(f), std::vector<int>{3}).size(), 15u);
}

TEST(EnumerateSubspaces, CountsAreGaussianBinomials) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}}) {
    const ExtensionField f = ExtensionField::standard(p, m);
    const auto all = enumerate_subspaces(FqSubspace::whole(f));
    std::uint64_t total = 0;
    for (int k = 0; k <= m; ++k) {
      const auto count = static_cast<std::uint64_t>(
          std::count_if(all.begin(), all.end(), [k](const FqSubspace& u) { return u.dim() == k; }));
      EXPECT_EQ(count, oracle::gaussian_binomial(m, k, static_cast<std::uint64_t>(p)));
      total += count;
    }
    EXPECT_EQ(all.size(), total);
    std::set<std::vector<int>> distinct;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Matrix& b = all[i].basis();
      distinct.insert(std::vector<int>(b.data(), b.data() + b.size()));
      if (i > 0) {
        EXPECT_TRUE(all[i - 1] < all[i]);
      }
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
  const ExtensionField f16b = ExtensionField::standard(2, 4);
  std::set<oracle::Codes> expected;
  for (const auto& s : oracle::subspaces(oracle::span({1, 2, 4, 8}))) expected.insert(s);
  std::set<oracle::Codes> got;
  for (const auto& u : enumerate_subspaces(FqSubspace::whole(f16b))) got.insert(codes(u));
  EXPECT_EQ(got, expected);
}

TEST(EnumerateSubspaces, BoundsAreEnforced) {
  const ExtensionField f = ExtensionField::standard(2, 8);
  EXPECT_EQ(kind_of([&] { enumerate_subspaces(FqSubspace::whole(f)); }), ErrorKind::InvalidInput);
  SubspaceBounds wide;
  wide.max_points = 256;
  EXPECT_EQ(enumerate_subspaces(FqSubspace::whole(f), std::vector<int>{1}, wide).size(), 255u);
}

// Whenever <SR> = S: every nonzero x in R has S x in S and degree at most
// dim S, and dim S is a multiple of the degree of F_p(R).
TEST(StabilityLaws, HoldOnEveryStablePairOfF16) {
  const auto& f = f16();
  const auto all = enumerate_subspaces(FqSubspace::whole(f));
  int stable = 0;
  for (const FqSubspace& s : all) {
    if (s.is_zero()) continue;
    for (const FqSubspace& r : all) {
      if (r.is_zero() || !(minkowski_span(s, r) == s)) continue;
      ++stable;
      for (const auto& x : r.elements()) {
        if (x.is_zero()) continue;
        EXPECT_TRUE(s.contains(scale(x, s)));
        EXPECT_LE(minimal_degree(f, x), s.dim());
      }
      EXPECT_EQ(s.dim() % generated_subfield(r), 0);
    }
  }
  EXPECT_GT(stable, 0);
}
