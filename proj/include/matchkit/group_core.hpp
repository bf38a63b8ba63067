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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace matchkit::group {

// Position of an element in the canonical (lexicographic) order of its group.
// Index 0 is always the identity.
using Index = std::uint32_t;

// Sorted, duplicate-free list of indices. The index-level API below works on
// these directly; it is what the census and the deciders use internally.
using IndexSet = std::vector<Index>;

struct GroupElement {
  std::vector<int> residues;

  auto operator<=>(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& x);

// Canonical finite subset: strictly increasing in lexicographic order.
class GroupSubset {
 public:
  GroupSubset() = default;
  // Sorts and removes duplicates.
  explicit GroupSubset(std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& x) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const GroupSubset&) const = default;

 private:
  std::vector<GroupElement> elements_;
};

// Abstract finite abelian group law on indices [0, order()). Implemented by
// FiniteAbelianGroup and QuotientGroup so the deciders run unchanged on both.
class GroupLaw {
 public:
  virtual ~GroupLaw() = default;

  virtual std::size_t order() const = 0;
  virtual Index add(Index a, Index b) const = 0;
  virtual Index negate(Index a) const = 0;
  virtual GroupElement element_at(Index i) const = 0;
  // Throws InvalidInput when x is not a (canonical) element of this group.
  virtual Index index_of(const GroupElement& x) const = 0;

  IndexSet indices_of(const GroupSubset& s) const;
  GroupSubset subset_of(const IndexSet& s) const;
};

// G = Z/n_1 x ... x Z/n_k in invariant-factor form (n_i | n_{i+1}).
class FiniteAbelianGroup final : public GroupLaw {
 public:
  // Trivial group.
  FiniteAbelianGroup();
  // Throws InvalidInput unless every n_i >= 2 and n_i | n_{i+1}.
  explicit FiniteAbelianGroup(std::vector<int> invariant_factors);

  static FiniteAbelianGroup cyclic(int n);

  const std::vector<int>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  std::size_t order() const override { return order_; }
  Index add(Index a, Index b) const override;
  Index negate(Index a) const override;
  GroupElement element_at(Index i) const override;
  Index index_of(const GroupElement& x) const override;

  GroupElement identity() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  bool contains(const GroupElement& x) const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return factors_ == other.factors_;
  }

 private:
  Index add_slow(Index a, Index b) const;

  std::vector<int> factors_;
  std::size_t order_ = 1;
  // Addition table, shared between copies; only built for small groups.
  std::shared_ptr<const std::vector<Index>> table_;
};

std::string to_string(const FiniteAbelianGroup& g);

struct Subgroup {
  GroupSubset carrier;

  std::size_t order() const { return carrier.size(); }
  bool operator==(const Subgroup&) const = default;
};

// Checks the subgroup axioms; throws InvalidInput when they fail.
Subgroup make_subgroup(const GroupLaw& g, const GroupSubset& carrier);

struct EnumerationBounds {
  std::size_t max_group_order = 4096;
  std::size_t max_subgroups = 200000;
};

// --- index-level primitives ---------------------------------------------

IndexSet generated_subgroup(const GroupLaw& g, const IndexSet& generators);
// Every subgroup, sorted by size and then lexicographically by carrier.
std::vector<IndexSet> subgroup_lattice(const GroupLaw& g,
                                       const EnumerationBounds& bounds = {});
std::uint64_t order_of(const GroupLaw& g, Index x);
IndexSet sumset(const GroupLaw& g, const IndexSet& s, const IndexSet& r);
// Union of all cosets x + h contained in a.
IndexSet periodic_part(const GroupLaw& g, const IndexSet& a, const IndexSet& h);
bool is_periodic(const GroupLaw& g, const IndexSet& s, const IndexSet& h);

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
bool contains(const IndexSet& s, Index x);

// --- element-level operations --------------------------------------------

Subgroup subgroup_generated(const GroupLaw& g, const GroupSubset& x);
std::vector<Subgroup> all_subgroups(const GroupLaw& g,
                                    const EnumerationBounds& bounds = {});
// lcm_i(n_i / gcd(n_i, x_i)).
std::uint64_t element_order(const FiniteAbelianGroup& g, const GroupElement& x);
// Generic version by repeated addition; works for quotients too.
std::uint64_t element_order(const GroupLaw& g, const GroupElement& x);
GroupSubset product_set(const GroupLaw& g, const GroupSubset& s,
                        const GroupSubset& r);

struct CosetDecomposition {
  bool is_union = false;
  // Least element of every coset, when is_union holds.
  GroupSubset representatives;
};
CosetDecomposition is_union_of_cosets(const GroupLaw& g, const GroupSubset& s,
                                      const Subgroup& h);
GroupSubset maximal_periodic_part(const GroupLaw& g, const GroupSubset& a,
                                  const Subgroup& h);
// Least order of a nontrivial proper subgroup; the least prime dividing |G|
// when |G| is composite.
std::optional<std::size_t> n0_group(const GroupLaw& g);

// G/H with every coset represented by its least element.
class QuotientGroup final : public GroupLaw {
 public:
  QuotientGroup(FiniteAbelianGroup parent, Subgroup h);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const Subgroup& kernel() const { return kernel_; }
  const GroupSubset& representatives() const { return representatives_; }

  std::size_t order() const override { return reps_.size(); }
  Index add(Index a, Index b) const override;
  Index negate(Index a) const override;
  GroupElement element_at(Index i) const override;
  Index index_of(const GroupElement& x) const override;

  // Parent index -> quotient index.
  Index project_index(Index parent_index) const { return projection_[parent_index]; }
  GroupElement project(const GroupElement& x) const;
  GroupSubset project(const GroupSubset& s) const;

 private:
  FiniteAbelianGroup parent_;
  Subgroup kernel_;
  GroupSubset representatives_;
  std::vector<Index> reps_;
  std::vector<Index> projection_;
};

QuotientGroup quotient_group(const FiniteAbelianGroup& g, const Subgroup& h);

}  // namespace matchkit::group
