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

#include "matchkit/group_core.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "matchkit/error.hpp"

namespace matchkit::group {

std::string to_string(const GroupElement& x) {
  if (x.residues.size() == 1) return std::to_string(x.residues[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.residues[i]);
  }
  return out + ")";
}

GroupSubset::GroupSubset(std::vector<GroupElement> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool GroupSubset::contains(const GroupElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IndexSet GroupLaw::indices_of(const GroupSubset& s) const {
  IndexSet out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(index_of(x));
  // Lexicographic element order coincides with index order, so `out` is
  // already sorted; keep the check cheap and explicit.
  if (!std::is_sorted(out.begin(), out.end())) std::sort(out.begin(), out.end());
  return out;
}

GroupSubset GroupLaw::subset_of(const IndexSet& s) const {
  std::vector<GroupElement> elements;
  elements.reserve(s.size());
  for (Index i : s) elements.push_back(element_at(i));
  return GroupSubset(std::move(elements));
}

// --- FiniteAbelianGroup ----------------------------------------------------

namespace {
constexpr std::size_t kTableLimit = 512;
constexpr std::size_t kMaxOrder = std::size_t{1} << 30;
}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  order_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int n = factors_[i];
    if (n < 2) fail(ErrorKind::InvalidInput, "invariant factors must be >= 2");
    if (i > 0 && n % factors_[i - 1] != 0) {
      fail(ErrorKind::InvalidInput,
           "invariant factors must satisfy n_i | n_{i+1}");
    }
    if (order_ > kMaxOrder / static_cast<std::size_t>(n)) {
      fail(ErrorKind::InvalidInput, "group order too large");
    }
    order_ *= static_cast<std::size_t>(n);
  }
  if (order_ <= kTableLimit) {
    auto table = std::make_shared<std::vector<Index>>(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        (*table)[a * order_ + b] =
            add_slow(static_cast<Index>(a), static_cast<Index>(b));
      }
    }
    table_ = std::move(table);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(int n) {
  if (n == 1) return FiniteAbelianGroup();
  return FiniteAbelianGroup(std::vector<int>{n});
}

Index FiniteAbelianGroup::add_slow(Index a, Index b) const {
  Index result = 0;
  Index place = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const Index n = static_cast<Index>(factors_[i]);
    const Index da = a % n, db = b % n;
    a /= n;
    b /= n;
    result += ((da + db) % n) * place;
    place *= n;
  }
  return result;
}

Index FiniteAbelianGroup::add(Index a, Index b) const {
  if (table_) return (*table_)[static_cast<std::size_t>(a) * order_ + b];
  return add_slow(a, b);
}

Index FiniteAbelianGroup::negate(Index a) const {
  Index result = 0;
  Index place = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const Index n = static_cast<Index>(factors_[i]);
    const Index d = a % n;
    a /= n;
    result += ((n - d) % n) * place;
    place *= n;
  }
  return result;
}

GroupElement FiniteAbelianGroup::element_at(Index i) const {
  if (i >= order_) fail(ErrorKind::InvalidInput, "group index out of range");
  GroupElement x;
  x.residues.assign(factors_.size(), 0);
  for (std::size_t k = factors_.size(); k-- > 0;) {
    x.residues[k] = static_cast<int>(i % static_cast<Index>(factors_[k]));
    i /= static_cast<Index>(factors_[k]);
  }
  return x;
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
  if (x.residues.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (x.residues[k] < 0 || x.residues[k] >= factors_[k]) return false;
  }
  return true;
}

Index FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (!contains(x)) {
    fail(ErrorKind::InvalidInput,
         "element " + to_string(x) + " is not in " + matchkit::group::to_string(*this));
  }
  Index i = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    i = i * static_cast<Index>(factors_[k]) + static_cast<Index>(x.residues[k]);
  }
  return i;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<int>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x,
                                     const GroupElement& y) const {
  return element_at(add(index_of(x), index_of(y)));
}

std::string to_string(const FiniteAbelianGroup& g) {
  if (g.rank() == 0) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(g.invariant_factors()[i]);
  }
  return out;
}

// --- set helpers -----------------------------------------------------------

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const IndexSet& s, Index x) {
  return std::binary_search(s.begin(), s.end(), x);
}

namespace {

IndexSet from_mask(const std::vector<char>& mask) {
  IndexSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

void check_in_range(const GroupLaw& g, const IndexSet& s) {
  for (Index x : s) {
    if (x >= g.order()) fail(ErrorKind::InvalidInput, "index out of range");
  }
}

}  // namespace

// --- index-level primitives ------------------------------------------------

IndexSet sumset(const GroupLaw& g, const IndexSet& s, const IndexSet& r) {
  std::vector<char> mask(g.order(), 0);
  for (Index x : s) {
    for (Index y : r) mask[g.add(x, y)] = 1;
  }
  return from_mask(mask);
}

IndexSet generated_subgroup(const GroupLaw& g, const IndexSet& generators) {
  check_in_range(g, generators);
  std::vector<char> mask(g.order(), 0);
  IndexSet members{0};
  mask[0] = 1;
  // Closing under addition by each generator in turn yields the subgroup
  // spanned by the generators seen so far.
  for (Index x : generators) {
    if (mask[x]) continue;
    const std::size_t before = members.size();
    // members + <x>: keep adding x to the previous layer until it cycles in.
    std::vector<Index> layer(members.begin(), members.begin() + before);
    while (true) {
      std::vector<Index> next;
      next.reserve(layer.size());
      bool fresh = false;
      for (Index y : layer) {
        const Index z = g.add(y, x);
        next.push_back(z);
        if (!mask[z]) {
          mask[z] = 1;
          members.push_back(z);
          fresh = true;
        }
      }
      if (!fresh) break;
      layer = std::move(next);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t order_of(const GroupLaw& g, Index x) {
  if (x >= g.order()) fail(ErrorKind::InvalidInput, "index out of range");
  std::uint64_t t = 1;
  for (Index y = x; y != 0; y = g.add(y, x)) ++t;
  return t;
}

IndexSet periodic_part(const GroupLaw& g, const IndexSet& a, const IndexSet& h) {
  std::vector<char> in_a(g.order(), 0), done(g.order(), 0);
  for (Index x : a) in_a[x] = 1;
  std::vector<char> keep(g.order(), 0);
  for (Index x : a) {
    if (done[x]) continue;
    bool whole = true;
    for (Index y : h) {
      const Index z = g.add(x, y);
      done[z] = 1;
      if (!in_a[z]) whole = false;
    }
    if (whole) {
      for (Index y : h) keep[g.add(x, y)] = 1;
    }
  }
  return from_mask(keep);
}

bool is_periodic(const GroupLaw& g, const IndexSet& s, const IndexSet& h) {
  return !s.empty() && periodic_part(g, s, h) == s;
}

std::vector<IndexSet> subgroup_lattice(const GroupLaw& g,
                                       const EnumerationBounds& bounds) {
  if (g.order() > bounds.max_group_order) {
    fail(ErrorKind::InvalidInput,
         "group order " + std::to_string(g.order()) +
             " exceeds subgroup enumeration bound " +
             std::to_string(bounds.max_group_order));
  }
  std::set<IndexSet> cyclic;
  for (Index x = 0; x < g.order(); ++x) {
    cyclic.insert(generated_subgroup(g, IndexSet{x}));
  }
  // Join-closure: every subgroup is a join of cyclic subgroups.
  std::set<IndexSet> all(cyclic.begin(), cyclic.end());
  std::deque<IndexSet> work(cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    IndexSet h = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclic) {
      if (is_subset(c, h)) continue;
      IndexSet joined = sumset(g, h, c);
      if (all.insert(joined).second) {
        if (all.size() > bounds.max_subgroups) {
          fail(ErrorKind::InvalidInput, "too many subgroups to enumerate");
        }
        work.push_back(std::move(joined));
      }
    }
  }
  std::vector<IndexSet> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// --- element-level operations ----------------------------------------------

Subgroup make_subgroup(const GroupLaw& g, const GroupSubset& carrier) {
  const IndexSet s = g.indices_of(carrier);
  if (!contains(s, 0)) fail(ErrorKind::InvalidInput, "subgroup must contain 0");
  for (Index x : s) {
    if (!contains(s, g.negate(x))) {
      fail(ErrorKind::InvalidInput, "subgroup not closed under negation");
    }
    for (Index y : s) {
      if (!contains(s, g.add(x, y))) {
        fail(ErrorKind::InvalidInput, "subgroup not closed under addition");
      }
    }
  }
  return Subgroup{carrier};
}

Subgroup subgroup_generated(const GroupLaw& g, const GroupSubset& x) {
  return Subgroup{g.subset_of(generated_subgroup(g, g.indices_of(x)))};
}

std::vector<Subgroup> all_subgroups(const GroupLaw& g,
                                    const EnumerationBounds& bounds) {
  std::vector<Subgroup> out;
  for (const auto& h : subgroup_lattice(g, bounds)) {
    out.push_back(Subgroup{g.subset_of(h)});
  }
  return out;
}

std::uint64_t element_order(const FiniteAbelianGroup& g, const GroupElement& x) {
  if (!g.contains(x)) {
    fail(ErrorKind::InvalidInput, "element " + to_string(x) + " not in group");
  }
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.invariant_factors()[i]);
    const std::uint64_t xi = static_cast<std::uint64_t>(x.residues[i]);
    result = std::lcm(result, n / std::gcd(n, xi));
  }
  return result;
}

std::uint64_t element_order(const GroupLaw& g, const GroupElement& x) {
  return order_of(g, g.index_of(x));
}

GroupSubset product_set(const GroupLaw& g, const GroupSubset& s,
                        const GroupSubset& r) {
  if (s.empty() || r.empty()) {
    fail(ErrorKind::InvalidInput, "product_set needs nonempty inputs");
  }
  return g.subset_of(sumset(g, g.indices_of(s), g.indices_of(r)));
}

CosetDecomposition is_union_of_cosets(const GroupLaw& g, const GroupSubset& s,
                                      const Subgroup& h) {
  const IndexSet si = g.indices_of(s);
  const IndexSet hi = g.indices_of(h.carrier);
  CosetDecomposition out;
  if (periodic_part(g, si, hi) != si) return out;
  out.is_union = true;
  std::vector<char> covered(g.order(), 0);
  IndexSet reps;
  for (Index x : si) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Index y : hi) covered[g.add(x, y)] = 1;
  }
  out.representatives = g.subset_of(reps);
  return out;
}

GroupSubset maximal_periodic_part(const GroupLaw& g, const GroupSubset& a,
                                  const Subgroup& h) {
  return g.subset_of(periodic_part(g, g.indices_of(a), g.indices_of(h.carrier)));
}

std::optional<std::size_t> n0_group(const GroupLaw& g) {
  const std::size_t n = g.order();
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return std::nullopt;
}

// --- QuotientGroup ---------------------------------------------------------

QuotientGroup::QuotientGroup(FiniteAbelianGroup parent, Subgroup h)
    : parent_(std::move(parent)), kernel_(make_subgroup(parent_, h.carrier)) {
  const IndexSet hi = parent_.indices_of(kernel_.carrier);
  const std::size_t n = parent_.order();
  std::vector<Index> least(n, std::numeric_limits<Index>::max());
  for (Index x = 0; x < n; ++x) {
    if (least[x] != std::numeric_limits<Index>::max()) continue;
    // x is the least element of its coset.
    for (Index y : hi) least[parent_.add(x, y)] = x;
    reps_.push_back(x);
  }
  projection_.resize(n);
  for (Index x = 0; x < n; ++x) {
    projection_[x] = static_cast<Index>(
        std::lower_bound(reps_.begin(), reps_.end(), least[x]) - reps_.begin());
  }
  representatives_ = parent_.subset_of(reps_);
}

Index QuotientGroup::add(Index a, Index b) const {
  return projection_[parent_.add(reps_[a], reps_[b])];
}

Index QuotientGroup::negate(Index a) const {
  return projection_[parent_.negate(reps_[a])];
}

GroupElement QuotientGroup::element_at(Index i) const {
  if (i >= reps_.size()) fail(ErrorKind::InvalidInput, "quotient index out of range");
  return parent_.element_at(reps_[i]);
}

Index QuotientGroup::index_of(const GroupElement& x) const {
  const Index parent_index = parent_.index_of(x);
  const Index q = projection_[parent_index];
  if (reps_[q] != parent_index) {
    fail(ErrorKind::InvalidInput,
         "element " + to_string(x) + " is not a least coset representative");
  }
  return q;
}

GroupElement QuotientGroup::project(const GroupElement& x) const {
  return element_at(projection_[parent_.index_of(x)]);
}

GroupSubset QuotientGroup::project(const GroupSubset& s) const {
  std::vector<GroupElement> out;
  for (const auto& x : s) out.push_back(project(x));
  return GroupSubset(std::move(out));
}

QuotientGroup quotient_group(const FiniteAbelianGroup& g, const Subgroup& h) {
  return QuotientGroup(g, h);
}

}  // namespace matchkit::group
