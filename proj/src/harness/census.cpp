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


#include "matchkit/harness/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "matchkit/error.hpp"
#include "matchkit/harness/rng.hpp"
#include "matchkit/harness/serialize.hpp"

namespace matchkit::harness {

namespace {

using Clock = std::chrono::steady_clock;
using group::Index;
using group::IndexSet;

constexpr std::uint64_t kWave = 4096;

struct Outcome {
  bool matchable = false;
  bool disagree = false;
  json record;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ULL << 40)) return r;
  }
  return r;
}

// All k-subsets of {offset, ..., offset + n - 1} in lexicographic order.
std::vector<IndexSet> combinations(Index n, Index k, Index offset) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet c(k);
  for (Index i = 0; i < k; ++i) c[i] = i;
  while (true) {
    IndexSet shifted(c);
    for (Index& x : shifted) x += offset;
    out.push_back(std::move(shifted));
    Index i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (Index j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

void check_sampling(const CensusOptions& options) {
  if (options.sample && !options.seed) {
    fail(ErrorKind::InvalidInput, "sample mode requires a seed");
  }
}

// Evaluates pairs [0, total) in waves: `make` runs sequentially in index
// order, `eval` in parallel, `consume` sequentially in index order.
template <typename Pair>
void drive(std::uint64_t total, unsigned workers,
           const std::function<Pair(std::uint64_t)>& make,
           const std::function<Outcome(std::uint64_t, const Pair&)>& eval,
           const std::function<void(const Pair&, Outcome&)>& consume) {
  workers = std::max(1u, workers);
  for (std::uint64_t start = 0; start < total; start += kWave) {
    const std::uint64_t count = std::min(kWave, total - start);
    std::vector<Pair> pairs;
    pairs.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) pairs.push_back(make(start + k));
    std::vector<Outcome> outcomes(count);
    if (workers == 1 || count < 2) {
      for (std::uint64_t k = 0; k < count; ++k) outcomes[k] = eval(start + k, pairs[k]);
    } else {
      std::atomic<std::uint64_t> next{0};
      std::vector<std::thread> pool;
      std::exception_ptr error;
      std::atomic<bool> failed{false};
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::uint64_t k = next++; k < count; k = next++) {
            try {
              outcomes[k] = eval(start + k, pairs[k]);
            } catch (...) {
              if (!failed.exchange(true)) error = std::current_exception();
              return;
            }
          }
        });
      }
      for (auto& t : pool) t.join();
      if (error) std::rethrow_exception(error);
    }
    for (std::uint64_t k = 0; k < count; ++k) consume(pairs[k], outcomes[k]);
  }
}

void write_footer(std::ostream& out, json footer, const CensusSummary& s,
                  const CensusOptions& options, Clock::time_point t0) {
  footer["mode"] = options.sample ? "sample" : "exhaustive";
  if (options.sample) footer["seed"] = *options.seed;
  footer["pairs"] = s.pairs;
  footer["matchable"] = s.matchable;
  footer["unmatchable"] = s.unmatchable;
  if (options.xcheck) footer["disagreements"] = s.disagreements;
  if (options.timing) {
    footer["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  out << json{{"summary", footer}}.dump() << '\n';
}

template <typename Pair>
std::function<void(const Pair&, Outcome&)> collector(
    CensusSummary& s, const CensusOptions& options, std::ostream& out,
    const std::function<void(const Pair&)>& keep) {
  return [&s, &options, &out, keep](const Pair& pair, Outcome& o) {
    ++s.pairs;
    if (o.matchable) {
      ++s.matchable;
    } else {
      ++s.unmatchable;
      if (options.keep_unmatchable) keep(pair);
    }
    if (o.disagree) ++s.disagreements;
    if (options.records) out << o.record.dump() << '\n';
  };
}

}  // namespace

CensusSummary run_group_census(const group::FiniteAbelianGroup& g, std::size_t n,
                               const CensusOptions& options, std::ostream& out) {
  check_sampling(options);
  const std::size_t order = g.order();
  if (n < 1 || n >= order) {
    fail(ErrorKind::InvalidInput, "n must satisfy 1 <= n < |G| = " + std::to_string(order));
  }
  const auto start_time = Clock::now();
  const std::vector<IndexSet> lattice = group::subgroup_lattice(g);

  std::vector<IndexSet> a_list, b_list;
  std::uint64_t total = 0;
  if (options.sample) {
    total = *options.sample;
  } else {
    const std::uint64_t na = binomial(order, n);
    const std::uint64_t nb = binomial(order - 1, n);
    if (na > options.max_pairs || nb > options.max_pairs ||
        na * nb > options.max_pairs) {
      fail(ErrorKind::InvalidInput, "exhaustive census exceeds " +
                                        std::to_string(options.max_pairs) + " pairs");
    }
    a_list = combinations(static_cast<Index>(order), static_cast<Index>(n), 0);
    b_list = combinations(static_cast<Index>(order - 1), static_cast<Index>(n), 1);
    total = na * nb;
  }

  using Pair = std::pair<IndexSet, IndexSet>;
  std::optional<SeededRng> rng;
  if (options.sample) rng.emplace(*options.seed);
  const std::function<Pair(std::uint64_t)> make = [&](std::uint64_t k) -> Pair {
    if (!options.sample) return {a_list[k / b_list.size()], b_list[k % b_list.size()]};
    IndexSet a = rng->subset(static_cast<std::uint32_t>(order), static_cast<std::uint32_t>(n));
    IndexSet b =
        rng->subset(static_cast<std::uint32_t>(order - 1), static_cast<std::uint32_t>(n));
    for (Index& x : b) ++x;
    return {std::move(a), std::move(b)};
  };

  const std::function<Outcome(std::uint64_t, const Pair&)> eval =
      [&](std::uint64_t k, const Pair& pair) {
        const auto t0 = Clock::now();
        const auto& [a, b] = pair;
        Outcome o;
        const auto mate = group::least_matching(g, a, b);
        std::optional<group::IndexCertificate> cert;
        if (!mate || options.xcheck) cert = group::search_certificate(g, lattice, a, b);
        o.matchable = mate.has_value();
        // cert is only computed for matchable pairs under xcheck.
        o.disagree = o.matchable == cert.has_value();
        if (options.xcheck) {
          if (cert && !group::check_certificate(g, *cert, a, b)) o.disagree = true;
          if (n <= group::kNaiveOracleBound) {
            const bool naive = group::naive_unmatchability_witness(
                                   g, g.subset_of(a), g.subset_of(b))
                                   .has_value();
            if (naive == o.matchable) o.disagree = true;
          }
        }
        if (!options.records) return o;
        json& r = o.record;
        r["index"] = k;
        r["A"] = encode(g, g.subset_of(a));
        r["B"] = encode(g, g.subset_of(b));
        if (mate) {
          group::MatchingWitness w;
          for (std::size_t i = 0; i < a.size(); ++i) {
            w.assignment.emplace_back(g.element_at(a[i]), g.element_at((*mate)[i]));
          }
          r["decider"] = "find_matching";
          r.update(to_json(g, group::GroupVerdict{w}));
        } else if (cert) {
          group::NearlyPeriodicCertificate c{g.subset_of(cert->R), g.subset_of(cert->S),
                                             g.subset_of(cert->Y), g.subset_of(cert->Z),
                                             group::Subgroup{g.subset_of(cert->H)}};
          r["decider"] = "find_certificate";
          r.update(to_json(g, group::GroupVerdict{c}));
        } else {
          r["matchable"] = false;
          r["decider"] = "none";
        }
        if (options.xcheck) r["xcheck"] = o.disagree ? "disagree" : "agree";
        if (options.timing) {
          r["micros"] = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
        }
        return o;
      };

  CensusSummary summary;
  const std::function<void(const Pair&)> keep = [&summary](const Pair& p) {
    summary.unmatchable_groups.push_back(p);
  };
  drive<Pair>(total, options.workers, make, eval,
              collector<Pair>(summary, options, out, keep));
  write_footer(out,
               {{"setting", "group"}, {"group", to_string(g)}, {"n", n}},
               summary, options, start_time);
  return summary;
}

CensusSummary run_field_census(const fq::ExtensionField& field, int n,
                               const CensusOptions& options, std::ostream& out) {
  check_sampling(options);
  if (n < 1 || n >= field.m()) {
    fail(ErrorKind::InvalidInput, "n must satisfy 1 <= n < m = " + std::to_string(field.m()));
  }
  const auto start_time = Clock::now();
  const fq::FieldElement one = field.one();
  const bool oracle_applies = field.p() == 2 && n <= fq::kOracleMaxDim &&
                              field.m() <= fq::kOracleMaxDegree;

  std::vector<fq::FqSubspace> a_list, b_list;
  std::uint64_t total = 0;
  if (options.sample) {
    total = *options.sample;
    if (field.order() == 0) fail(ErrorKind::InvalidInput, "field too large to sample");
  } else {
    a_list = fq::enumerate_subspaces(fq::FqSubspace::whole(field), std::vector<int>{n});
    for (const auto& u : a_list) {
      if (!u.contains(one)) b_list.push_back(u);
    }
    total = static_cast<std::uint64_t>(a_list.size()) * b_list.size();
    if (total > options.max_pairs) {
      fail(ErrorKind::InvalidInput, "exhaustive census exceeds " +
                                        std::to_string(options.max_pairs) + " pairs");
    }
  }

  using Pair = std::pair<fq::FqSubspace, fq::FqSubspace>;
  std::optional<SeededRng> rng;
  if (options.sample) rng.emplace(*options.seed);
  const auto random_subspace = [&](bool avoid_one) {
    while (true) {
      fq::FqSubspace u(field);
      while (u.dim() < n) {
        u = fq::sum(u, fq::span(field, {field.from_code(rng->below(field.order()))}));
      }
      if (!avoid_one || !u.contains(one)) return u;
    }
  };
  const std::function<Pair(std::uint64_t)> make = [&](std::uint64_t k) -> Pair {
    if (!options.sample) return {a_list[k / b_list.size()], b_list[k % b_list.size()]};
    fq::FqSubspace a = random_subspace(false);
    fq::FqSubspace b = random_subspace(true);
    return {std::move(a), std::move(b)};
  };

  const std::function<Outcome(std::uint64_t, const Pair&)> eval =
      [&](std::uint64_t k, const Pair& pair) {
        const auto t0 = Clock::now();
        const auto& [a, b] = pair;
        Outcome o;
        const auto cert = fq::find_linear_certificate(field, a, b);
        o.matchable = !cert.has_value();
        if (options.xcheck) {
          if (cert && !fq::verify_linear_certificate(*cert, field, a, b)) o.disagree = true;
          try {
            if (fq::criterion_verdict(field, a, b).has_value() == o.matchable) {
              o.disagree = true;
            }
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidInput) throw;
          }
          if (oracle_applies && fq::definitional_oracle(field, a, b).matched != o.matchable) {
            o.disagree = true;
          }
        }
        if (!options.records) return o;
        json& r = o.record;
        r["index"] = k;
        r["A"] = encode(a);
        r["B"] = encode(b);
        r["decider"] = "find_linear_certificate";
        fq::LinearVerdict v;
        v.matchable = o.matchable;
        v.certificate = cert;
        r.update(to_json(v));
        if (options.xcheck) r["xcheck"] = o.disagree ? "disagree" : "agree";
        if (options.timing) {
          r["micros"] = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
        }
        return o;
      };

  CensusSummary summary;
  const std::function<void(const Pair&)> keep = [&summary](const Pair& p) {
    summary.unmatchable_fields.push_back(p);
  };
  drive<Pair>(total, options.workers, make, eval,
              collector<Pair>(summary, options, out, keep));
  write_footer(out,
               {{"setting", "field"},
                {"field", {{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}}},
                {"n", n}},
               summary, options, start_time);
  return summary;
}

}  // namespace matchkit::harness
