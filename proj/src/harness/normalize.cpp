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


#include "matchkit/harness/normalize.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <utility>

#include "matchkit/error.hpp"

namespace matchkit::harness {

namespace {

// Prime-power factorisation as (p, e) pairs, ascending p.
std::vector<std::pair<int, int>> factorise(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Part {
  std::size_t component;
  int exponent;
};

// For every prime, its parts sorted by exponent and aligned to the last
// invariant factors.
std::map<int, std::vector<Part>> prime_parts(const std::vector<int>& components) {
  std::map<int, std::vector<Part>> parts;
  for (std::size_t j = 0; j < components.size(); ++j) {
    for (auto [p, e] : factorise(components[j])) parts[p].push_back({j, e});
  }
  for (auto& [p, list] : parts) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Part& x, const Part& y) { return x.exponent < y.exponent; });
  }
  return parts;
}

std::size_t slot_count(const std::map<int, std::vector<Part>>& parts) {
  std::size_t k = 0;
  for (const auto& [p, list] : parts) k = std::max(k, list.size());
  return k;
}

}  // namespace

std::vector<int> invariant_factors(const std::vector<int>& components) {
  for (int c : components) {
    if (c < 2) fail(ErrorKind::InvalidInput, "cyclic factors must be at least 2");
  }
  const auto parts = prime_parts(components);
  const std::size_t k = slot_count(parts);
  std::vector<int> factors(k, 1);
  for (const auto& [p, list] : parts) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      factors[k - list.size() + i] *= ipow(p, list[i].exponent);
    }
  }
  return factors;
}

CyclicProduct::CyclicProduct(std::vector<int> components)
    : components_(std::move(components)),
      group_(invariant_factors(components_)),
      images_(components_.size(), std::vector<int>(group_.rank(), 0)) {
  const auto parts = prime_parts(components_);
  const std::size_t k = slot_count(parts);
  const std::vector<int>& n = group_.invariant_factors();
  // The p-part Z/p^e of component j lands in the Sylow p-subgroup of its
  // slot Z/n_s, generated by p^(f-e) times the CRT idempotent of p^f || n_s.
  // The generator of Z/c_j is the sum of its p-parts.
  for (const auto& [p, list] : parts) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::size_t slot = k - list.size() + i;
      const long long ns = n[slot];
      int f = 0;
      long long pf = 1;
      while (ns % (pf * p) == 0) {
        pf *= p;
        ++f;
      }
      const long long rest = ns / pf;
      long long inv = 1;
      while ((rest * inv) % pf != 1 % pf) ++inv;
      const long long idempotent = (rest * inv) % ns;
      const long long step = (ipow(p, f - list[i].exponent) * idempotent) % ns;
      int& entry = images_[list[i].component][slot];
      entry = static_cast<int>((entry + step) % ns);
    }
  }
}

group::GroupElement CyclicProduct::map(const std::vector<int>& residues) const {
  if (residues.size() != components_.size()) {
    fail(ErrorKind::InvalidInput,
         "element has " + std::to_string(residues.size()) + " coordinates, expected " +
             std::to_string(components_.size()));
  }
  const std::vector<int>& n = group_.invariant_factors();
  std::vector<long long> acc(n.size(), 0);
  for (std::size_t j = 0; j < residues.size(); ++j) {
    const long long c = components_[j];
    const long long x = ((residues[j] % c) + c) % c;
    for (std::size_t s = 0; s < n.size(); ++s) {
      acc[s] = (acc[s] + x * images_[j][s]) % n[s];
    }
  }
  return group::GroupElement{std::vector<int>(acc.begin(), acc.end())};
}

CyclicProduct parse_group_shorthand(const std::string& text) {
  static const std::regex factor(R"(\s*Z\s*[/_]?\s*(\d{1,9})\s*)");
  static const std::regex separator(R"([xX*])");
  std::vector<int> components;
  std::sregex_token_iterator it(text.begin(), text.end(), separator, -1), end;
  bool any = false;
  long pieces = 0;
  for (; it != end; ++it, ++pieces) {
    const std::string piece = *it;
    std::smatch m;
    if (!std::regex_match(piece, m, factor)) {
      fail(ErrorKind::InvalidInput, "cannot parse group '" + text + "'");
    }
    any = true;
    const int c = std::stoi(m[1]);
    if (c == 0) fail(ErrorKind::InvalidInput, "Z0 is not finite");
    if (c > 1) components.push_back(c);
  }
  const auto separators = std::count_if(text.begin(), text.end(),
                                        [](char ch) { return ch == 'x' || ch == 'X' || ch == '*'; });
  if (!any || pieces != separators + 1) {
    fail(ErrorKind::InvalidInput, "cannot parse group '" + text + "'");
  }
  return CyclicProduct(std::move(components));
}

}  // namespace matchkit::harness
