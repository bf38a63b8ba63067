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


#include "matchkit/harness/serialize.hpp"

#include <algorithm>
#include <utility>

#include "matchkit/error.hpp"
#include "matchkit/harness/normalize.hpp"

namespace matchkit::harness {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& x : j) out.push_back(as_int(x, what));
  return out;
}

std::optional<std::uint64_t> optional_count(const json& options, const char* key) {
  if (!options.contains(key) || options.at(key).is_null()) return std::nullopt;
  const json& v = options.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

// Residues of one element given in the coordinates of `product`.
std::vector<int> raw_element(const CyclicProduct& product, const json& j) {
  if (j.is_number_integer() && product.components().size() == 1) {
    const int x = as_int(j, "group element");
    if (x < 0 || x >= product.components()[0]) bad("element " + j.dump() + " is out of range");
    return {x};
  }
  if (j.is_number_integer() && product.components().empty()) {
    if (as_int(j, "group element") != 0) bad("the trivial group has only 0");
    return {};
  }
  std::vector<int> r = int_array(j, "group element");
  const auto& comps = product.components();
  bool ok = r.size() == comps.size();
  for (std::size_t i = 0; ok && i < r.size(); ++i) ok = r[i] >= 0 && r[i] < comps[i];
  if (!ok) bad("element " + j.dump() + " is out of range");
  return r;
}

std::vector<std::vector<int>> canonical_group_set(const CyclicProduct& product,
                                                  const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<group::GroupElement> elements;
  for (const json& x : j) elements.push_back(product.map(raw_element(product, x)));
  const group::GroupSubset s(std::move(elements));
  std::vector<std::vector<int>> out;
  for (const auto& x : s) out.push_back(x.residues);
  return out;
}

std::vector<std::vector<int>> rows_of(const fq::FqSubspace& u) {
  std::vector<std::vector<int>> out;
  for (const fq::FieldElement& x : u.basis_elements()) {
    out.emplace_back(x.coeffs().data(), x.coeffs().data() + x.size());
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem(const json& j) {
  if (!j.is_object()) bad("problem must be a JSON object");
  ProblemSpec spec;
  const json& setting = field_of(j, "setting");
  if (setting == "group") {
    spec.setting = Setting::Group;
  } else if (setting == "field") {
    spec.setting = Setting::Field;
  } else {
    bad("setting must be \"group\" or \"field\"");
  }
  if (spec.setting == Setting::Group) {
    const json& g = field_of(j, "group");
    const CyclicProduct product = g.is_string()
                                      ? parse_group_shorthand(g.get<std::string>())
                                      : CyclicProduct(int_array(g, "group"));
    spec.group = product.group().invariant_factors();
    spec.A = canonical_group_set(product, field_of(j, "A"), "A");
    spec.B = canonical_group_set(product, field_of(j, "B"), "B");
  } else {
    const json& f = field_of(j, "field");
    spec.p = as_int(field_of(f, "p"), "p");
    spec.m = as_int(field_of(f, "m"), "m");
    fq::ExtensionField field =
        f.contains("modulus") && !f.at("modulus").is_null()
            ? fq::ExtensionField::make(spec.p, spec.m, int_array(f.at("modulus"), "modulus"))
            : fq::ExtensionField::standard(spec.p, spec.m);
    spec.modulus = field.modulus();
    spec.A = rows_of(decode_subspace(field, field_of(j, "A")));
    spec.B = rows_of(decode_subspace(field, field_of(j, "B")));
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (!o.is_object()) bad("options must be an object");
    spec.seed = optional_count(o, "seed");
    spec.sample = optional_count(o, "sample");
    if (o.contains("n") && !o.at("n").is_null()) spec.n = as_int(o.at("n"), "n");
  }
  return spec;
}

json to_json(const ProblemSpec& spec) {
  json j;
  j["setting"] = spec.setting == Setting::Group ? "group" : "field";
  if (spec.setting == Setting::Group) {
    const group::FiniteAbelianGroup g = spec_group(spec);
    j["group"] = spec.group;
    j["A"] = encode(g, spec_subset(g, spec.A));
    j["B"] = encode(g, spec_subset(g, spec.B));
  } else {
    j["field"] = {{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
    j["A"] = spec.A;
    j["B"] = spec.B;
  }
  json options = json::object();
  if (spec.seed) options["seed"] = *spec.seed;
  if (spec.sample) options["sample"] = *spec.sample;
  if (spec.n) options["n"] = *spec.n;
  if (!options.empty()) j["options"] = options;
  return j;
}

group::FiniteAbelianGroup spec_group(const ProblemSpec& spec) {
  return group::FiniteAbelianGroup(spec.group);
}

fq::ExtensionField spec_field(const ProblemSpec& spec) {
  return fq::ExtensionField::make(spec.p, spec.m, spec.modulus);
}

group::GroupSubset spec_subset(const group::FiniteAbelianGroup& g,
                               const std::vector<std::vector<int>>& elements) {
  std::vector<group::GroupElement> out;
  for (const auto& r : elements) {
    group::GroupElement x{r};
    if (!g.contains(x)) bad("element " + to_string(x) + " is not in " + to_string(g));
    out.push_back(std::move(x));
  }
  return group::GroupSubset(std::move(out));
}

fq::FqSubspace spec_subspace(const fq::ExtensionField& field,
                             const std::vector<std::vector<int>>& rows) {
  std::vector<fq::FieldElement> vectors;
  for (const auto& r : rows) vectors.push_back(field.element(r));
  return fq::span(field, vectors);
}

json encode(const group::FiniteAbelianGroup& g, const group::GroupElement& x) {
  if (g.rank() == 1) return x.residues.at(0);
  return x.residues;
}

json encode(const group::FiniteAbelianGroup& g, const group::GroupSubset& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(encode(g, x));
  return out;
}

group::GroupElement decode_element(const group::FiniteAbelianGroup& g, const json& j) {
  std::vector<int> r;
  if (j.is_number_integer() && g.rank() == 1) {
    r = {as_int(j, "group element")};
  } else {
    r = int_array(j, "group element");
  }
  group::GroupElement x{std::move(r)};
  if (!g.contains(x)) bad("element " + to_string(x) + " is not in " + to_string(g));
  return x;
}

group::GroupSubset decode_subset(const group::FiniteAbelianGroup& g, const json& j) {
  if (!j.is_array()) bad("subset must be an array");
  std::vector<group::GroupElement> out;
  for (const json& x : j) out.push_back(decode_element(g, x));
  return group::GroupSubset(std::move(out));
}

json encode(const fq::FieldElement& x) {
  return std::vector<int>(x.coeffs().data(), x.coeffs().data() + x.size());
}

json encode(const fq::FqSubspace& u) {
  json out = json::array();
  for (const auto& x : u.basis_elements()) out.push_back(encode(x));
  return out;
}

fq::FieldElement decode_field_element(const fq::ExtensionField& field, const json& j) {
  return field.element(int_array(j, "field element"));
}

fq::FqSubspace decode_subspace(const fq::ExtensionField& field, const json& j) {
  if (!j.is_array()) bad("subspace must be an array of basis rows");
  std::vector<fq::FieldElement> vectors;
  for (const json& x : j) vectors.push_back(decode_field_element(field, x));
  return fq::span(field, vectors);
}

json to_json(const group::FiniteAbelianGroup& g, const group::GroupVerdict& v) {
  json j;
  j["matchable"] = v.matchable();
  if (v.matchable()) {
    json pairs = json::array();
    for (const auto& [a, b] : v.witness().assignment) {
      pairs.push_back(json::array({encode(g, a), encode(g, b)}));
    }
    j["witness"] = pairs;
  } else {
    const auto& c = v.certificate();
    j["certificate"] = {{"R", encode(g, c.R)},
                        {"S", encode(g, c.S)},
                        {"Y", encode(g, c.Y)},
                        {"Z", encode(g, c.Z)},
                        {"H", encode(g, c.H.carrier)}};
  }
  return j;
}

group::GroupVerdict group_verdict_from_json(const group::FiniteAbelianGroup& g,
                                            const json& j) {
  const json& matchable = field_of(j, "matchable");
  if (!matchable.is_boolean()) bad("matchable must be a boolean");
  if (matchable.get<bool>()) {
    group::MatchingWitness w;
    const json& pairs = field_of(j, "witness");
    if (!pairs.is_array()) bad("witness must be an array");
    for (const json& p : pairs) {
      if (!p.is_array() || p.size() != 2) bad("witness entries are [a, f(a)] pairs");
      w.assignment.emplace_back(decode_element(g, p[0]), decode_element(g, p[1]));
    }
    std::sort(w.assignment.begin(), w.assignment.end());
    return group::GroupVerdict{w};
  }
  const json& c = field_of(j, "certificate");
  group::NearlyPeriodicCertificate cert;
  cert.R = decode_subset(g, field_of(c, "R"));
  cert.S = decode_subset(g, field_of(c, "S"));
  cert.Y = decode_subset(g, field_of(c, "Y"));
  cert.Z = decode_subset(g, field_of(c, "Z"));
  cert.H = c.contains("H") ? group::make_subgroup(g, decode_subset(g, c.at("H")))
                           : group::subgroup_generated(g, cert.R);
  return group::GroupVerdict{cert};
}

json to_json(const fq::LinearCertificate& cert) {
  return {{"R", encode(cert.R)}, {"S", encode(cert.S)}, {"Y", encode(cert.Y)},
          {"Z", encode(cert.Z)}, {"d", cert.d}};
}

json to_json(const fq::LinearVerdict& v) {
  json j;
  j["matchable"] = v.matchable;
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.witnesses) {
    json list = json::array();
    for (const auto& w : *v.witnesses) {
      json a = json::array(), b = json::array();
      for (const auto& x : w.a_basis) a.push_back(encode(x));
      for (const auto& x : w.b_basis) b.push_back(encode(x));
      list.push_back({{"a_basis", a}, {"b_basis", b}});
    }
    j["witnesses"] = list;
  }
  return j;
}

fq::LinearVerdict linear_verdict_from_json(const fq::ExtensionField& field,
                                           const json& j) {
  fq::LinearVerdict v;
  const json& matchable = field_of(j, "matchable");
  if (!matchable.is_boolean()) bad("matchable must be a boolean");
  v.matchable = matchable.get<bool>();
  if (j.contains("certificate")) {
    const json& c = j.at("certificate");
    v.certificate = fq::LinearCertificate{
        decode_subspace(field, field_of(c, "R")), decode_subspace(field, field_of(c, "S")),
        decode_subspace(field, field_of(c, "Y")), decode_subspace(field, field_of(c, "Z")),
        as_int(field_of(c, "d"), "d")};
  }
  if (v.matchable == v.certificate.has_value()) {
    bad("a verdict carries a certificate exactly when unmatchable");
  }
  if (j.contains("witnesses")) {
    std::vector<fq::BasisMatchingWitness> list;
    const json& ws = j.at("witnesses");
    if (!ws.is_array()) bad("witnesses must be an array");
    for (const json& w : ws) {
      fq::BasisMatchingWitness bw;
      const json& a = field_of(w, "a_basis");
      const json& b = field_of(w, "b_basis");
      if (!a.is_array() || !b.is_array()) bad("bases must be arrays");
      for (const json& x : a) bw.a_basis.push_back(decode_field_element(field, x));
      for (const json& x : b) bw.b_basis.push_back(decode_field_element(field, x));
      list.push_back(std::move(bw));
    }
    v.witnesses = std::move(list);
  }
  return v;
}

}  // namespace matchkit::harness
