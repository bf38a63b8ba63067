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


#include "matchkit/harness/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matchkit/error.hpp"
#include "matchkit/harness/census.hpp"
#include "matchkit/harness/normalize.hpp"
#include "matchkit/harness/serialize.hpp"

namespace matchkit::harness {

namespace {

struct Globals {
  bool xcheck = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample;
  std::string out_path;
  std::string format = "json";
  unsigned workers = 1;
  bool timing = false;
};

struct Inputs {
  std::string group;
  std::string a;
  std::string b;
  std::string spec;
  int p = 0;
  int m = 0;
  std::string modulus;
  int n = 0;
};

json parse_json_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string(what) + " is not valid JSON: " + e.what());
  }
}

json read_spec(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json_text(text, "spec");
}

fq::ExtensionField field_from(const Inputs& in) {
  if (in.p == 0 || in.m == 0) fail(ErrorKind::InvalidInput, "--p and --m are required");
  if (in.modulus.empty()) return fq::ExtensionField::standard(in.p, in.m);
  json mod = parse_json_text(in.modulus, "--modulus");
  if (!mod.is_array()) fail(ErrorKind::InvalidInput, "--modulus must be a JSON array");
  return fq::ExtensionField::make(in.p, in.m, mod.get<std::vector<int>>());
}

ProblemSpec problem_from(Setting setting, const Inputs& in) {
  if (!in.spec.empty()) {
    ProblemSpec spec = parse_problem(read_spec(in.spec));
    if (spec.setting != setting) {
      fail(ErrorKind::InvalidInput, "spec setting does not match the subcommand");
    }
    return spec;
  }
  if (in.a.empty() || in.b.empty()) {
    fail(ErrorKind::InvalidInput, "-A and -B (or --spec) are required");
  }
  json j;
  j["A"] = parse_json_text(in.a, "-A");
  j["B"] = parse_json_text(in.b, "-B");
  if (setting == Setting::Group) {
    if (in.group.empty()) fail(ErrorKind::InvalidInput, "--group is required");
    j["setting"] = "group";
    j["group"] = in.group;
  } else {
    const fq::ExtensionField field = field_from(in);
    j["setting"] = "field";
    j["field"] = {{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
  }
  return parse_problem(j);
}

std::string set_text(const json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += s[i].dump();
  }
  return out + "}";
}

void emit(const json& j, const Globals& g, std::ostream& out) {
  if (g.format == "jsonl") {
    out << j.dump() << '\n';
  } else if (g.format == "table") {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        for (const auto& [k2, v2] : value.items()) {
          out << key << '.' << k2 << ": " << (v2.is_array() ? set_text(v2) : v2.dump())
              << '\n';
        }
      } else {
        out << key << ": " << (value.is_array() ? set_text(value) : value.dump()) << '\n';
      }
    }
  } else {
    out << j.dump(2) << '\n';
  }
}

json group_check(const ProblemSpec& spec, const Globals& opts, bool& agree) {
  const group::FiniteAbelianGroup g = spec_group(spec);
  const group::GroupSubset a = spec_subset(g, spec.A);
  const group::GroupSubset b = spec_subset(g, spec.B);
  const auto witness = group::find_matching(g, a, b);
  std::optional<group::NearlyPeriodicCertificate> cert;
  if (!witness || opts.xcheck) cert = group::find_certificate(g, a, b);

  json j;
  j["setting"] = "group";
  j["group"] = to_string(g);
  j["A"] = encode(g, a);
  j["B"] = encode(g, b);
  if (witness) {
    j["decider"] = "find_matching";
    j.update(to_json(g, group::GroupVerdict{*witness}));
  } else if (cert) {
    j["decider"] = "find_certificate";
    j.update(to_json(g, group::GroupVerdict{*cert}));
  } else {
    fail(ErrorKind::InternalInconsistency, "neither a matching nor a certificate");
  }
  if (opts.xcheck) {
    json deciders = {"find_matching", "find_certificate"};
    agree = witness.has_value() != cert.has_value();
    if (cert && !group::verify_certificate(*cert, g, a, b)) agree = false;
    if (a.size() <= group::kNaiveOracleBound && !b.contains(g.identity())) {
      deciders.push_back("naive_unmatchability_witness");
      const bool naive = group::naive_unmatchability_witness(g, a, b).has_value();
      if (naive == witness.has_value()) agree = false;
    }
    j["xcheck"] = {{"deciders", deciders}, {"agree", agree}};
  }
  return j;
}

json field_check(const ProblemSpec& spec, const Globals& opts, bool& agree) {
  const fq::ExtensionField field = spec_field(spec);
  const fq::FqSubspace a = spec_subspace(field, spec.A);
  const fq::FqSubspace b = spec_subspace(field, spec.B);
  fq::LinearVerdict verdict = fq::decide_linear(field, a, b);

  json x;
  if (opts.xcheck) {
    json deciders = {"find_linear_certificate"};
    if (verdict.certificate &&
        !fq::verify_linear_certificate(*verdict.certificate, field, a, b)) {
      agree = false;
    }
    if (!b.contains(field.one())) {
      try {
        const bool violated = fq::criterion_verdict(field, a, b).has_value();
        deciders.push_back("criterion_verdict");
        if (violated == verdict.matchable) agree = false;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidInput) throw;
      }
    }
    if (field.p() == 2 && a.dim() <= fq::kOracleMaxDim && field.m() <= fq::kOracleMaxDegree) {
      const fq::DefinitionalResult r = fq::definitional_oracle(field, a, b);
      deciders.push_back("definitional_oracle");
      if (r.matched != verdict.matchable) agree = false;
      if (r.matched) verdict.witnesses = r.witnesses;
    }
    x = {{"deciders", deciders}, {"agree", agree}};
  }

  json j;
  j["setting"] = "field";
  j["field"] = {{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
  j["A"] = encode(a);
  j["B"] = encode(b);
  j["decider"] = "find_linear_certificate";
  j.update(to_json(verdict));
  if (opts.xcheck) j["xcheck"] = x;
  return j;
}

json group_construct(const Inputs& in) {
  if (in.group.empty()) fail(ErrorKind::InvalidInput, "--group is required");
  const CyclicProduct product = parse_group_shorthand(in.group);
  const group::FiniteAbelianGroup& g = product.group();
  if (in.n < 1) fail(ErrorKind::InvalidInput, "--n is required");
  const auto n0 = group::n0_group(g);
  if (!n0 || static_cast<std::size_t>(in.n) < *n0 ||
      static_cast<std::size_t>(in.n) >= g.order()) {
    fail(ErrorKind::InvalidInput, "n must satisfy n0(G) <= n < |G| for composite |G|");
  }
  const group::UnmatchablePair pair =
      group::construct_unmatchable_group(g, static_cast<std::size_t>(in.n));
  const bool verified = group::verify_certificate(pair.certificate, g, pair.A, pair.B) &&
                        !group::find_matching(g, pair.A, pair.B).has_value();
  json j;
  j["setting"] = "group";
  j["group"] = to_string(g);
  j["n"] = in.n;
  j["A"] = encode(g, pair.A);
  j["B"] = encode(g, pair.B);
  j["decider"] = "construct_unmatchable_group";
  j.update(to_json(g, group::GroupVerdict{pair.certificate}));
  j["verified"] = verified;
  return j;
}

json field_construct(const Inputs& in) {
  const fq::ExtensionField field = field_from(in);
  const fq::UnmatchableSubspaces pair = fq::construct_unmatchable_linear(field, in.n);
  bool verified =
      fq::verify_linear_certificate(pair.certificate, field, pair.A, pair.B) &&
      fq::find_linear_certificate(field, pair.A, pair.B).has_value();
  try {
    verified = verified && fq::criterion_verdict(field, pair.A, pair.B).has_value();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidInput) throw;
  }
  json j;
  j["setting"] = "field";
  j["field"] = {{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
  j["n"] = in.n;
  j["A"] = encode(pair.A);
  j["B"] = encode(pair.B);
  j["decider"] = "construct_unmatchable_linear";
  fq::LinearVerdict v;
  v.certificate = pair.certificate;
  j.update(to_json(v));
  j["verified"] = verified;
  return j;
}

CensusOptions census_options(const Globals& g) {
  CensusOptions o;
  o.sample = g.sample;
  o.seed = g.seed;
  o.workers = g.workers;
  o.xcheck = g.xcheck;
  o.timing = g.timing;
  o.records = g.format != "table";
  return o;
}

void census_table(const std::string& footer_line, std::ostream& out) {
  const json footer = json::parse(footer_line).at("summary");
  for (const auto& [key, value] : footer.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

int run_census(Setting setting, const Inputs& in, const Globals& g, std::ostream& out) {
  const CensusOptions options = census_options(g);
  std::ostringstream table_buffer;
  std::ostream& sink = options.records ? out : table_buffer;
  CensusSummary summary;
  if (setting == Setting::Group) {
    if (in.group.empty()) fail(ErrorKind::InvalidInput, "--group is required");
    const CyclicProduct product = parse_group_shorthand(in.group);
    summary = run_group_census(product.group(), static_cast<std::size_t>(std::max(in.n, 0)),
                               options, sink);
  } else {
    summary = run_field_census(field_from(in), in.n, options, sink);
  }
  if (!options.records) census_table(table_buffer.str(), out);
  return summary.disagreements > 0 ? kExitDisagreement : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matchability deciders for finite abelian groups and field extensions",
               "matchcli"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--xcheck", g.xcheck, "Run every applicable decider; exit 2 on disagreement");
  app.add_option("--seed", g.seed, "Seed for sample mode");
  app.add_option("--sample", g.sample, "Sample this many pairs instead of enumerating");
  app.add_option("--out", g.out_path, "Write output to a file");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "jsonl", "table"}));
  app.add_option("--workers", g.workers, "Census worker threads")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", g.timing, "Report timings (output becomes nondeterministic)");

  Inputs in;
  std::string action;
  Setting setting = Setting::Group;
  auto add_family = [&](const std::string& name, Setting s, const std::string& help) {
    CLI::App* family = app.add_subcommand(name, help);
    family->require_subcommand(1);
    family->fallthrough();
    family->callback([&setting, s] { setting = s; });
    auto add_inputs = [&](CLI::App* sub, bool pair, bool size) {
      sub->fallthrough();
      if (s == Setting::Group) {
        sub->add_option("--group", in.group, "Group, e.g. Z12 or Z2xZ6");
      } else {
        sub->add_option("--p", in.p, "Characteristic");
        sub->add_option("--m", in.m, "Extension degree");
        sub->add_option("--modulus", in.modulus, "Ascending modulus coefficients (JSON)");
      }
      if (pair) {
        sub->add_option("-A", in.a, "A as JSON");
        sub->add_option("-B", in.b, "B as JSON");
        sub->add_option("--spec", in.spec, "Problem JSON file, or - for stdin");
      }
      if (size) sub->add_option("--n", in.n, "Size or dimension")->required();
    };
    CLI::App* check = family->add_subcommand("check", "Decide one pair");
    add_inputs(check, true, false);
    check->callback([&action] { action = "check"; });
    CLI::App* census = family->add_subcommand("census", "Decide every (or sampled) pair");
    add_inputs(census, false, true);
    census->callback([&action] { action = "census"; });
    CLI::App* construct = family->add_subcommand("construct", "Build an unmatchable pair");
    add_inputs(construct, false, true);
    construct->callback([&action] { action = "construct"; });
  };
  add_family("group", Setting::Group, "Subsets of a finite abelian group");
  add_family("field", Setting::Field, "Subspaces of F_{p^m} over F_p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!g.out_path.empty()) {
    file.open(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << g.out_path << '\n';
      return kExitInvalid;
    }
    sink = &file;
  }

  try {
    if (action == "census") return run_census(setting, in, g, *sink);
    json result;
    bool agree = true;
    if (action == "check") {
      const ProblemSpec spec = problem_from(setting, in);
      result = setting == Setting::Group ? group_check(spec, g, agree)
                                         : field_check(spec, g, agree);
    } else {
      result = setting == Setting::Group ? group_construct(in) : field_construct(in);
    }
    emit(result, g, *sink);
    return agree ? kExitOk : kExitDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InternalInconsistency ? kExitDisagreement : kExitInvalid;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"matchcli"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace matchkit::harness
