// Copyright 2026 The vbent Authors.
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

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vbent/error.h"
#include "vbent/families.h"
#include "vbent/formats.h"
#include "vbent/propp.h"
#include "vbent/redpoly.h"

namespace vbent::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string Hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t ParseHexArg(const std::string& text, const std::string& what) {
  std::string s = text;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s = s.substr(2);
  if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdefABCDEF") != s.npos) {
    throw CLI::ValidationError(what, "expected a hex number, got '" + text + "'");
  }
  return std::stoull(s, nullptr, 16);
}

std::vector<Elem> ParseHexList(const std::string& text, const std::string& what) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw CLI::ValidationError(what, "empty entry in hex list");
    const std::uint64_t v = ParseHexArg(item.substr(b, e - b + 1), what);
    if (v > 0xffffffffu) throw CLI::ValidationError(what, "element too large");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::string SetString(const std::vector<Elem>& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + Hex(u[i]);
  return s + "}";
}

std::string Timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json Decimal(std::uint64_t v) { return std::to_string(v); }

template <typename T>
Json OptionalDecimal(const std::optional<T>& v) {
  return v ? Decimal(static_cast<std::uint64_t>(*v)) : Json(nullptr);
}

Json ReportJson(const ConstructionReport& r, bool stamp) {
  Json j;
  j["family"] = r.family;
  j["field"] = r.field;
  j["n"] = Decimal(r.n);
  j["m"] = Decimal(r.m);
  j["k"] = Decimal(r.k);
  j["r"] = Decimal(r.r);
  j["tau"] = Decimal(r.tau);
  j["t"] = Decimal(r.t);
  Json u = Json::array();
  for (Elem e : r.u) u.push_back(Hex(e));
  j["u"] = u;
  j["polys"] = r.polys;
  j["seed"] = OptionalDecimal(r.seed);
  j["predicted_class"] = r.predicted_class;
  j["verified_class"] = r.verified_class;
  j["predicted_degree"] = OptionalDecimal(r.predicted_degree);
  j["measured_degree"] = Decimal(r.measured_degree);
  j["predicted_bent_components"] = OptionalDecimal(r.predicted_bent_components);
  j["measured_bent_components"] = Decimal(r.measured_bent_components);
  j["bent_bound"] = OptionalDecimal(r.bent_bound);
  bool dual_match = true;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["lambda"] = Hex(c.selector.lambda);
    cj["v"] = Hex(c.selector.v);
    cj["class"] = c.classification.ToString();
    cj["predicted_bent"] = c.predicted_bent;
    cj["dual_match"] = c.dual_match ? Json(*c.dual_match) : Json(nullptr);
    if (c.dual_match && !*c.dual_match) dual_match = false;
    comps.push_back(cj);
  }
  j["dual_match"] = dual_match;
  j["components"] = comps;
  Json asserts = Json::array();
  for (const auto& a : r.assertions) {
    asserts.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  j["assertions"] = asserts;
  j["verified"] = r.verified();
  if (stamp) j["timestamp"] = Timestamp();
  return j;
}

std::string Dims(int n, int outputs) {
  return "(" + std::to_string(n) + "," + std::to_string(outputs) + ")";
}

struct ConstructArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int tau = -1;
  int t = 0;
  std::vector<std::string> polys;
  std::string u;
  bool auto_u = false;
  std::string out;
  std::string report;
  bool stamp = false;
  std::string modulus;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  int random_degree = -1;
};

int Construct(const ConstructArgs& a, bool seeded, std::ostream& out) {
  FamilyRequest req;
  req.family = *ParseFamily(a.family);
  req.n = a.n;
  req.r = a.r;
  req.t = a.t;
  if (a.tau >= 0) req.tau = a.tau;
  if (!a.u.empty()) req.u = ParseHexList(a.u, "--u");
  if (!a.modulus.empty()) req.modulus = ParseHexArg(a.modulus, "--field-modulus");
  for (std::size_t i = 0; i < a.polys.size(); ++i) {
    try {
      req.polys.push_back(ReducedPolynomial::Parse(a.polys[i]));
    } catch (const ParseError& e) {
      throw ParseError("--poly #" + std::to_string(i + 1) + " '" + a.polys[i] + "': bad term",
                       e.line(), e.column());
    }
  }
  if (a.polys.empty() && seeded) {
    const int k = req.family == Family::kGold ? a.n / 4 : a.n / 2;
    const int tau = a.tau >= 0 ? a.tau : (req.u ? static_cast<int>(req.u->size()) : k);
    const int degree = a.random_degree >= 0 ? a.random_degree : tau;
    if (tau < 0 || degree > tau) {
      throw PreconditionError("--random-degree must not exceed tau");
    }
    for (int i = 0; i < std::max(a.t, 1); ++i) {
      req.polys.push_back(RandomReducedPolynomial(tau, degree, a.seed + static_cast<std::uint64_t>(i)));
    }
    req.seed = a.seed;
  } else if (a.polys.empty() && a.t > 0) {
    throw CLI::ValidationError("--poly", "t > 0 needs t polynomials (or --seed)");
  }

  const Construction c = BuildFamily(req, VerifyOptions{a.jobs});
  const ConstructionReport& r = c.report;
  const int outputs = r.m + r.t;
  out << "family: " << r.family << " n=" << r.n << " k=" << r.k;
  if (req.family == Family::kNiho) out << " r=" << r.r;
  out << " tau=" << r.tau << " t=" << r.t << "\n";
  out << "field: " << r.field << "\n";
  out << "u: " << SetString(r.u) << "\n";
  for (const auto& p : r.polys) out << "poly: " << p << "\n";
  out << "class: " << r.verified_class << " " << Dims(r.n, outputs)
      << " [predicted: " << r.predicted_class << "]\n";
  out << "degree: " << r.measured_degree;
  if (r.predicted_degree) out << " [predicted: " << *r.predicted_degree << "]";
  out << "\n";
  out << "bent components: " << r.measured_bent_components;
  if (r.predicted_bent_components) out << " [predicted: " << *r.predicted_bent_components << "]";
  out << " bound: " << (r.bent_bound ? std::to_string(*r.bent_bound) : "n/a") << "\n";
  const auto failures = r.failures();
  out << "assertions: " << r.assertions.size() - failures.size() << " passed, "
      << failures.size() << " failed\n";
  for (const auto& f : failures) out << "FAIL " << f.name << ": " << f.detail << "\n";

  if (!a.out.empty()) WriteTextFileAtomic(a.out, FormatVectorial(c.function, c.field));
  const std::string report_path =
      !a.report.empty() ? a.report : (a.out.empty() ? "" : a.out + ".report.json");
  if (!report_path.empty()) {
    WriteTextFileAtomic(report_path, ReportJson(r, a.stamp).dump(2) + "\n");
  }
  return failures.empty() ? kExitOk : kExitMismatch;
}

std::string SpectrumSummary(const WalshSpectrum& w) {
  std::map<std::int32_t, std::uint64_t> counts;
  for (std::int32_t v : w.values()) ++counts[v];
  std::string s;
  for (const auto& [v, c] : counts) {
    s += (s.empty() ? "" : " ") + std::to_string(v) + ":" + std::to_string(c);
  }
  return s;
}

int Verify(const std::string& path, unsigned jobs, std::ostream& out) {
  const std::string text = ReadTextFile(path);
  if (DetectKind(text) == FileKind::kBoolean) {
    const BooleanFile file = ParseBoolean(text);
    const WalshSpectrum w = Walsh(file.function, file.field);
    out << "function: boolean n=" << file.function.n() << "\n";
    out << "class: " << w.classification().ToString() << "\n";
    out << "degree: " << AlgebraicDegree(file.function) << "\n";
    out << "weight: " << file.function.weight() << "\n";
    out << "spectrum: " << SpectrumSummary(w) << "\n";
    return kExitOk;
  }
  const VectorialFile file = ParseVectorial(text);
  const VectorialFunction& f = file.function;
  const int outputs = f.output_dimension();
  const PlateauedVerdict v = IsVectorialPlateaued(f, file.field, VerifyOptions{jobs});
  std::map<std::string, std::uint64_t> kinds;
  std::uint64_t bent = 0;
  for (const auto& c : v.components) {
    ++kinds[c.classification.ToString()];
    if (c.classification.is_bent()) ++bent;
  }
  const bool all_bent = !v.components.empty() && bent == v.components.size();
  out << "function: vectorial " << Dims(f.n(), outputs) << " m=" << f.m() << " t=" << f.t()
      << "\n";
  out << "class: " << VectorialClassName(all_bent, v.holds) << " " << Dims(f.n(), outputs)
      << "\n";
  if (v.witness) {
    out << "witness: component " << v.witness->ToString() << " is not plateaued\n";
  }
  out << "degree: " << VectorialDegree(f, file.field) << "\n";
  out << "components: " << v.components.size() << "\n";
  std::string summary;
  for (const auto& [name, count] : kinds) {
    summary += (summary.empty() ? "" : " ") + name + ":" + std::to_string(count);
  }
  out << "spectrum: " << summary << "\n";
  std::string bound = "n/a";
  if (f.n() % 2 == 0 && 2 * outputs >= f.n()) {
    bound = std::to_string(MaxBentComponentsBound(f.n(), outputs));
  }
  out << "bent components: " << bent << " bound: " << bound << "\n";
  return kExitOk;
}

struct ProppArgs {
  std::string file;
  std::string u;
  int search = 0;
  std::size_t limit = 20;
  std::uint64_t node_budget = 10'000'000;
};

int Propp(const ProppArgs& a, std::ostream& out) {
  const std::string text = ReadTextFile(a.file);
  if (DetectKind(text) != FileKind::kBoolean) {
    throw ParseError("propp expects a BF truth table", 1, 1);
  }
  const BooleanFile file = ParseBoolean(text);
  const BooleanFunction& g = file.function;
  if (!a.u.empty()) {
    const DefiningSet u(ParseHexList(a.u, "--u"));
    const PropertyCheck p = SatisfiesP(g, u);
    const ShiftCheck s = ShiftDecomposition(g, u);
    out << "defining set: " << u.ToString() << "\n";
    out << "property: " << (p.holds ? "holds" : "fails") << "\n";
    if (!p.holds) {
      out << "witness: D_u" << p.failure->i + 1 << " D_u" << p.failure->j + 1 << " g("
          << Hex(p.failure->x) << ") = 1\n";
    }
    out << "shift decomposition: " << (s.holds ? "holds" : "fails");
    if (!s.holds) out << " at w=" << Hex(*s.weight) << " x=" << Hex(s.x);
    out << "\n";
    if (s.holds != p.holds) throw VerificationError("shift decomposition disagrees");
    if (p.holds) {
      if (!SpanClosure(g, u)) throw VerificationError("span closure failed");
      out << "span closure: holds\n";
    }
    return p.holds ? kExitOk : kExitPrecondition;
  }
  SearchOptions options;
  options.limit = a.limit;
  options.node_budget = a.node_budget;
  const SearchResult r = FindDefiningSets(g, a.search, options);
  out << "tau: " << a.search << "\n";
  out << "sets found: " << r.total_found << " (showing " << r.sets.size() << ")\n";
  for (const auto& s : r.sets) out << s.ToString() << "\n";
  if (r.truncated) out << "truncated at --limit " << a.limit << "\n";
  if (r.budget_exhausted) {
    out << "search incomplete: node budget " << a.node_budget << " exhausted\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

struct ComponentArgs {
  std::string file;
  std::string lambda = "0";
  std::string v = "0";
  bool dual = false;
  std::string out;
};

int ExtractComponent(const ComponentArgs& a, std::ostream& out) {
  const std::string text = ReadTextFile(a.file);
  if (DetectKind(text) != FileKind::kVectorial) {
    throw ParseError("component expects a VF lookup table", 1, 1);
  }
  const VectorialFile file = ParseVectorial(text);
  const Selector s{static_cast<Elem>(ParseHexArg(a.lambda, "--lambda")),
                   static_cast<std::uint32_t>(ParseHexArg(a.v, "--v"))};
  BooleanFunction c = Component(file.function, s, file.field);
  if (a.dual) c = Dual(c, file.field);
  const std::string body = FormatBoolean(c, file.field);
  if (a.out.empty()) {
    out << body;
  } else {
    WriteTextFileAtomic(a.out, body);
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify vectorial bent and plateaued functions", "vbent"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for per-component spectra")
      ->check(CLI::Range(1u, 256u));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a family member and verify it");
  construct->add_option("--family", ca.family, "kasami, niho or gold")
      ->required()
      ->check(CLI::IsMember({"kasami", "niho", "gold"}));
  construct->add_option("--n", ca.n, "Field degree")->required();
  construct->add_option("--r", ca.r, "Niho parameter r");
  construct->add_option("--tau", ca.tau, "Number of trace coordinates (default k)");
  construct->add_option("--t", ca.t, "Appended coordinates")->check(CLI::NonNegativeNumber);
  construct->add_option("--poly", ca.polys, "Reduced polynomial, e.g. \"X1*X2+X3\"; repeat for t > 0");
  auto* u_opt = construct->add_option("--u", ca.u, "Comma-separated hex list u_1,...,u_tau");
  construct->add_flag("--auto-u", ca.auto_u, "Use the standard choice of u (default)")
      ->excludes(u_opt);
  construct->add_option("--out", ca.out, "Lookup table output (VF)");
  construct->add_option("--report", ca.report, "JSON report path (default <out>.report.json)");
  construct->add_flag("--stamp", ca.stamp, "Add a timestamp to the report");
  construct->add_option("--field-modulus", ca.modulus, "Hex modulus overriding the default");
  auto* seed_opt = construct->add_option("--seed", ca.seed, "Draw random polynomials from this seed");
  construct->add_option("--random-degree", ca.random_degree, "Degree bound for --seed draws")
      ->needs(seed_opt);
  construct->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Classify a BF or VF file");
  verify->add_option("file", verify_file, "Input file")->required();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  ProppArgs pa;
  auto* propp = app.add_subcommand("propp", "Check or search defining sets of a BF file");
  propp->add_option("file", pa.file, "BF truth table")->required();
  auto* pu = propp->add_option("--u", pa.u, "Comma-separated hex list");
  auto* ps = propp->add_option("--search", pa.search, "Search sets of this size")
                 ->check(CLI::Range(2, 24));
  pu->excludes(ps);
  propp->add_option("--limit", pa.limit, "Sets to print");
  propp->add_option("--node-budget", pa.node_budget, "Search node budget (0 = unbounded)");

  ComponentArgs comp;
  auto* component = app.add_subcommand("component", "Write one component of a VF file as BF");
  component->add_option("file", comp.file, "VF lookup table")->required();
  component->add_option("--lambda", comp.lambda, "Hex lambda in GF(2^m)");
  component->add_option("--v", comp.v, "Hex selector for appended bits");
  component->add_flag("--dual", comp.dual, "Write the dual instead");
  component->add_option("--out", comp.out, "BF output (default stdout)");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*propp && pa.u.empty() && pa.search == 0) {
      throw CLI::ValidationError("propp", "needs --u or --search");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  ca.jobs = jobs;

  try {
    if (*construct) return Construct(ca, seed_opt->count() > 0, out);
    if (*verify) return Verify(verify_file, jobs, out);
    if (*propp) return Propp(pa, out);
    if (*component) return ExtractComponent(comp, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvalidArgument& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vbent::cli
