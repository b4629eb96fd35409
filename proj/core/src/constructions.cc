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

#include "vbent/constructions.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "parallel.h"
#include "vbent/error.h"
#include "vbent/propp.h"

namespace vbent {
namespace {

std::string Hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(v));
  return buf;
}

BooleanFunction DualOf(const BooleanFunction& f, const FieldSpec& field,
                       const std::string& name) {
  try {
    return Dual(f, field);
  } catch (const PreconditionError& e) {
    throw PreconditionError(name + ": " + e.what());
  }
}

void CheckDomain(const BooleanFunction& f, const FieldSpec& field) {
  if (f.n() != field.n()) throw InvalidArgument("function and field sizes differ");
  if (field.n() % 2 != 0) throw InvalidArgument("bent functions need an even n");
}

Classification ThreeWay(const BooleanFunction& s, int n) {
  if (s.is_zero()) return BentClass(n);
  if (s.is_one()) return SemiBentClass(n);
  return MixedClass({0, std::int64_t{1} << (n / 2), std::int64_t{1} << (n / 2 + 1)});
}

SecondaryResult Finish(BooleanFunction f, Classification predicted,
                       std::optional<BooleanFunction> predicted_dual, const FieldSpec& field) {
  const WalshSpectrum w = Walsh(f, field);
  std::optional<BooleanFunction> verified_dual;
  if (w.classification().is_bent()) verified_dual = DualFromSpectrum(w);
  return {std::move(f), std::move(predicted), w.classification(), std::move(predicted_dual),
          std::move(verified_dual)};
}

BooleanFunction Majority(const BooleanFunction& a, const BooleanFunction& b,
                         const BooleanFunction& c) {
  return (a & b) ^ (a & c) ^ (b & c);
}

}  // namespace

SecondaryResult SigmaCombine(const BooleanFunction& f1, const BooleanFunction& f2,
                             const BooleanFunction& f3, const FieldSpec& field) {
  CheckDomain(f1, field);
  if (f1 == f2 || f1 == f3 || f2 == f3) {
    throw PreconditionError("f1, f2, f3 must be pairwise distinct");
  }
  const BooleanFunction d1 = DualOf(f1, field, "f1");
  const BooleanFunction d2 = DualOf(f2, field, "f2");
  const BooleanFunction d3 = DualOf(f3, field, "f3");
  const BooleanFunction d4 = DualOf(f1 ^ f2 ^ f3, field, "f4 = f1 + f2 + f3");
  const BooleanFunction s = d1 ^ d2 ^ d3 ^ d4;
  std::optional<BooleanFunction> dual;
  if (s.is_zero()) dual = Majority(d1, d2, d3);
  return Finish(Majority(f1, f2, f3), ThreeWay(s, field.n()), std::move(dual), field);
}

SecondaryResult BentPlusQuadraticTrace(const BooleanFunction& f, Elem a, Elem b,
                                       const FieldSpec& field) {
  CheckDomain(f, field);
  if (a == b) throw InvalidArgument("a and b must differ");
  if (!field.contains(a) || !field.contains(b)) throw InvalidArgument("element outside field");
  const BooleanFunction d = DualOf(f, field, "f");
  const BooleanFunction s = SecondDerivative(d, a, b);
  std::optional<BooleanFunction> dual;
  if (s.is_zero()) dual = Majority(d, d.Shifted(a), d.Shifted(b));
  BooleanFunction h = f ^ (LinearTrace(a, field) & LinearTrace(b, field));
  return Finish(std::move(h), ThreeWay(s, field.n()), std::move(dual), field);
}

SecondaryResult BentPlusCubicTrace(const BooleanFunction& f, Elem a, Elem b, Elem c,
                                   const FieldSpec& field) {
  CheckDomain(f, field);
  if (a == b || a == c || b == c) throw PreconditionError("a, b, c must be pairwise distinct");
  const BooleanFunction d = DualOf(f, field, "f");
  const std::pair<Elem, Elem> pairs[] = {{a, b}, {a, c}, {b, c}};
  for (const auto& [x, y] : pairs) {
    if (!SecondDerivative(d, x, y).is_zero()) {
      throw PreconditionError("D_" + Hex(x) + " D_" + Hex(y) + " f* is not zero");
    }
  }
  BooleanFunction dual = d ^ (Derivative(d, a) & Derivative(d, b) & Derivative(d, c));
  BooleanFunction sigma =
      f ^ (LinearTrace(a, field) & LinearTrace(b, field) & LinearTrace(c, field));
  return Finish(std::move(sigma), BentClass(field.n()), std::move(dual), field);
}

namespace {

SecondaryResult TangBentImpl(const BooleanFunction& g, const DefiningSet& u,
                             const ReducedPolynomial& poly, const FieldSpec& field,
                             bool cap_tau) {
  CheckDomain(g, field);
  const int tau = static_cast<int>(u.size());
  if (poly.arity() > tau) {
    throw InvalidArgument("polynomial has more variables than the defining set");
  }
  if (cap_tau && tau > field.n() / 2) {
    throw PreconditionError("defining set larger than n/2");
  }
  const BooleanFunction d = DualOf(g, field, "g");
  const PropertyCheck p = SatisfiesP(d, u);
  if (!p.holds) {
    throw PreconditionError("dual of g: D_u" + std::to_string(p.failure->i + 1) + " D_u" +
                            std::to_string(p.failure->j + 1) + " g* = 1 at x=" +
                            Hex(p.failure->x));
  }
  BooleanFunction dual = d;
  if (tau > 0) {
    std::vector<BooleanFunction> derivs;
    for (Elem e : u.elements()) derivs.push_back(Derivative(d, e));
    dual = dual ^ ComposeFunctions(poly.WithArity(tau), derivs);
  }
  return Finish(g ^ ComposeTraces(poly, u, field), BentClass(field.n()), std::move(dual), field);
}

}  // namespace

SecondaryResult TangBent(const BooleanFunction& g, const DefiningSet& u,
                         const ReducedPolynomial& poly, const FieldSpec& field) {
  return TangBentImpl(g, u, poly, field, true);
}

SecondaryResult RemarkMultiTrace(const BooleanFunction& f, Elem a, Elem b, Elem c,
                                 const ReducedPolynomial& poly, const FieldSpec& field) {
  if (a == b || a == c || b == c) throw PreconditionError("a, b, c must be pairwise distinct");
  if (poly.arity() > 3) throw InvalidArgument("polynomial must have at most 3 variables");
  // Dependent triples are allowed here, so no cap on tau.
  return TangBentImpl(f, DefiningSet({a, b, c}), poly.WithArity(3), field, false);
}

bool ConstructionReport::verified() const {
  for (const auto& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

std::vector<Assertion> ConstructionReport::failures() const {
  std::vector<Assertion> out;
  for (const auto& a : assertions) {
    if (!a.passed) out.push_back(a);
  }
  return out;
}

void ConstructionReport::Check(std::string name, bool passed, std::string detail) {
  assertions.push_back({std::move(name), passed, std::move(detail)});
}

std::string VectorialClassName(bool bent, bool plateaued) {
  if (bent) return "vectorial bent";
  if (plateaued) return "vectorial plateaued";
  return "not vectorial plateaued";
}

namespace {

// Per-lambda data shared by both lifts; index i <-> lambdas[i].
struct LiftBase {
  std::vector<Elem> lambdas;
  std::vector<BooleanFunction> components;
  std::vector<BooleanFunction> duals;  // closed form when given, else spectral
  std::vector<char> property;          // pairwise property of the dual on u
  bool property_everywhere = true;
};

LiftBase PrepareLift(const VectorialFunction& g, const DefiningSet& u, int arity_needed,
                     const FieldSpec& field, const VerifyOptions& options,
                     const DualFormula& dual, ConstructionReport& report) {
  if (g.n() != field.n()) throw InvalidArgument("function and field sizes differ");
  if (g.t() != 0 || g.m() == 0) throw InvalidArgument("lift needs a plain (n,m)-function");
  if (g.n() % 2 != 0) throw InvalidArgument("lift needs an even n");
  if (arity_needed > static_cast<int>(u.size())) {
    throw InvalidArgument("polynomial has more variables than the defining set");
  }
  for (Elem e : u.elements()) {
    if (!field.contains(e)) throw InvalidArgument("defining set element outside the field");
  }
  LiftBase base;
  for (Elem l : field.subfield_elements(g.m())) {
    if (l != 0) base.lambdas.push_back(l);
  }
  const std::size_t count = base.lambdas.size();
  base.components.assign(count, BooleanFunction(g.n()));
  base.duals.assign(count, BooleanFunction(g.n()));
  std::vector<BooleanFunction> spectral(count, BooleanFunction(g.n()));
  std::vector<std::optional<std::pair<std::uint32_t, std::int32_t>>> not_bent(count);
  base.property.assign(count, 0);
  std::vector<std::optional<PairWitness>> failure(count);
  internal::ParallelFor(count, options.jobs, [&](std::size_t i) {
    base.components[i] = Component(g, {base.lambdas[i], 0}, field);
    const WalshSpectrum w = Walsh(base.components[i], field);
    if (!w.classification().is_bent()) {
      const std::int32_t root = std::int32_t{1} << (g.n() / 2);
      for (std::uint32_t a = 0; a < w.values().size(); ++a) {
        if (w[a] != root && w[a] != -root) {
          not_bent[i] = {a, w[a]};
          break;
        }
      }
      return;
    }
    spectral[i] = DualFromSpectrum(w);
    base.duals[i] = dual ? dual(base.lambdas[i]) : spectral[i];
    const PropertyCheck p = SatisfiesP(base.duals[i], u);
    base.property[i] = p.holds;
    failure[i] = p.failure;
  });
  for (std::size_t i = 0; i < count; ++i) {
    if (not_bent[i]) {
      throw PreconditionError("G is not vectorial bent: component lambda=" +
                              Hex(base.lambdas[i]) + " has W(" + Hex(not_bent[i]->first) +
                              ") = " + std::to_string(not_bent[i]->second));
    }
  }
  if (dual) {
    std::string detail;
    bool all = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!(base.duals[i] == spectral[i])) {
        all = false;
        detail = "lambda=" + Hex(base.lambdas[i]) + " differs at x=" +
                 Hex(base.duals[i].FirstDifference(spectral[i]));
        break;
      }
    }
    report.Check("closed-form duals of G components", all, detail);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (base.property[i]) continue;
    base.property_everywhere = false;
    if (field.subfield_trace(base.lambdas[i], g.m()) == 1) {
      throw PreconditionError("dual of G_lambda, lambda=" + Hex(base.lambdas[i]) +
                              ", fails the pairwise property: D_u" +
                              std::to_string(failure[i]->i + 1) + " D_u" +
                              std::to_string(failure[i]->j + 1) + " = 1 at x=" +
                              Hex(failure[i]->x));
    }
  }
  report.n = g.n();
  report.m = g.m();
  report.k = g.n() / 2;
  report.tau = static_cast<int>(u.size());
  report.u.assign(u.elements().begin(), u.elements().end());
  report.field = field.ToString();
  return base;
}

BooleanFunction PredictedDual(const BooleanFunction& base, const DefiningSet& u,
                              const ReducedPolynomial& poly) {
  if (u.size() == 0 || poly.is_zero()) return base;
  std::vector<BooleanFunction> derivs;
  for (Elem e : u.elements()) derivs.push_back(Derivative(base, e));
  return base ^ ComposeFunctions(poly.WithArity(static_cast<int>(u.size())), derivs);
}

void CheckDegrees(const VectorialFunction& h, const FieldSpec& field,
                  ConstructionReport& report) {
  report.measured_degree = VectorialDegree(h, field);
  const int component_max = MaxComponentDegree(h, field);
  report.Check("coordinate and component degrees agree", report.measured_degree == component_max,
               std::to_string(report.measured_degree) + " vs " + std::to_string(component_max));
}

void CheckBound(ConstructionReport& report, int output_bits) {
  if (output_bits < report.n / 2) return;
  report.bent_bound = MaxBentComponentsBound(report.n, output_bits);
  report.Check("bent components within bound",
               report.measured_bent_components <= *report.bent_bound,
               std::to_string(report.measured_bent_components) + " of at most " +
                   std::to_string(*report.bent_bound));
}

template <typename Pred>
std::string FirstComponent(const std::vector<ComponentRecord>& records, Pred pred) {
  for (const auto& c : records) {
    if (pred(c)) return c.selector.ToString() + " is " + c.classification.ToString();
  }
  return {};
}

}  // namespace

LiftResult VecBentLift(const VectorialFunction& g, const DefiningSet& u,
                       const ReducedPolynomial& poly, const FieldSpec& field,
                       const VerifyOptions& options, const DualFormula& dual) {
  ConstructionReport report;
  LiftBase base = PrepareLift(g, u, poly.arity(), field, options, dual, report);
  report.polys = {poly.ToString()};
  const BooleanFunction boolean_part = ComposeTraces(poly, u, field);
  VectorialFunction h = AddBoolean(g, boolean_part, field);

  const std::size_t count = base.lambdas.size();
  report.components.resize(count);
  std::vector<char> unchanged(count, 1);
  internal::ParallelFor(count, options.jobs, [&](std::size_t i) {
    const Elem lambda = base.lambdas[i];
    const bool touched = field.subfield_trace(lambda, g.m()) == 1;
    const BooleanFunction hc = Component(h, {lambda, 0}, field);
    if (!touched) unchanged[i] = hc == base.components[i];
    const WalshSpectrum w = Walsh(hc, field);
    ComponentRecord& rec = report.components[i];
    rec.selector = {lambda, 0};
    rec.classification = w.classification();
    rec.predicted_bent = true;
    const BooleanFunction predicted =
        touched ? PredictedDual(base.duals[i], u, poly) : base.duals[i];
    rec.dual_match = w.classification().is_bent() && DualFromSpectrum(w) == predicted;
  });

  bool all_bent = true;
  bool all_plateaued = true;
  for (const auto& c : report.components) {
    all_bent = all_bent && c.classification.is_bent();
    all_plateaued = all_plateaued && c.classification.is_plateaued();
    if (c.classification.is_bent()) ++report.measured_bent_components;
  }
  report.predicted_class = VectorialClassName(true, true);
  report.verified_class = VectorialClassName(all_bent, all_plateaued);
  report.Check("H vectorial bent", all_bent,
               FirstComponent(report.components,
                              [](const ComponentRecord& c) { return !c.classification.is_bent(); }));
  std::string unchanged_detail;
  for (std::size_t i = 0; i < count; ++i) {
    if (!unchanged[i]) {
      unchanged_detail = "lambda=" + Hex(base.lambdas[i]);
      break;
    }
  }
  report.Check("components with Tr(lambda)=0 unchanged", unchanged_detail.empty(),
               unchanged_detail);
  report.Check("component duals match prediction",
               std::all_of(report.components.begin(), report.components.end(),
                           [](const ComponentRecord& c) { return *c.dual_match; }),
               FirstComponent(report.components,
                              [](const ComponentRecord& c) { return !*c.dual_match; }));
  report.predicted_bent_components = count;
  report.Check("bent component count", report.measured_bent_components == count,
               std::to_string(report.measured_bent_components) + " of " +
                   std::to_string(count));
  CheckBound(report, g.m());
  CheckDegrees(h, field, report);
  return {std::move(h), std::move(report)};
}

LiftResult VecPlateauedLift(const VectorialFunction& g, const DefiningSet& u,
                            std::span<const ReducedPolynomial> polys, const FieldSpec& field,
                            const VerifyOptions& options, const DualFormula& dual) {
  if (polys.empty()) throw InvalidArgument("augmentation needs at least one polynomial");
  int arity = 0;
  for (const auto& p : polys) arity = std::max(arity, p.arity());
  ConstructionReport report;
  LiftBase base = PrepareLift(g, u, arity, field, options, dual, report);
  const int tau = static_cast<int>(u.size());
  std::vector<BooleanFunction> fs;
  std::vector<ReducedPolynomial> lifted;
  for (const auto& p : polys) {
    report.polys.push_back(p.ToString());
    fs.push_back(ComposeTraces(p, u, field));
    lifted.push_back(p.WithArity(tau));
  }
  VectorialFunction h = Augment(g, fs, field);
  report.t = h.t();

  const std::vector<Selector> selectors = Selectors(h, field);
  report.components.resize(selectors.size());
  internal::ParallelFor(selectors.size(), options.jobs, [&](std::size_t i) {
    const Selector s = selectors[i];
    const WalshSpectrum w = Walsh(Component(h, s, field), field);
    ComponentRecord& rec = report.components[i];
    rec.selector = s;
    rec.classification = w.classification();
    if (s.lambda == 0) return;
    const std::size_t li = static_cast<std::size_t>(
        std::lower_bound(base.lambdas.begin(), base.lambdas.end(), s.lambda) -
        base.lambdas.begin());
    if (s.v != 0 && !base.property[li]) return;
    ReducedPolynomial combined(tau);
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if ((s.v >> j) & 1u) combined = combined + lifted[j];
    }
    rec.predicted_bent = true;
    rec.dual_match = w.classification().is_bent() &&
                     DualFromSpectrum(w) == PredictedDual(base.duals[li], u, combined);
  });

  bool all_plateaued = true;
  bool all_bent = true;
  for (const auto& c : report.components) {
    all_plateaued = all_plateaued && c.classification.is_plateaued();
    all_bent = all_bent && c.classification.is_bent();
    if (c.classification.is_bent()) ++report.measured_bent_components;
  }
  const PlateauedVerdict tail = IsVectorialPlateaued(h.Tail(field), field, options);
  report.predicted_class = VectorialClassName(false, tail.holds);
  report.verified_class = VectorialClassName(all_bent, all_plateaued);
  report.Check("plateaued iff tail plateaued", all_plateaued == tail.holds,
               "augmented " + std::string(all_plateaued ? "" : "not ") + "plateaued, tail " +
                   (tail.holds ? "" : "not ") + "plateaued");
  report.Check("predicted components bent",
               std::all_of(report.components.begin(), report.components.end(),
                           [](const ComponentRecord& c) {
                             return !c.predicted_bent || c.classification.is_bent();
                           }),
               FirstComponent(report.components, [](const ComponentRecord& c) {
                 return c.predicted_bent && !c.classification.is_bent();
               }));
  report.Check("component duals match prediction",
               std::all_of(report.components.begin(), report.components.end(),
                           [](const ComponentRecord& c) {
                             return !c.dual_match || *c.dual_match;
                           }),
               FirstComponent(report.components, [](const ComponentRecord& c) {
                 return c.dual_match && !*c.dual_match;
               }));
  if (base.property_everywhere) {
    const std::uint64_t predicted = base.lambdas.size() << h.t();
    report.predicted_bent_components = predicted;
    report.Check("bent component count", report.measured_bent_components == predicted,
                 std::to_string(report.measured_bent_components) + " vs predicted " +
                     std::to_string(predicted));
    if (2 * g.m() == g.n()) {
      report.Check("component bent iff lambda != 0",
                   std::all_of(report.components.begin(), report.components.end(),
                               [](const ComponentRecord& c) {
                                 return c.classification.is_bent() == (c.selector.lambda != 0);
                               }),
                   FirstComponent(report.components, [](const ComponentRecord& c) {
                     return c.classification.is_bent() != (c.selector.lambda != 0);
                   }));
    }
  }
  CheckBound(report, g.m() + h.t());
  CheckDegrees(h, field, report);
  return {std::move(h), std::move(report)};
}

}  // namespace vbent
