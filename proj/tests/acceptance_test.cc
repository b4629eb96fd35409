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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// FAIL. Every spectrum computed here runs with the Parseval and round-trip
// audit switched on.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "vbent/boolfun.h"
#include "vbent/constructions.h"
#include "vbent/error.h"
#include "vbent/families.h"
#include "vbent/propp.h"
#include "vbent/redpoly.h"
#include "vbent/vectorial.h"

namespace vbent {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only.
  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

oracle::Table ToTable(const BooleanFunction& f) {
  oracle::Table t(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) t[x] = f(x) ? 1 : 0;
  return t;
}

BooleanFunction FromTable(int n, const oracle::Table& t) {
  return BooleanFunction::Tabulate(n, [&](std::uint32_t x) { return t[x] != 0; });
}

std::vector<Elem> NonzeroSubfield(const FieldSpec& field, int k) {
  std::vector<Elem> out;
  for (Elem e : field.subfield_elements(k)) {
    if (e != 0) out.push_back(e);
  }
  return out;
}

std::string Str(std::uint64_t v) { return std::to_string(v); }

// Vectorial bentness recomputed from scratch: every component, every point.
bool AllComponentsBent(const VectorialFunction& f, const FieldSpec& field) {
  const std::int32_t root = std::int32_t{1} << (f.n() / 2);
  for (const Selector& s : Selectors(f, field)) {
    const WalshSpectrum w = Walsh(Component(f, s, field), field);
    for (std::int32_t v : w.values()) {
      if (v != root && v != -root) return false;
    }
  }
  return true;
}

std::string ReportFailure(const ConstructionReport& r) {
  const auto f = r.failures();
  return f.empty() ? std::string() : f.front().name + ": " + f.front().detail;
}

Outcome FastWalsh() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0;
  for (int n = 2; n <= 8; ++n) {
    const FieldSpec field = FieldSpec::Standard(n);
    for (int i = 0; i < 100; ++i) {
      const oracle::Table t = oracle::RandomTable(n, rng);
      const WalshSpectrum w = Walsh(FromTable(n, t), field);
      const auto naive = oracle::Walsh(t, field.modulus(), n);
      for (std::uint32_t a = 0; a < field.size(); ++a) {
        o.Require(w[a] == naive[a], "n=" + Str(n) + " a=" + Str(a));
      }
      ++checked;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.Require(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = Str(checked) + " functions, " + std::to_string(secs).substr(0, 4) + " s";
  return o;
}

Outcome KasamiFamily() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int instances = 0, degree_checks = 0;
  for (int n : {4, 6, 8}) {
    const int k = n / 2;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      FamilyRequest req;
      req.family = Family::kKasami;
      req.n = n;
      req.polys = {RandomReducedPolynomial(k, k, 500 + seed * 7 + static_cast<std::uint64_t>(n))};
      const Construction c = BuildFamily(req);
      const std::string tag = "n=" + Str(n) + " F=" + req.polys[0].ToString();
      o.Require(c.report.verified(), tag + " " + ReportFailure(c.report));
      o.Require(AllComponentsBent(c.function, c.field), tag + " not vectorial bent");
      const int d = req.polys[0].degree();
      if (d >= 2 && LinearlyIndependent(c.report.u)) {
        ++degree_checks;
        int measured = 0;
        for (const auto& coord : Coordinates(c.function, c.field)) {
          measured = std::max(measured, AlgebraicDegree(coord));
        }
        o.Require(measured == d, tag + " degree " + Str(measured));
      }
      ++instances;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.Require(secs < 30.0, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    o.detail = Str(instances) + " instances, " + Str(degree_checks) + " degree checks";
  }
  return o;
}

Outcome KasamiDuals() {
  Outcome o;
  int count = 0;
  for (int n : {4, 6, 8}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const VectorialFunction g = KasamiBase(field);
    for (Elem lambda : NonzeroSubfield(field, n / 2)) {
      const BooleanFunction c = Component(g, {lambda, 0}, field);
      // Tr^k_1(lambda^-1 x^(2^k+1)) + 1, evaluated directly.
      const Elem inv = field.inverse(lambda);
      const BooleanFunction closed = BooleanFunction::Tabulate(n, [&](std::uint32_t x) {
        const Elem y = field.mul(inv, field.pow(x, (std::uint64_t{1} << (n / 2)) + 1));
        return field.subfield_trace(y, n / 2) == 0;
      });
      o.Require(closed == KasamiDual(field, lambda), "library formula n=" + Str(n));
      o.Require(Dual(c, field) == closed, "n=" + Str(n) + " lambda=" + Str(lambda));
      ++count;
    }
  }
  if (o.pass) o.detail = Str(count) + " components";
  return o;
}

Outcome NihoFamily() {
  Outcome o;
  int lifts = 0, duals = 0;
  for (const auto& [n, r] : {std::pair{6, 2}, std::pair{10, 2}, std::pair{10, 3}}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const int k = n / 2;
    const std::string tag = "n=" + Str(n) + " r=" + Str(r);
    const VectorialFunction g = NihoBase(field, r);
    for (Elem x = 0; x < field.size(); ++x) {
      o.Require(field.pow(g.value(x), std::uint64_t{1} << k) == g.value(x),
                tag + " value outside subfield");
    }
    o.Require(AllComponentsBent(g, field), tag + " G not vectorial bent");

    const std::uint64_t dt = NihoScalingExponent(n, r);
    const std::uint64_t half = (std::uint64_t{1} << k) - 1;
    const std::uint64_t t = (std::uint64_t{1} << (r - 1)) - 1;
    o.Require(dt == half * (t * (std::uint64_t{1} << (k - r)) + 1) + 1, tag + " d_t");
    const BooleanFunction one = NihoDualOne(field, r, NihoDualParameter(field));
    for (Elem lambda : NonzeroSubfield(field, k)) {
      const Elem delta = NihoDelta(field, r, lambda);
      o.Require(field.in_subfield(delta, k) && field.pow(delta, dt) == lambda,
                tag + " delta for lambda=" + Str(lambda));
      o.Require(Dual(Component(g, {lambda, 0}, field), field) ==
                    one.Scaled(field, field.inverse(delta)),
                tag + " dual lambda=" + Str(lambda));
      ++duals;
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      FamilyRequest req;
      req.family = Family::kNiho;
      req.n = n;
      req.r = r;
      req.polys = {RandomReducedPolynomial(k, k, 900 + seed + 31 * static_cast<std::uint64_t>(n + r))};
      const Construction c = BuildFamily(req);
      o.Require(c.report.verified(), tag + " " + ReportFailure(c.report));
      o.Require(AllComponentsBent(c.function, c.field), tag + " H not vectorial bent");
      ++lifts;
    }
  }
  if (o.pass) o.detail = Str(lifts) + " lifts, " + Str(duals) + " closed-form duals";
  return o;
}

Outcome GoldFamily() {
  Outcome o;
  int lifts = 0, duals = 0;
  for (int n : {8, 12}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const int k = n / 4;
    const std::string tag = "n=" + Str(n);
    const Elem omega = GoldOmega(field);
    const std::uint64_t order = field.group_order();
    // omega in U \ {1}: omega^(2^k+1) = 1, and omega lies in GF(2^(2k)).
    o.Require(omega != 1 && field.pow(omega, (std::uint64_t{1} << k) + 1) == 1 &&
                  field.in_subfield(omega, 2 * k),
              tag + " omega not on the unit circle");
    // omega outside <g^(2^k+1)>, the subgroup of index 2^k+1.
    o.Require(field.pow(omega, order / ((std::uint64_t{1} << k) + 1)) != 1,
              tag + " omega in <g^(2^k+1)>");
    o.Require((omega ^ field.frobenius(omega, k)) != 0, tag + " omega + omega^(2^k) = 0");

    const VectorialFunction g = GoldBase(field);
    const Elem l0 = GoldLambda0(field);
    const BooleanFunction g0 = Component(g, {l0, 0}, field);
    o.Require(Dual(g0, field) == g0, tag + " G_lambda0 not self-dual");
    for (Elem lambda : NonzeroSubfield(field, k)) {
      const Elem delta = GoldDelta(field, lambda);
      o.Require(field.mul(field.pow(delta, (std::uint64_t{1} << k) + 1), l0) == lambda,
                tag + " delta for lambda=" + Str(lambda));
      o.Require(Dual(Component(g, {lambda, 0}, field), field) ==
                    g0.Scaled(field, field.inverse(delta)),
                tag + " dual lambda=" + Str(lambda));
      ++duals;
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      FamilyRequest req;
      req.family = Family::kGold;
      req.n = n;
      req.polys = {RandomReducedPolynomial(k, k, 1300 + seed + static_cast<std::uint64_t>(n))};
      const Construction c = BuildFamily(req);
      o.Require(c.report.verified(), tag + " " + ReportFailure(c.report));
      o.Require(AllComponentsBent(c.function, c.field), tag + " H not vectorial bent");
      ++lifts;
    }
  }
  if (o.pass) o.detail = Str(lifts) + " lifts, " + Str(duals) + " closed-form duals";
  return o;
}

// Class of f + Tr(ax)Tr(bx) predicted from D_a D_b f*.
Classification PredictFromDerivative(const BooleanFunction& fd, Elem a, Elem b, int n) {
  const BooleanFunction s = SecondDerivative(fd, a, b);
  if (s.is_zero()) return BentClass(n);
  if (s.is_one()) return SemiBentClass(n);
  return MixedClass({0, std::int64_t{1} << (n / 2), std::int64_t{1} << (n / 2 + 1)});
}

Outcome Trichotomy() {
  Outcome o;
  std::set<SpectrumKind> seen;
  std::uint64_t cases = 0;
  auto run = [&](const BooleanFunction& f, const FieldSpec& field, Elem a, Elem b) {
    const BooleanFunction fd = Dual(f, field);
    const Classification predicted = PredictFromDerivative(fd, a, b, field.n());
    const BooleanFunction h = f ^ (LinearTrace(a, field) & LinearTrace(b, field));
    const Classification verified = Walsh(h, field).classification();
    o.Require(predicted == verified, "n=" + Str(field.n()) + " a=" + Str(a) + " b=" + Str(b) +
                                         " predicted " + predicted.ToString() + " got " +
                                         verified.ToString());
    const SecondaryResult lib = BentPlusQuadraticTrace(f, a, b, field);
    o.Require(lib.ok() && lib.verified == verified, "library disagrees at a=" + Str(a));
    if (verified.is_bent()) {
      // h* = f*(x) f*(x+a) + f*(x) f*(x+b) + f*(x+a) f*(x+b)
      const BooleanFunction sa = fd.Shifted(a), sb = fd.Shifted(b);
      o.Require(Dual(h, field) == ((fd & sa) ^ (fd & sb) ^ (sa & sb)), "dual formula");
    }
    seen.insert(verified.kind);
    ++cases;
  };

  const FieldSpec f16 = FieldSpec::Standard(4);
  const BooleanFunction f4 = Component(KasamiBase(f16), {1, 0}, f16);
  for (Elem a = 0; a < 16; ++a) {
    for (Elem b = 0; b < 16; ++b) {
      if (a != b) run(f4, f16, a, b);
    }
  }
  // At n = 6 the component comes from the Kasami family lifted with a cubic
  // F, so D_a D_b f* is not always constant.
  const FieldSpec f64 = FieldSpec::Standard(6);
  FamilyRequest req;
  req.n = 6;
  req.polys = {ReducedPolynomial::Parse("X1*X2*X3")};
  const Construction c = BuildFamily(req);
  const BooleanFunction f6 = Component(c.function, {1, 0}, f64);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const Elem a = static_cast<Elem>(rng() % 64);
    Elem b = static_cast<Elem>(rng() % 64);
    while (b == a) b = static_cast<Elem>(rng() % 64);
    run(f6, f64, a, b);
  }
  o.Require(seen.count(SpectrumKind::kBent) && seen.count(SpectrumKind::kSemiBent) &&
                seen.count(SpectrumKind::kMixed),
            "not all three outcomes observed");
  if (o.pass) o.detail = Str(cases) + " pairs, all three classes observed";
  return o;
}

// A random bent function of one of several shapes together with a defining
// set for its dual found by search.
struct TangInstance {
  BooleanFunction g;
  DefiningSet u;
};

BooleanFunction RandomBent(const FieldSpec& field, std::mt19937_64& rng) {
  const int n = field.n();
  const int k = n / 2;
  BooleanFunction g(n);
  const auto lambdas = NonzeroSubfield(field, k);
  const Elem lambda = lambdas[rng() % lambdas.size()];
  if (n == 6 && rng() % 2 == 0) {
    g = Component(NihoBase(field, 2), {lambda, 0}, field);
  } else {
    g = Component(KasamiBase(field), {lambda, 0}, field);
  }
  // Affine-equivalent variants keep bentness.
  const Elem delta = 1 + static_cast<Elem>(rng() % (field.size() - 1));
  g = g.Scaled(field, delta) ^ LinearTrace(static_cast<Elem>(rng() % field.size()), field);
  if (rng() % 2) g = ~g;
  return g;
}

Outcome TangDuals() {
  Outcome o;
  std::mt19937_64 rng(77);
  int done = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = i < 25 ? 4 : 6;
    const FieldSpec field = FieldSpec::Standard(n);
    const BooleanFunction g = RandomBent(field, rng);
    const BooleanFunction gd = Dual(g, field);
    const int tau = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2));
    DefiningSet u;
    if (tau == 1) {
      u = DefiningSet({1 + static_cast<Elem>(rng() % (field.size() - 1))});
    } else {
      const SearchResult found = FindDefiningSets(gd, tau);
      if (found.sets.empty()) {
        o.Require(false, "no defining set for a bent dual at n=" + Str(n));
        continue;
      }
      u = found.sets[rng() % found.sets.size()];
    }
    const ReducedPolynomial poly = RandomReducedPolynomial(tau, tau, rng());
    const BooleanFunction f = g ^ ComposeTraces(poly, u, field);
    const oracle::Table fd = oracle::Dual(ToTable(f), field.modulus(), n);
    const std::string tag = "n=" + Str(n) + " U=" + u.ToString() + " F=" + poly.ToString();
    o.Require(!fd.empty(), tag + " f not bent");
    if (fd.empty()) continue;
    std::vector<BooleanFunction> derivs;
    for (Elem e : u.elements()) derivs.push_back(Derivative(gd, e));
    const BooleanFunction expected = gd ^ ComposeFunctions(poly.WithArity(tau), derivs);
    o.Require(ToTable(expected) == fd, tag + " dual formula");
    const SecondaryResult lib = TangBent(g, u, poly, field);
    o.Require(lib.ok(), tag + " library report");
    ++done;
  }
  if (o.pass) o.detail = Str(done) + " instances";
  return o;
}

bool OracleP(const BooleanFunction& g, const DefiningSet& u) {
  const oracle::Table t = ToTable(g);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      for (std::uint8_t v : oracle::SecondDerivative(t, u[i], u[j])) {
        if (v) return false;
      }
    }
  }
  return true;
}

Outcome PropertyLemmas() {
  Outcome o;
  std::mt19937_64 rng(4242);
  int satisfied = 0, violated = 0, shifts = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = i % 2 == 0 ? 4 : 6;
    const FieldSpec field = FieldSpec::Standard(n);
    BooleanFunction g(n);
    switch (rng() % 3) {
      case 0:
        g = RandomBent(field, rng);
        break;
      case 1: {
        std::vector<Elem> basis;
        for (int b = 0; b < n; ++b) basis.push_back(Elem{1} << b);
        g = ComposeTraces(RandomReducedPolynomial(n, 2, rng()), DefiningSet(basis), field);
        break;
      }
      default:
        g = FromTable(n, oracle::RandomTable(n, rng));
    }
    const int tau = 2 + static_cast<int>(rng() % 2);
    DefiningSet u;
    const SearchResult found =
        rng() % 2 ? FindDefiningSets(g, tau) : SearchResult{};
    if (!found.sets.empty()) {
      u = found.sets[rng() % found.sets.size()];
    } else {
      std::vector<Elem> elems;
      while (static_cast<int>(elems.size()) < tau) {
        const Elem e = 1 + static_cast<Elem>(rng() % (field.size() - 1));
        if (std::find(elems.begin(), elems.end(), e) == elems.end()) elems.push_back(e);
      }
      u = DefiningSet(elems);
    }
    const bool p = SatisfiesP(g, u).holds;
    const std::string tag = "n=" + Str(n) + " U=" + u.ToString();
    o.Require(p == OracleP(g, u), tag + " property disagrees with oracle");
    o.Require(ShiftDecomposition(g, u).holds == p, tag + " shift decomposition");
    if (!p) {
      ++violated;
      continue;
    }
    ++satisfied;
    // Closure over the span, checked pair by pair here.
    const std::vector<Elem> span = u.Span();
    for (Elem a : span) {
      for (Elem b : span) {
        o.Require(SecondDerivative(g, a, b).is_zero(), tag + " closure a=" + Str(a));
      }
    }
    o.Require(SpanClosure(g, u), tag + " library closure");
    for (Elem b : span) {
      const BooleanFunction h = g & g.Shifted(b);
      o.Require(OracleP(h, u), tag + " product shift b=" + Str(b));
      o.Require(ProductShift(g, u, b) == h, tag + " library product shift");
      ++shifts;
    }
  }
  o.Require(satisfied > 0 && violated > 0, "instances did not mix both outcomes");
  if (o.pass) {
    o.detail = Str(satisfied) + " satisfying, " + Str(violated) + " violating, " + Str(shifts) +
               " product shifts";
  }
  return o;
}

Outcome BentComponents() {
  Outcome o;
  std::mt19937_64 rng(99);
  int count = 0;
  for (int n : {4, 6, 8}) {
    const int k = n / 2;
    for (int t : {1, 2}) {
      FamilyRequest req;
      req.n = n;
      req.t = t;
      for (int i = 0; i < t; ++i) req.polys.push_back(RandomReducedPolynomial(k, k, rng()));
      const Construction c = BuildFamily(req);
      const std::string tag = "n=" + Str(n) + " t=" + Str(t);
      o.Require(c.report.verified(), tag + " " + ReportFailure(c.report));
      std::uint64_t bent = 0;
      for (const Selector& s : Selectors(c.function, c.field)) {
        const bool is_bent = Walsh(Component(c.function, s, c.field), c.field)
                                 .classification()
                                 .is_bent();
        o.Require(is_bent == (s.lambda != 0), tag + " selector " + s.ToString());
        bent += is_bent;
      }
      const std::uint64_t predicted = (std::uint64_t{1} << (t + k)) - (std::uint64_t{1} << t);
      o.Require(bent == predicted, tag + " count " + Str(bent));
      o.Require(BentComponentCount(c.function, c.field) == bent, tag + " library count");
      o.Require(MaxBentComponentsBound(n, k + t) == bent, tag + " bound");
      ++count;
    }
  }
  if (o.pass) o.detail = Str(count) + " augmented functions";
  return o;
}

Outcome AugmentedIff() {
  Outcome o;
  std::mt19937_64 rng(5150);
  int plateaued = 0, not_plateaued = 0, attempts = 0;
  // Tails built from at most quadratic F are plateaued; cubic terms at
  // n = 6 break it. Two traces at n = 4 can only give plateaued tails.
  while ((plateaued < 20 || not_plateaued < 20) && attempts < 2000) {
    ++attempts;
    const bool want_flat = plateaued < 20 && (not_plateaued >= 20 || attempts % 2 == 0);
    const int n = want_flat ? (attempts % 4 == 0 ? 6 : 4) : 6;
    const int k = n / 2;
    FamilyRequest req;
    req.n = n;
    req.t = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < req.t; ++i) {
      ReducedPolynomial p = RandomReducedPolynomial(k, want_flat ? 2 : k, rng());
      if (!want_flat && i == 0) p = p + ReducedPolynomial::Parse("X1*X2*X3");
      req.polys.push_back(p);
    }
    const Construction c = BuildFamily(req);
    const bool whole = IsVectorialPlateaued(c.function, c.field).holds;
    const bool tail = IsVectorialPlateaued(c.function.Tail(c.field), c.field).holds;
    o.Require(whole == tail, "n=" + Str(n) + " F1=" + req.polys[0].ToString());
    o.Require(c.report.verified(), ReportFailure(c.report));
    if (tail && plateaued < 20) ++plateaued;
    if (!tail && not_plateaued < 20) ++not_plateaued;
  }
  o.Require(plateaued == 20 && not_plateaued == 20,
            "only " + Str(plateaued) + "/" + Str(not_plateaued) + " instances");
  if (o.pass) o.detail = "20 plateaued and 20 non-plateaued tails";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace vbent

int main() {
  using namespace vbent;
  SetSpectrumAudit(true);
  ResetSpectrumAudit();

  const Criterion criteria[] = {
      {"fast Walsh transform equals the naive sum", FastWalsh},
      {"Kasami lifts are vectorial bent with degree d", KasamiFamily},
      {"Kasami component duals in closed form", KasamiDuals},
      {"Niho family, lifts and scaled duals", NihoFamily},
      {"Gold-like family, omega, self-dual G_lambda0, duals", GoldFamily},
      {"bent / semi-bent / three-valued trichotomy", Trichotomy},
      {"dual of g + F(traces)", TangDuals},
      {"shift decomposition, span closure, product shift", PropertyLemmas},
      {"bent component count of augmented Kasami", BentComponents},
      {"augmented function plateaued iff tail plateaued", AugmentedIff},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }

  const SpectrumAuditCounts audit = SpectrumAudit();
  const bool audit_ok =
      audit.spectra > 0 && audit.parseval_failures == 0 && audit.roundtrip_failures == 0;
  std::printf("%s 11 Parseval and round-trip on every spectrum: %llu spectra, %llu Parseval "
              "failures, %llu round-trip failures\n",
              audit_ok ? "PASS" : "FAIL", static_cast<unsigned long long>(audit.spectra),
              static_cast<unsigned long long>(audit.parseval_failures),
              static_cast<unsigned long long>(audit.roundtrip_failures));
  failed += !audit_ok;
  return failed == 0 ? 0 : 1;
}
