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

#ifndef VBENT_CONSTRUCTIONS_H_
#define VBENT_CONSTRUCTIONS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vbent/boolfun.h"
#include "vbent/gf2n.h"
#include "vbent/redpoly.h"
#include "vbent/vectorial.h"

namespace vbent {

// Outcome of a Boolean bent construction: what the dual-based criterion
// predicts next to what the spectrum says.
struct SecondaryResult {
  BooleanFunction function;
  Classification predicted;
  Classification verified;
  std::optional<BooleanFunction> predicted_dual;  // set when predicted bent
  std::optional<BooleanFunction> verified_dual;   // set when verified bent

  bool class_match() const { return predicted == verified; }
  bool dual_match() const {
    return !predicted_dual || (verified_dual && *predicted_dual == *verified_dual);
  }
  bool ok() const { return class_match() && dual_match(); }
};

// sigma = f1 f2 + f1 f3 + f2 f3 for pairwise distinct bent f1, f2, f3 with
// f4 = f1 + f2 + f3 bent. The class follows from s = f1* + f2* + f3* + f4*:
// s = 0 gives bent with dual f1* f2* + f1* f3* + f2* f3*, s = 1 semi-bent,
// anything else three amplitudes {0, 2^(n/2), 2^(n/2+1)}.
SecondaryResult SigmaCombine(const BooleanFunction& f1, const BooleanFunction& f2,
                             const BooleanFunction& f3, const FieldSpec& field);

// h = f + Tr(ax) Tr(bx), classified by D_a D_b f*.
SecondaryResult BentPlusQuadraticTrace(const BooleanFunction& f, Elem a, Elem b,
                                       const FieldSpec& field);

// sigma = f + Tr(ax) Tr(bx) Tr(cx) when the three second derivatives of f*
// along pairs of {a, b, c} vanish. Dual f* + D_a f* D_b f* D_c f*.
SecondaryResult BentPlusCubicTrace(const BooleanFunction& f, Elem a, Elem b, Elem c,
                                   const FieldSpec& field);

// f = g + F(Tr(u_1 x), ..., Tr(u_tau x)) for bent g whose dual has the
// pairwise property on u. Dual g* + F(D_{u_1} g*, ..., D_{u_tau} g*).
SecondaryResult TangBent(const BooleanFunction& g, const DefiningSet& u,
                         const ReducedPolynomial& poly, const FieldSpec& field);

// Three-direction case of TangBent. The directions may be dependent, so tau
// is not capped at n/2.
SecondaryResult RemarkMultiTrace(const BooleanFunction& f, Elem a, Elem b, Elem c,
                                 const ReducedPolynomial& poly, const FieldSpec& field);

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ComponentRecord {
  Selector selector;
  Classification classification;
  bool predicted_bent = false;
  std::optional<bool> dual_match;  // set when a dual was predicted
};

struct ConstructionReport {
  std::string family = "generic";
  std::string field;
  int n = 0;
  int m = 0;
  int k = 0;
  int r = 0;
  int tau = 0;
  int t = 0;
  std::vector<Elem> u;
  std::vector<std::string> polys;
  std::optional<std::uint64_t> seed;

  std::string predicted_class;
  std::string verified_class;
  std::optional<int> predicted_degree;
  int measured_degree = 0;
  std::optional<std::uint64_t> predicted_bent_components;
  std::uint64_t measured_bent_components = 0;
  std::optional<std::uint64_t> bent_bound;

  std::vector<ComponentRecord> components;
  std::vector<Assertion> assertions;

  bool verified() const;
  std::vector<Assertion> failures() const;
  void Check(std::string name, bool passed, std::string detail = {});
};

// Closed-form dual of the component G_lambda, when a family supplies one.
using DualFormula = std::function<BooleanFunction(Elem lambda)>;

struct LiftResult {
  VectorialFunction function;
  ConstructionReport report;
};

// H = G + F(Tr(u_1 x), ..., Tr(u_tau x)) with the Boolean part added on the
// element 1 of GF(2^m). Throws PreconditionError unless G is vectorial bent
// and the dual of every G_lambda with Tr(lambda) = 1 has the pairwise
// property on u.
LiftResult VecBentLift(const VectorialFunction& g, const DefiningSet& u,
                       const ReducedPolynomial& poly, const FieldSpec& field,
                       const VerifyOptions& options = {}, const DualFormula& dual = {});

// G augmented with f_i = F_i(Tr(u_1 x), ..., Tr(u_tau x)), i = 1..t. Same
// preconditions as VecBentLift.
LiftResult VecPlateauedLift(const VectorialFunction& g, const DefiningSet& u,
                            std::span<const ReducedPolynomial> polys, const FieldSpec& field,
                            const VerifyOptions& options = {}, const DualFormula& dual = {});

std::string VectorialClassName(bool bent, bool plateaued);

}  // namespace vbent

#endif  // VBENT_CONSTRUCTIONS_H_
