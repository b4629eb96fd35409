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

#ifndef VBENT_FAMILIES_H_
#define VBENT_FAMILIES_H_

// The Kasami, Niho and Gold-like vectorial bent (n, k)-functions together
// with closed-form duals of their components.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vbent/constructions.h"
#include "vbent/gf2n.h"
#include "vbent/redpoly.h"
#include "vbent/vectorial.h"

namespace vbent {

enum class Family { kKasami, kNiho, kGold };

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

// Kasami: n = 2k, G(x) = x^(2^k+1) as an (n, k)-function.
VectorialFunction KasamiBase(const FieldSpec& field);
// Tr^k_1(lambda^-1 x^(2^k+1)) + 1.
BooleanFunction KasamiDual(const FieldSpec& field, Elem lambda);
// u_i = rho_i v for the least-value basis rho of GF(2^k) and the least
// v != 1 with v^(2^k+1) = 1.
std::vector<Elem> KasamiAutoU(const FieldSpec& field, int tau);
// Throws PreconditionError unless u_i u_j^(2^k) is a nonzero element of
// GF(2^k) for all i < j.
void CheckKasamiU(const FieldSpec& field, const std::vector<Elem>& u);

// Niho: n = 2k, 1 < r < k, gcd(r, k) = 1.
std::vector<std::uint64_t> NihoExponents(int n, int r);
// Sum of x^d over NihoExponents. Throws VerificationError if a value falls
// outside GF(2^k).
VectorialFunction NihoBase(const FieldSpec& field, int r);
// (2^k - 1)(t 2^(k-r) + 1) + 1 with t = 2^(r-1) - 1.
std::uint64_t NihoScalingExponent(int n, int r);
// Least u with u + u^(2^k) = 1.
Elem NihoDualParameter(const FieldSpec& field);
// Dual of Tr^k_1(G(x)) in closed form, evaluated with parameter u.
BooleanFunction NihoDualOne(const FieldSpec& field, int r, Elem u);
// delta with delta^(d_t) = lambda. Throws PreconditionError when d_t is not
// invertible modulo 2^n - 1.
Elem NihoDelta(const FieldSpec& field, int r, Elem lambda);
std::vector<Elem> NihoAutoU(const FieldSpec& field, int tau);
void CheckNihoU(const FieldSpec& field, const std::vector<Elem>& u);

// Gold-like: n = 4k, k >= 2, G(x) = Tr^n_k(omega x^(2^k+1)) with
// omega = g^((2^k - 1)(2^(2k) + 1)) for the field generator g.
Elem GoldOmega(const FieldSpec& field);
// (omega + omega^(2^k))^-1.
Elem GoldLambda0(const FieldSpec& field);
VectorialFunction GoldBase(const FieldSpec& field);
// delta in GF(2^k)* with delta^(2^k+1) = lambda / lambda0.
Elem GoldDelta(const FieldSpec& field, Elem lambda);
// G_lambda0(delta^-1 x).
BooleanFunction GoldDual(const FieldSpec& field, Elem lambda);
// u_i = v_i s for the least-value basis v of GF(2^k) and the least s != 1
// on the unit circle of GF(2^(2k)).
std::vector<Elem> GoldAutoU(const FieldSpec& field, int tau);
void CheckGoldU(const FieldSpec& field, const std::vector<Elem>& u);

struct FamilyRequest {
  Family family = Family::kKasami;
  int n = 0;
  int r = 0;                   // Niho only
  std::optional<int> tau;      // defaults to k, or |u| when u is given
  int t = 0;                   // appended coordinates
  // t = 0: at most one polynomial (none means F = 0). t >= 1: exactly t.
  std::vector<ReducedPolynomial> polys;
  std::optional<std::vector<Elem>> u;  // automatic choice when absent
  std::optional<std::uint64_t> modulus;
  std::optional<std::uint64_t> seed;  // recorded in the report only
};

struct Construction {
  FieldSpec field;
  VectorialFunction function;
  ConstructionReport report;
};

// Validates parameters (PreconditionError), builds G, lifts it and verifies
// every claim exhaustively. Verification failures land in the report.
Construction BuildFamily(const FamilyRequest& request, const VerifyOptions& options = {});

}  // namespace vbent

#endif  // VBENT_FAMILIES_H_
