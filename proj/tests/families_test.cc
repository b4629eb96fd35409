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

#include "vbent/families.h"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.h"
#include "test_util.h"
#include "vbent/error.h"

namespace vbent {
namespace {

using testing::ToTable;

ReducedPolynomial P(std::string_view s, int arity = 0) { return ReducedPolynomial::Parse(s, arity); }

std::vector<Elem> NonzeroSubfield(const FieldSpec& field, int k) {
  std::vector<Elem> out;
  for (Elem e : field.subfield_elements(k)) {
    if (e != 0) out.push_back(e);
  }
  return out;
}

TEST(FamilyNameTest, RoundTrip) {
  for (Family f : {Family::kKasami, Family::kNiho, Family::kGold}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_FALSE(ParseFamily("bogus").has_value());
}

TEST(KasamiTest, ClosedFormDuals) {
  for (int n : {4, 6, 8}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const VectorialFunction g = KasamiBase(field);
    for (Elem lambda : NonzeroSubfield(field, n / 2)) {
      const BooleanFunction c = Component(g, {lambda, 0}, field);
      const BooleanFunction closed = KasamiDual(field, lambda);
      ASSERT_EQ(Dual(c, field), closed) << n << " " << lambda;
      if (n <= 6) ASSERT_EQ(ToTable(closed), oracle::Dual(ToTable(c), field.modulus(), n));
    }
  }
}

TEST(KasamiTest, DefiningSetCondition) {
  const FieldSpec field = FieldSpec::Standard(8);
  const auto u = KasamiAutoU(field, 4);
  ASSERT_EQ(u.size(), 4u);
  EXPECT_NO_THROW(CheckKasamiU(field, u));
  EXPECT_TRUE(LinearlyIndependent(u));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const Elem p = field.mul(u[i], field.frobenius(u[j], 4));
      EXPECT_TRUE(p != 0 && field.in_subfield(p, 4));
    }
  }
  try {
    CheckKasamiU(FieldSpec::Standard(4), {1, 2});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("u_1 u_2"), std::string::npos) << e.what();
  }
}

TEST(NihoTest, Exponents) {
  EXPECT_EQ(NihoExponents(6, 2), (std::vector<std::uint64_t>{22, 36, 50}));
  EXPECT_EQ(NihoScalingExponent(6, 2), 22u);
  EXPECT_EQ(std::gcd(NihoScalingExponent(6, 2), std::uint64_t{63}), 1u);
  for (const auto& [n, r] : {std::pair{10, 2}, std::pair{10, 3}}) {
    const auto e = NihoExponents(n, r);
    EXPECT_EQ(e.size(), (std::size_t{1} << r) - 1);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    EXPECT_EQ(std::gcd(NihoScalingExponent(n, r), mask), 1u);
  }
}

TEST(NihoTest, SubfieldValuedAndBent) {
  for (const auto& [n, r] : {std::pair{6, 2}, std::pair{10, 2}, std::pair{10, 3}}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const int k = n / 2;
    const VectorialFunction g = NihoBase(field, r);
    EXPECT_EQ(g.m(), k);
    for (Elem x = 0; x < field.size(); ++x) ASSERT_TRUE(field.in_subfield(g.value(x), k));
    EXPECT_TRUE(IsVectorialBent(g, field).holds) << n << " " << r;
  }
}

TEST(NihoTest, ClosedFormDuals) {
  for (const auto& [n, r] : {std::pair{6, 2}, std::pair{10, 2}, std::pair{10, 3}}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const int k = n / 2;
    const VectorialFunction g = NihoBase(field, r);
    const Elem u = NihoDualParameter(field);
    ASSERT_EQ(u ^ field.frobenius(u, k), 1u);
    const BooleanFunction one = NihoDualOne(field, r, u);
    // Any other solution of u + u^(2^k) = 1 gives the same function.
    EXPECT_EQ(NihoDualOne(field, r, u ^ 1), one);
    for (Elem lambda : NonzeroSubfield(field, k)) {
      const Elem delta = NihoDelta(field, r, lambda);
      ASSERT_TRUE(field.in_subfield(delta, k));
      ASSERT_EQ(field.pow(delta, NihoScalingExponent(n, r)), lambda);
      const BooleanFunction closed = one.Scaled(field, field.inverse(delta));
      ASSERT_EQ(Dual(Component(g, {lambda, 0}, field), field), closed) << n << " " << lambda;
    }
  }
}

TEST(NihoTest, AutoBasis) {
  const FieldSpec field = FieldSpec::Standard(6);
  const auto u = NihoAutoU(field, 3);
  EXPECT_EQ(u.size(), 3u);
  EXPECT_NO_THROW(CheckNihoU(field, u));
  EXPECT_THROW(CheckNihoU(field, {1, 2}), PreconditionError);  // 2 is not in GF(8)
  EXPECT_THROW(CheckNihoU(field, {u[0], u[1], u[0] ^ u[1]}), PreconditionError);
}

TEST(GoldTest, OmegaAndLambdaZero) {
  const FieldSpec field = FieldSpec::Standard(8);
  const Elem omega = GoldOmega(field);
  EXPECT_EQ(omega, field.pow(field.generator(), 51));
  EXPECT_EQ(MultiplicativeOrder(field, omega), 5u);
  const Elem l0 = GoldLambda0(field);
  EXPECT_EQ(field.mul(l0, omega ^ field.frobenius(omega, 2)), 1u);
  EXPECT_TRUE(field.in_subfield(l0, 2));
  EXPECT_EQ(field.subfield_trace(l0, 2), 1);
}

TEST(GoldTest, SelfDualAndClosedFormDuals) {
  for (int n : {8, 12}) {
    const FieldSpec field = FieldSpec::Standard(n);
    const int k = n / 4;
    const VectorialFunction g = GoldBase(field);
    EXPECT_EQ(g.m(), k);
    const BooleanFunction g0 = Component(g, {GoldLambda0(field), 0}, field);
    EXPECT_EQ(Dual(g0, field), g0);
    for (Elem lambda : NonzeroSubfield(field, k)) {
      const Elem delta = GoldDelta(field, lambda);
      ASSERT_TRUE(field.in_subfield(delta, k));
      ASSERT_EQ(field.mul(field.pow(delta, (1u << k) + 1), GoldLambda0(field)), lambda);
      ASSERT_EQ(Dual(Component(g, {lambda, 0}, field), field), GoldDual(field, lambda));
    }
    const auto u = GoldAutoU(field, k);
    EXPECT_NO_THROW(CheckGoldU(field, u));
  }
}

TEST(BuildFamilyTest, Kasami) {
  FamilyRequest req;
  req.family = Family::kKasami;
  req.n = 4;
  req.polys = {P("X1*X2")};
  const Construction c = BuildFamily(req);
  EXPECT_TRUE(c.report.verified());
  for (const auto& a : c.report.assertions) EXPECT_TRUE(a.passed) << a.name << ": " << a.detail;
  EXPECT_EQ(c.report.verified_class, "vectorial bent");
  EXPECT_EQ(c.report.measured_degree, 2);
  EXPECT_EQ(c.report.tau, 2);
  EXPECT_EQ(c.report.family, "kasami");

  req.n = 8;
  req.tau = 4;
  req.polys = {P("X1*X2*X3")};
  const Construction big = BuildFamily(req);
  EXPECT_TRUE(big.report.verified());
  EXPECT_EQ(big.report.measured_degree, 3);
  EXPECT_EQ(big.report.predicted_degree, 3);
}

TEST(BuildFamilyTest, KasamiAugmented) {
  for (int n : {4, 6, 8}) {
    for (int t : {1, 2}) {
      FamilyRequest req;
      req.n = n;
      req.t = t;
      for (int i = 0; i < t; ++i) req.polys.push_back(RandomReducedPolynomial(n / 2, 2, 10 + i));
      const Construction c = BuildFamily(req);
      EXPECT_TRUE(c.report.verified()) << n << " " << t;
      const std::uint64_t expected = ((1u << (n / 2)) - 1) << t;
      EXPECT_EQ(c.report.measured_bent_components, expected);
      EXPECT_EQ(BentComponentCount(c.function, c.field), expected);
      EXPECT_EQ(MaxBentComponentsBound(n, n / 2 + t), expected);
    }
  }
}

TEST(BuildFamilyTest, NihoAndGold) {
  FamilyRequest niho;
  niho.family = Family::kNiho;
  niho.n = 6;
  niho.r = 2;
  niho.polys = {P("X1*X2*X3+X2")};
  const Construction a = BuildFamily(niho);
  for (const auto& x : a.report.assertions) EXPECT_TRUE(x.passed) << x.name << ": " << x.detail;
  EXPECT_TRUE(IsVectorialBent(a.function, a.field).holds);

  FamilyRequest gold;
  gold.family = Family::kGold;
  gold.n = 8;
  gold.polys = {P("X1*X2")};
  const Construction b = BuildFamily(gold);
  for (const auto& x : b.report.assertions) EXPECT_TRUE(x.passed) << x.name << ": " << x.detail;
  EXPECT_EQ(b.function.m(), 2);
  EXPECT_EQ(b.report.measured_degree, 2);
}

TEST(BuildFamilyTest, ParameterRules) {
  FamilyRequest req;
  req.family = Family::kNiho;
  req.n = 8;
  req.r = 2;  // gcd(2, 4) = 2
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.n = 6;
  req.r = 3;  // r must be below k
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.family = Family::kKasami;
  req.n = 5;
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.family = Family::kGold;
  req.n = 6;
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.family = Family::kKasami;
  req.n = 4;
  req.u = std::vector<Elem>{1, 2};
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.u.reset();
  req.tau = 3;
  EXPECT_THROW(BuildFamily(req), PreconditionError);
  req.tau.reset();
  req.t = 2;
  req.polys = {P("X1")};
  EXPECT_THROW(BuildFamily(req), PreconditionError);
}

TEST(BuildFamilyTest, CustomModulus) {
  FamilyRequest req;
  req.n = 6;
  req.modulus = 0x61;  // x^6 + x^5 + 1
  req.polys = {P("X1*X2+X3")};
  const Construction c = BuildFamily(req);
  EXPECT_EQ(c.field.modulus(), 0x61u);
  EXPECT_TRUE(c.report.verified());
}

}  // namespace
}  // namespace vbent
