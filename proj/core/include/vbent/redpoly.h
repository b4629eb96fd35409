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

#ifndef VBENT_REDPOLY_H_
#define VBENT_REDPOLY_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vbent/boolfun.h"
#include "vbent/gf2n.h"

namespace vbent {

// A multilinear polynomial over F2 in X_1..X_tau. A monomial is a bit mask
// of its variables (bit i-1 for X_i; 0 is the constant term). Monomials are
// kept sorted and unique, so equal polynomials compare equal.
class ReducedPolynomial {
 public:
  static constexpr int kMaxArity = 24;

  // The zero polynomial in `arity` variables.
  explicit ReducedPolynomial(int arity = 0);
  // Monomials are reduced mod 2 (a repeated monomial cancels).
  ReducedPolynomial(int arity, std::vector<std::uint32_t> monomials);

  // Grammar: "0" | "1" | monomial ("+" monomial)*, monomial = factor
  // ("*" factor)*, factor = "1" | "X" digits. Whitespace is ignored and
  // X_i * X_i reduces to X_i. Arity is the largest index seen unless a
  // larger `arity` is given. Throws ParseError with the column.
  static ReducedPolynomial Parse(std::string_view text, int arity = 0);

  int arity() const { return arity_; }
  std::span<const std::uint32_t> monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  int degree() const;

  // Bit i of w is the value of X_(i+1). Throws InvalidArgument when w has
  // bits at or above arity.
  bool Evaluate(std::uint32_t w) const;
  // All 2^arity values as a Boolean function on `arity` variables.
  BooleanFunction TruthTable() const;

  // Same polynomial seen in more variables.
  ReducedPolynomial WithArity(int arity) const;

  std::string ToString() const;

  // Sum in F2[X]: symmetric difference of the monomial sets.
  friend ReducedPolynomial operator+(const ReducedPolynomial& a,
                                     const ReducedPolynomial& b);
  friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;

 private:
  int arity_;
  std::vector<std::uint32_t> monomials_;
};

// Ordered defining set u_1..u_tau of pairwise distinct field elements.
class DefiningSet {
 public:
  DefiningSet() = default;
  // Throws InvalidArgument on repeated elements.
  explicit DefiningSet(std::vector<Elem> elements);

  std::size_t size() const { return elements_.size(); }
  std::span<const Elem> elements() const { return elements_; }
  Elem operator[](std::size_t i) const { return elements_[i]; }
  bool linearly_independent() const { return LinearlyIndependent(elements_); }
  // The F2-span, indexed by weight vector.
  std::vector<Elem> Span() const { return SpanOf(elements_); }
  bool SpanContains(Elem b) const;

  std::string ToString() const;  // "{1a,2b,...}" in hex

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

 private:
  std::vector<Elem> elements_;
};

// x -> F(Tr^n_1(u_1 x), ..., Tr^n_1(u_tau x)). Throws InvalidArgument when
// F uses more variables than U has elements.
BooleanFunction ComposeTraces(const ReducedPolynomial& poly, const DefiningSet& u,
                              const FieldSpec& field);

// x -> F(g_1(x), ..., g_tau(x)) for Boolean functions g_i.
BooleanFunction ComposeFunctions(const ReducedPolynomial& poly,
                                 std::span<const BooleanFunction> inputs);

// Deterministic random polynomial: each monomial of degree <= max_degree is
// present with probability 1/2.
ReducedPolynomial RandomReducedPolynomial(int arity, int max_degree, std::uint64_t seed);

}  // namespace vbent

#endif  // VBENT_REDPOLY_H_
