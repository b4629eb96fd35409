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

#ifndef VBENT_GF2N_H_
#define VBENT_GF2N_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vbent {

// An element of GF(2^n) in the polynomial basis {1, a, ..., a^(n-1)}:
// bit j holds the coefficient of a^j, where a is a root of the modulus.
using Elem = std::uint32_t;

inline constexpr int kMaxFieldDegree = 24;

// A concrete model of GF(2^n) for 1 <= n <= 24.
//
// The modulus is a primitive polynomial given as a bit mask including the
// leading x^n term. The generator is an element of multiplicative order
// 2^n - 1; for the built-in table it is always 2 (the class of x). The
// object is immutable and safe to share between threads.
class FieldSpec {
 public:
  // Field built from the embedded table of primitive polynomials.
  static FieldSpec Standard(int n);

  // Field built from a caller-supplied modulus. The generator is the least
  // element of full order; throws InvalidArgument when the modulus has the
  // wrong degree or is not irreducible.
  static FieldSpec WithModulus(int n, std::uint64_t modulus);

  // Parses "n:<int> modulus:<hex> generator:<hex>".
  static FieldSpec Parse(std::string_view text);

  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  // Number of elements, 2^n.
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  // Order of the multiplicative group, 2^n - 1.
  std::uint32_t group_order() const { return size() - 1; }
  bool contains(Elem a) const { return a < size(); }

  Elem mul(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  // a^e with pow(0, 0) == 1. For a != 0 the exponent is reduced modulo
  // 2^n - 1 first.
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws InvalidArgument for a == 0.
  Elem inverse(Elem a) const;
  // a^(2^i).
  Elem frobenius(Elem a, int i) const;

  // Relative trace Tr^n_m(a) = sum_{i < n/m} a^(2^(i m)). Throws
  // InvalidArgument unless m divides n.
  Elem trace(Elem a, int m) const;
  // Absolute trace Tr^n_1(a) in {0, 1}; one AND plus a parity.
  int abs_trace(Elem a) const;
  // Tr^m_1(a) for a lying in the subfield GF(2^m). Throws InvalidArgument
  // when m does not divide n or a is outside the subfield.
  int subfield_trace(Elem a, int m) const;
  // Bit mask M such that Tr^m_1(lambda * y) == parity(M & y) for every y in
  // GF(2^m). lambda must lie in GF(2^m).
  std::uint32_t subfield_functional(Elem lambda, int m) const;
  // Bit mask M such that Tr^n_1(a * x) == parity(M & x) for every x.
  std::uint32_t trace_functional(Elem a) const;

  bool in_subfield(Elem a, int m) const;
  // The 2^m solutions of x^(2^m) = x in ascending order.
  std::vector<Elem> subfield_elements(int m) const;
  // Elements with x^(2^(n/2) + 1) = 1, ascending. Requires even n.
  std::vector<Elem> unit_circle() const;
  // Unit circle of the subfield GF(2^d) embedded in this field: elements of
  // GF(2^d) with x^(2^(d/2) + 1) = 1. Requires d even and d | n.
  std::vector<Elem> unit_circle(int d) const;

  // "n:<int> modulus:<hex> generator:<hex>"
  std::string ToString() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ &&
           a.generator_ == b.generator_;
  }

 private:
  FieldSpec(int n, std::uint32_t modulus, Elem generator);

  int n_;
  std::uint32_t modulus_;
  Elem generator_;
  std::uint32_t trace_mask_;  // bit j = Tr(a^j)
};

// Primitive polynomial used by FieldSpec::Standard(n).
std::uint32_t StandardModulus(int n);

// Multiplicative order of a nonzero element.
std::uint64_t MultiplicativeOrder(const FieldSpec& field, Elem a);

// Distinct prime factors of v, ascending.
std::vector<std::uint64_t> PrimeFactors(std::uint64_t v);

// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
std::uint64_t ModInverse(std::uint64_t a, std::uint64_t m);

// F2-rank of a set of bit vectors.
int Rank(std::span<const Elem> vectors);
bool LinearlyIndependent(std::span<const Elem> vectors);

// Greedy basis of the F2-span of `pool`: scans in the given order and keeps
// every element independent of those already kept. With an ascending pool
// this is the least-value basis.
std::vector<Elem> GreedyBasis(std::span<const Elem> pool);

// All 2^k F2-combinations of `generators`, indexed by the weight vector w
// (bit i of w selects generators[i]).
std::vector<Elem> SpanOf(std::span<const Elem> generators);

}  // namespace vbent

#endif  // VBENT_GF2N_H_
