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

#ifndef VBENT_BOOLFUN_H_
#define VBENT_BOOLFUN_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vbent/gf2n.h"

namespace vbent {

// An n-variable Boolean function stored as a packed truth table: bit v of
// the table is f(x) for the field element x with value v. Values are
// immutable; every operation returns a fresh function.
class BooleanFunction {
 public:
  // The all-zero function on n variables, 0 <= n <= 24.
  explicit BooleanFunction(int n);

  static BooleanFunction Constant(int n, bool value);
  // Table filled by evaluating `f` at every point, ascending.
  static BooleanFunction Tabulate(int n, const std::function<bool(std::uint32_t)>& f);
  // Takes ownership of packed words; bits at or above 2^n must be clear.
  static BooleanFunction FromWords(int n, std::vector<std::uint64_t> words);

  int n() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  bool operator()(std::uint32_t x) const {
    return (words_[x >> 6] >> (x & 63u)) & 1u;
  }
  std::span<const std::uint64_t> words() const { return words_; }

  std::uint64_t weight() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const { return is_zero() || is_one(); }

  // x -> f(x + a).
  BooleanFunction Shifted(std::uint32_t a) const;
  // x -> f(delta * x).
  BooleanFunction Scaled(const FieldSpec& field, Elem delta) const;

  BooleanFunction operator~() const;
  friend BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b);
  friend BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b);
  friend BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b);
  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Least point where the two functions differ, or size() if equal.
  std::uint32_t FirstDifference(const BooleanFunction& other) const;

 private:
  BooleanFunction(int n, std::vector<std::uint64_t> words)
      : n_(n), words_(std::move(words)) {}

  int n_;
  std::vector<std::uint64_t> words_;
};

// A monomial c * x^d of a univariate polynomial over GF(2^n).
struct Term {
  Elem coefficient;
  std::uint64_t exponent;
};

// x -> Tr^n_1(sum_i c_i x^(d_i)).
BooleanFunction FromUnivariate(std::span<const Term> terms, const FieldSpec& field);
// x -> Tr^n_1(a x).
BooleanFunction LinearTrace(Elem a, const FieldSpec& field);

// D_a f(x) = f(x) + f(x + a).
BooleanFunction Derivative(const BooleanFunction& f, std::uint32_t a);
// D_a D_b f(x) = f(x) + f(x + a) + f(x + b) + f(x + a + b).
BooleanFunction SecondDerivative(const BooleanFunction& f, std::uint32_t a,
                                 std::uint32_t b);

enum class SpectrumKind { kBent, kSemiBent, kPlateaued, kMixed };

// Shape of a Walsh spectrum. For kBent, kSemiBent and kPlateaued
// `amplitude_log2` is the s with every |W| in {0, 2^s}. `abs_values` always
// holds the distinct absolute values in ascending order.
struct Classification {
  SpectrumKind kind = SpectrumKind::kMixed;
  int amplitude_log2 = -1;
  std::vector<std::int64_t> abs_values;

  bool is_bent() const { return kind == SpectrumKind::kBent; }
  // Bent, semi-bent and general single-amplitude spectra.
  bool is_plateaued() const { return kind != SpectrumKind::kMixed; }
  // "Bent", "SemiBent", "Plateaued(s)" or "Mixed{v1,v2,...}".
  std::string ToString() const;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Classifies a spectrum of an n-variable function. Bent is tested first,
// then a single amplitude (named SemiBent when s = n/2 + 1 and n is even),
// otherwise Mixed.
Classification Classify(std::span<const std::int32_t> values, int n);

// The Mixed class with the given absolute-value set; handy for predictions.
Classification MixedClass(std::vector<std::int64_t> abs_values);
Classification BentClass(int n);
Classification SemiBentClass(int n);

// Integer Walsh spectrum W_f(a) = sum_x (-1)^(f(x) + Tr^n_1(a x)), indexed
// by the field element a.
class WalshSpectrum {
 public:
  WalshSpectrum(int n, std::vector<std::int32_t> values);

  int n() const { return n_; }
  std::span<const std::int32_t> values() const { return values_; }
  std::int32_t operator[](std::uint32_t a) const { return values_[a]; }
  const Classification& classification() const { return class_; }

  // sum_a W(a)^2, which must equal 2^(2n).
  std::int64_t SquareSum() const;

 private:
  int n_;
  std::vector<std::int32_t> values_;
  Classification class_;
};

// Fast transform: butterfly over the sign vector, then the linear change of
// index that turns the dot product into the trace form. O(n 2^n).
WalshSpectrum Walsh(const BooleanFunction& f, const FieldSpec& field);

// Recovers f from its spectrum; throws VerificationError if the spectrum is
// not the spectrum of a Boolean function.
BooleanFunction InverseWalsh(const WalshSpectrum& spectrum, const FieldSpec& field);

// f* with W_f(a) = 2^(n/2) (-1)^(f*(a)). Throws PreconditionError naming
// the first point where |W_f(a)| != 2^(n/2).
BooleanFunction Dual(const BooleanFunction& f, const FieldSpec& field);
BooleanFunction DualFromSpectrum(const WalshSpectrum& spectrum);

// Algebraic normal form via the binary Moebius transform: bit u of the
// result is the coefficient of prod_{j in u} x_j.
BooleanFunction AnfCoefficients(const BooleanFunction& f);
// Monomials with nonzero coefficient, ascending.
std::vector<std::uint32_t> AnfMonomials(const BooleanFunction& f);
// Largest monomial size; 0 for constants including the zero function.
int AlgebraicDegree(const BooleanFunction& f);

// Optional self-check run inside Walsh(): every spectrum is tested for
// Parseval and for round-tripping to the input table. Counters are global
// and thread-safe. Used by the acceptance suite.
struct SpectrumAuditCounts {
  std::uint64_t spectra = 0;
  std::uint64_t parseval_failures = 0;
  std::uint64_t roundtrip_failures = 0;
};
void SetSpectrumAudit(bool enabled);
bool SpectrumAuditEnabled();
SpectrumAuditCounts SpectrumAudit();
void ResetSpectrumAudit();

}  // namespace vbent

#endif  // VBENT_BOOLFUN_H_
