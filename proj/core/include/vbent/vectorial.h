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

#ifndef VBENT_VECTORIAL_H_
#define VBENT_VECTORIAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vbent/boolfun.h"
#include "vbent/gf2n.h"

namespace vbent {

// An (n, m + t)-function x -> (F(x), f_1(x), ..., f_t(x)) where F takes
// values in the subfield GF(2^m) of GF(2^n) and the f_i are Boolean.
//
// m == 0 means there is no field part (a pure tuple of Boolean functions);
// t == 0 is the plain (n, m)-function. Outputs are stored as the subfield
// element (in the ambient polynomial basis) plus a t-bit word whose bit i-1
// is f_i(x).
class VectorialFunction {
 public:
  static constexpr int kMaxExtraBits = 16;

  // Throws InvalidArgument unless m | n (or m == 0) and every value lies in
  // GF(2^m).
  VectorialFunction(const FieldSpec& field, int m, std::vector<Elem> values,
                    int t = 0, std::vector<std::uint32_t> extra = {});

  int n() const { return n_; }
  int m() const { return m_; }
  int t() const { return t_; }
  int output_dimension() const { return m_ + t_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  Elem value(std::uint32_t x) const { return values_[x]; }
  std::uint32_t extra(std::uint32_t x) const { return t_ == 0 ? 0 : extra_[x]; }
  std::span<const Elem> values() const { return values_; }
  std::span<const std::uint32_t> extras() const { return extra_; }

  // The (n, t) tail x -> (f_1(x), ..., f_t(x)).
  VectorialFunction Tail(const FieldSpec& field) const;

  friend bool operator==(const VectorialFunction&, const VectorialFunction&) = default;

 private:
  int n_;
  int m_;
  int t_;
  std::vector<Elem> values_;
  std::vector<std::uint32_t> extra_;
};

// Component selector (lambda, v): lambda in GF(2^m), v a t-bit word.
struct Selector {
  Elem lambda = 0;
  std::uint32_t v = 0;

  std::string ToString() const;
  friend bool operator==(const Selector&, const Selector&) = default;
};

// Execution knobs for the exhaustive predicates. jobs > 1 spreads component
// spectra over threads; results do not depend on it.
struct VerifyOptions {
  unsigned jobs = 1;
};

// Every nonzero selector: lambda ascending, then v ascending.
std::vector<Selector> Selectors(const VectorialFunction& f, const FieldSpec& field);

// x -> Tr^m_1(lambda F(x)) + <v, (f_1(x), ..., f_t(x))>. Throws
// InvalidArgument for lambda outside GF(2^m), v wider than t, or the zero
// selector.
BooleanFunction Component(const VectorialFunction& f, Selector s, const FieldSpec& field);

// (n, m)-function x -> G(x) + g(x), where g is embedded through 1 in GF(2^m).
VectorialFunction AddBoolean(const VectorialFunction& g_vec, const BooleanFunction& g,
                             const FieldSpec& field);

// (G, f_1, ..., f_t). Throws InvalidArgument on arity mismatch or when G
// is already augmented.
VectorialFunction Augment(const VectorialFunction& g, std::span<const BooleanFunction> fs,
                          const FieldSpec& field);

struct ComponentSpectrumSummary {
  Selector selector;
  Classification classification;
};

struct BentVerdict {
  bool holds = false;
  // On failure: the first selector (enumeration order) whose component is
  // not bent and the least point where |W| != 2^(n/2).
  std::optional<Selector> witness;
  std::uint32_t point = 0;
  std::int32_t value = 0;
};

// Throws InvalidArgument for odd n.
BentVerdict IsVectorialBent(const VectorialFunction& f, const FieldSpec& field,
                            const VerifyOptions& options = {});

struct PlateauedVerdict {
  bool holds = false;
  // One entry per selector, in enumeration order.
  std::vector<ComponentSpectrumSummary> components;
  std::optional<Selector> witness;  // first non-plateaued component

  // Distinct amplitudes 2^s of the components, ascending.
  std::vector<std::int64_t> Amplitudes() const;
};

// Plateaued per component; amplitudes may differ between components.
PlateauedVerdict IsVectorialPlateaued(const VectorialFunction& f, const FieldSpec& field,
                                      const VerifyOptions& options = {});

// Throws InvalidArgument for odd n.
std::uint64_t BentComponentCount(const VectorialFunction& f, const FieldSpec& field,
                                 const VerifyOptions& options = {});

// 2^m - 2^(m - n/2). Throws InvalidArgument for odd n or m < n/2.
std::uint64_t MaxBentComponentsBound(int n, int m);

// Component functions on a basis: Tr^m_1(b_i F(x)) for the least-value
// basis b_i of GF(2^m), followed by f_1..f_t.
std::vector<BooleanFunction> Coordinates(const VectorialFunction& f, const FieldSpec& field);

// Largest coordinate degree.
int VectorialDegree(const VectorialFunction& f, const FieldSpec& field);
// Largest degree over every component; equals VectorialDegree.
int MaxComponentDegree(const VectorialFunction& f, const FieldSpec& field);

}  // namespace vbent

#endif  // VBENT_VECTORIAL_H_
