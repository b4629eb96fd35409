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

#include "vbent/vectorial.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "parallel.h"
#include "vbent/error.h"

namespace vbent {
namespace {

std::vector<Elem> FieldPart(int m, const FieldSpec& field) {
  if (m == 0) return {0};
  return field.subfield_elements(m);
}

void CheckEven(int n, const char* what) {
  if (n % 2 != 0) {
    throw InvalidArgument(std::string(what) + " needs an even number of variables, got " +
                          std::to_string(n));
  }
}

}  // namespace

VectorialFunction::VectorialFunction(const FieldSpec& field, int m, std::vector<Elem> values,
                                     int t, std::vector<std::uint32_t> extra)
    : n_(field.n()), m_(m), t_(t), values_(std::move(values)), extra_(std::move(extra)) {
  if (m < 0 || (m > 0 && n_ % m != 0)) {
    throw InvalidArgument("output subfield degree " + std::to_string(m) +
                          " does not divide " + std::to_string(n_));
  }
  if (t < 0 || t > kMaxExtraBits) {
    throw InvalidArgument("appended coordinate count out of range");
  }
  if (values_.size() != field.size()) {
    throw InvalidArgument("expected 2^n output values");
  }
  if (t == 0) {
    if (!extra_.empty() &&
        std::any_of(extra_.begin(), extra_.end(), [](auto e) { return e != 0; })) {
      throw InvalidArgument("appended bits given for t = 0");
    }
    extra_.clear();
  } else if (extra_.size() != field.size()) {
    throw InvalidArgument("expected 2^n appended bit words");
  }
  for (std::uint32_t x = 0; x < field.size(); ++x) {
    const Elem y = values_[x];
    if (m == 0 ? y != 0 : !field.contains(y) || !field.in_subfield(y, m)) {
      throw InvalidArgument("output at x=" + std::to_string(x) + " is not in GF(2^" +
                            std::to_string(m) + ")");
    }
    if (t > 0 && (extra_[x] >> t) != 0) {
      throw InvalidArgument("appended bits at x=" + std::to_string(x) + " exceed t");
    }
  }
}

VectorialFunction VectorialFunction::Tail(const FieldSpec& field) const {
  return VectorialFunction(field, 0, std::vector<Elem>(size(), 0), t_, extra_);
}

std::string Selector::ToString() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "(%x,%x)", static_cast<unsigned>(lambda),
                static_cast<unsigned>(v));
  return buf;
}

std::vector<Selector> Selectors(const VectorialFunction& f, const FieldSpec& field) {
  std::vector<Selector> out;
  for (Elem lambda : FieldPart(f.m(), field)) {
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << f.t()); ++v) {
      if (lambda == 0 && v == 0) continue;
      out.push_back({lambda, v});
    }
  }
  return out;
}

BooleanFunction Component(const VectorialFunction& f, Selector s, const FieldSpec& field) {
  if (f.n() != field.n()) throw InvalidArgument("function and field sizes differ");
  if (s.lambda == 0 && s.v == 0) throw InvalidArgument("zero selector");
  if ((s.v >> f.t()) != 0) throw InvalidArgument("selector v wider than t");
  std::uint32_t mask = 0;
  if (s.lambda != 0) {
    if (f.m() == 0 || !field.contains(s.lambda) || !field.in_subfield(s.lambda, f.m())) {
      throw InvalidArgument("selector lambda outside the output subfield");
    }
    mask = field.subfield_functional(s.lambda, f.m());
  }
  return BooleanFunction::Tabulate(f.n(), [&](std::uint32_t x) {
    return ((std::popcount(mask & f.value(x)) + std::popcount(s.v & f.extra(x))) & 1) != 0;
  });
}

VectorialFunction AddBoolean(const VectorialFunction& g_vec, const BooleanFunction& g,
                             const FieldSpec& field) {
  if (g.n() != g_vec.n()) throw InvalidArgument("arity mismatch in G + g");
  if (g_vec.m() == 0) throw InvalidArgument("G + g needs a field part");
  std::vector<Elem> values(g_vec.values().begin(), g_vec.values().end());
  for (std::uint32_t x = 0; x < g_vec.size(); ++x) values[x] ^= g(x) ? 1u : 0u;
  return VectorialFunction(field, g_vec.m(), std::move(values), g_vec.t(),
                           std::vector<std::uint32_t>(g_vec.extras().begin(),
                                                      g_vec.extras().end()));
}

VectorialFunction Augment(const VectorialFunction& g, std::span<const BooleanFunction> fs,
                          const FieldSpec& field) {
  if (g.t() != 0) throw InvalidArgument("function is already augmented");
  if (fs.empty()) return g;
  if (fs.size() > static_cast<std::size_t>(VectorialFunction::kMaxExtraBits)) {
    throw InvalidArgument("too many appended coordinates");
  }
  std::vector<std::uint32_t> extra(g.size(), 0);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].n() != g.n()) {
      throw InvalidArgument("appended function " + std::to_string(i + 1) +
                            " has the wrong number of variables");
    }
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (fs[i](x)) extra[x] |= std::uint32_t{1} << i;
    }
  }
  return VectorialFunction(field, g.m(),
                           std::vector<Elem>(g.values().begin(), g.values().end()),
                           static_cast<int>(fs.size()), std::move(extra));
}

BentVerdict IsVectorialBent(const VectorialFunction& f, const FieldSpec& field,
                            const VerifyOptions& options) {
  CheckEven(f.n(), "vectorial bentness");
  const std::vector<Selector> selectors = Selectors(f, field);
  const std::int32_t root = std::int32_t{1} << (f.n() / 2);
  // bad[i] = first failing point + 1, or 0.
  std::vector<std::uint32_t> bad(selectors.size(), 0);
  std::vector<std::int32_t> bad_value(selectors.size(), 0);
  internal::ParallelFor(selectors.size(), options.jobs, [&](std::size_t i) {
    const WalshSpectrum w = Walsh(Component(f, selectors[i], field), field);
    for (std::uint32_t a = 0; a < w.values().size(); ++a) {
      if (std::abs(w[a]) != root) {
        bad[i] = a + 1;
        bad_value[i] = w[a];
        return;
      }
    }
  });
  BentVerdict verdict;
  verdict.holds = true;
  for (std::size_t i = 0; i < selectors.size(); ++i) {
    if (bad[i] != 0) {
      verdict.holds = false;
      verdict.witness = selectors[i];
      verdict.point = bad[i] - 1;
      verdict.value = bad_value[i];
      break;
    }
  }
  return verdict;
}

std::vector<std::int64_t> PlateauedVerdict::Amplitudes() const {
  std::set<std::int64_t> s;
  for (const auto& c : components) {
    if (c.classification.is_plateaued()) {
      s.insert(std::int64_t{1} << c.classification.amplitude_log2);
    }
  }
  return {s.begin(), s.end()};
}

PlateauedVerdict IsVectorialPlateaued(const VectorialFunction& f, const FieldSpec& field,
                                      const VerifyOptions& options) {
  PlateauedVerdict verdict;
  const std::vector<Selector> selectors = Selectors(f, field);
  verdict.components.resize(selectors.size());
  internal::ParallelFor(selectors.size(), options.jobs, [&](std::size_t i) {
    verdict.components[i] = {selectors[i],
                             Walsh(Component(f, selectors[i], field), field).classification()};
  });
  verdict.holds = true;
  for (const auto& c : verdict.components) {
    if (!c.classification.is_plateaued()) {
      verdict.holds = false;
      verdict.witness = c.selector;
      break;
    }
  }
  return verdict;
}

std::uint64_t BentComponentCount(const VectorialFunction& f, const FieldSpec& field,
                                 const VerifyOptions& options) {
  CheckEven(f.n(), "bent component counting");
  const std::vector<Selector> selectors = Selectors(f, field);
  std::vector<char> bent(selectors.size(), 0);
  internal::ParallelFor(selectors.size(), options.jobs, [&](std::size_t i) {
    bent[i] = Walsh(Component(f, selectors[i], field), field).classification().is_bent();
  });
  return static_cast<std::uint64_t>(std::count(bent.begin(), bent.end(), 1));
}

std::uint64_t MaxBentComponentsBound(int n, int m) {
  CheckEven(n, "the bent component bound");
  if (m < n / 2) {
    throw InvalidArgument("bound needs m >= n/2, got m=" + std::to_string(m));
  }
  if (m > 63) throw InvalidArgument("output dimension too large");
  return (std::uint64_t{1} << m) - (std::uint64_t{1} << (m - n / 2));
}

std::vector<BooleanFunction> Coordinates(const VectorialFunction& f, const FieldSpec& field) {
  std::vector<BooleanFunction> out;
  if (f.m() > 0) {
    const std::vector<Elem> elems = field.subfield_elements(f.m());
    const std::vector<Elem> basis = GreedyBasis(std::span(elems).subspan(1));
    for (Elem b : basis) out.push_back(Component(f, {b, 0}, field));
  }
  for (int i = 0; i < f.t(); ++i) {
    out.push_back(Component(f, {0, std::uint32_t{1} << i}, field));
  }
  return out;
}

int VectorialDegree(const VectorialFunction& f, const FieldSpec& field) {
  int d = 0;
  for (const auto& c : Coordinates(f, field)) d = std::max(d, AlgebraicDegree(c));
  return d;
}

int MaxComponentDegree(const VectorialFunction& f, const FieldSpec& field) {
  int d = 0;
  for (const Selector& s : Selectors(f, field)) {
    d = std::max(d, AlgebraicDegree(Component(f, s, field)));
  }
  return d;
}

}  // namespace vbent
