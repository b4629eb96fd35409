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

#include "vbent/redpoly.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <random>

#include "vbent/error.h"

namespace vbent {
namespace {

void Canonicalize(std::vector<std::uint32_t>& monomials) {
  std::sort(monomials.begin(), monomials.end());
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(monomials[i]);
    i = j;
  }
  monomials = std::move(out);
}

void CheckArity(int arity) {
  if (arity < 0 || arity > ReducedPolynomial::kMaxArity) {
    throw InvalidArgument("polynomial arity " + std::to_string(arity) + " out of range");
  }
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<std::uint32_t> Run(int& max_index) {
    std::vector<std::uint32_t> monomials;
    SkipSpace();
    if (AtEnd()) Fail("empty polynomial");
    while (true) {
      bool zero = false;
      const std::uint32_t m = Monomial(max_index, zero);
      if (!zero) monomials.push_back(m);
      SkipSpace();
      if (AtEnd()) break;
      if (text_[pos_] != '+') Fail(std::string("expected '+' but found '") + text_[pos_] + "'");
      ++pos_;
      SkipSpace();
      if (AtEnd()) Fail("expected a monomial after '+'");
    }
    return monomials;
  }

 private:
  std::uint32_t Monomial(int& max_index, bool& zero) {
    std::uint32_t mask = 0;
    while (true) {
      SkipSpace();
      if (AtEnd()) Fail("expected a factor");
      const char c = text_[pos_];
      if (c == '0' || c == '1') {
        ++pos_;
        if (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Fail("constants other than 0 and 1 are not allowed");
        }
        if (c == '0') zero = true;
      } else if (c == 'X' || c == 'x') {
        const std::size_t start = pos_;
        ++pos_;
        if (AtEnd() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Fail("expected a variable index after 'X'");
        }
        long index = 0;
        while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + (text_[pos_] - '0');
          if (index > ReducedPolynomial::kMaxArity) {
            pos_ = start;
            Fail("variable index exceeds " + std::to_string(ReducedPolynomial::kMaxArity));
          }
          ++pos_;
        }
        if (index == 0) {
          pos_ = start;
          Fail("variables are numbered from X1");
        }
        mask |= std::uint32_t{1} << (index - 1);
        max_index = std::max(max_index, static_cast<int>(index));
      } else {
        Fail(std::string("unexpected character '") + c + "'");
      }
      SkipSpace();
      if (AtEnd() || text_[pos_] != '*') return mask;
      ++pos_;
    }
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= text_.size(); }
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError("polynomial: " + message, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ReducedPolynomial::ReducedPolynomial(int arity) : arity_(arity) { CheckArity(arity); }

ReducedPolynomial::ReducedPolynomial(int arity, std::vector<std::uint32_t> monomials)
    : arity_(arity), monomials_(std::move(monomials)) {
  CheckArity(arity);
  for (std::uint32_t m : monomials_) {
    if (arity < 32 && (m >> arity) != 0) {
      throw InvalidArgument("monomial uses a variable beyond X" + std::to_string(arity));
    }
  }
  Canonicalize(monomials_);
}

ReducedPolynomial ReducedPolynomial::Parse(std::string_view text, int arity) {
  int max_index = 0;
  std::vector<std::uint32_t> monomials = PolyParser(text).Run(max_index);
  return ReducedPolynomial(std::max(arity, max_index), std::move(monomials));
}

int ReducedPolynomial::degree() const {
  int d = 0;
  for (std::uint32_t m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

bool ReducedPolynomial::Evaluate(std::uint32_t w) const {
  if (arity_ < 32 && (w >> arity_) != 0) {
    throw InvalidArgument("assignment has more than " + std::to_string(arity_) + " bits");
  }
  bool v = false;
  for (std::uint32_t m : monomials_) v ^= (w & m) == m;
  return v;
}

BooleanFunction ReducedPolynomial::TruthTable() const {
  // Inverse Moebius of the coefficient vector.
  BooleanFunction coefficients = BooleanFunction::Tabulate(arity_, [&](std::uint32_t u) {
    return std::binary_search(monomials_.begin(), monomials_.end(), u);
  });
  return AnfCoefficients(coefficients);
}

ReducedPolynomial ReducedPolynomial::WithArity(int arity) const {
  return ReducedPolynomial(arity, monomials_);
}

std::string ReducedPolynomial::ToString() const {
  if (monomials_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (i != 0) s += "+";
    const std::uint32_t m = monomials_[i];
    if (m == 0) {
      s += "1";
      continue;
    }
    bool first = true;
    for (int v = 0; v < 32; ++v) {
      if ((m >> v) & 1u) {
        if (!first) s += "*";
        s += "X" + std::to_string(v + 1);
        first = false;
      }
    }
  }
  return s;
}

ReducedPolynomial operator+(const ReducedPolynomial& a, const ReducedPolynomial& b) {
  std::vector<std::uint32_t> all(a.monomials_.begin(), a.monomials_.end());
  all.insert(all.end(), b.monomials_.begin(), b.monomials_.end());
  return ReducedPolynomial(std::max(a.arity_, b.arity_), std::move(all));
}

DefiningSet::DefiningSet(std::vector<Elem> elements) : elements_(std::move(elements)) {
  std::vector<Elem> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("defining set elements must be pairwise distinct");
  }
}

bool DefiningSet::SpanContains(Elem b) const {
  std::vector<Elem> extended = elements_;
  const int r = Rank(extended);
  extended.push_back(b);
  return Rank(extended) == r;
}

std::string DefiningSet::ToString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%s%x", i == 0 ? "" : ",",
                  static_cast<unsigned>(elements_[i]));
    s += buf;
  }
  return s + "}";
}

BooleanFunction ComposeTraces(const ReducedPolynomial& poly, const DefiningSet& u,
                              const FieldSpec& field) {
  if (static_cast<std::size_t>(poly.arity()) > u.size()) {
    throw InvalidArgument("polynomial in " + std::to_string(poly.arity()) +
                          " variables composed with " + std::to_string(u.size()) +
                          " traces");
  }
  if (u.size() == 0) return BooleanFunction::Constant(field.n(), !poly.is_zero());
  std::vector<BooleanFunction> traces;
  traces.reserve(u.size());
  for (Elem e : u.elements()) traces.push_back(LinearTrace(e, field));
  return ComposeFunctions(poly.WithArity(static_cast<int>(u.size())), traces);
}

BooleanFunction ComposeFunctions(const ReducedPolynomial& poly,
                                 std::span<const BooleanFunction> inputs) {
  if (inputs.empty()) {
    throw InvalidArgument("composition needs at least one input to fix the arity");
  }
  if (static_cast<std::size_t>(poly.arity()) > inputs.size()) {
    throw InvalidArgument("polynomial has more variables than inputs");
  }
  const int n = inputs[0].n();
  BooleanFunction out(n);
  for (std::uint32_t m : poly.monomials()) {
    BooleanFunction term = BooleanFunction::Constant(n, true);
    for (std::size_t v = 0; v < inputs.size(); ++v) {
      if ((m >> v) & 1u) term = term & inputs[v];
    }
    out = out ^ term;
  }
  return out;
}

ReducedPolynomial RandomReducedPolynomial(int arity, int max_degree, std::uint64_t seed) {
  CheckArity(arity);
  if (max_degree < 0 || max_degree > arity) {
    throw InvalidArgument("max degree must lie in [0, arity]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> monomials;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << arity); ++m) {
    if (std::popcount(m) > max_degree) continue;
    if (rng() & 1u) monomials.push_back(m);
  }
  return ReducedPolynomial(arity, std::move(monomials));
}

}  // namespace vbent
