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

#include "vbent/propp.h"

#include <algorithm>
#include <bit>
#include <string>

#include "vbent/error.h"

namespace vbent {
namespace {

void CheckElements(const BooleanFunction& g, const DefiningSet& u) {
  for (Elem e : u.elements()) {
    if (e >= g.size()) {
      throw InvalidArgument("defining set element " + std::to_string(e) +
                            " outside a " + std::to_string(g.n()) + "-variable domain");
    }
  }
}

}  // namespace

PropertyCheck SatisfiesP(const BooleanFunction& g, const DefiningSet& u) {
  CheckElements(g, u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BooleanFunction di = Derivative(g, u[i]);
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const BooleanFunction d = Derivative(di, u[j]);
      if (!d.is_zero()) {
        return {false, PairWitness{i, j, d.FirstDifference(BooleanFunction(g.n()))}};
      }
    }
  }
  return {true, std::nullopt};
}

bool SpanClosure(const BooleanFunction& g, const DefiningSet& u) {
  if (!SatisfiesP(g, u).holds) {
    throw PreconditionError("span closure needs the pairwise property for " + u.ToString());
  }
  const std::vector<Elem> span = u.Span();
  // Distinct span elements are enough; D_a D_a g and D_0 vanish anyway.
  std::vector<Elem> points(span.begin(), span.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const BooleanFunction di = Derivative(g, points[i]);
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!Derivative(di, points[j]).is_zero()) return false;
    }
  }
  return true;
}

ShiftCheck ShiftDecomposition(const BooleanFunction& g, const DefiningSet& u) {
  CheckElements(g, u);
  if (u.size() > 24) throw InvalidArgument("defining set too large");
  std::vector<BooleanFunction> derivs;
  for (Elem e : u.elements()) derivs.push_back(Derivative(g, e));
  const std::uint32_t count = std::uint32_t{1} << u.size();
  for (std::uint32_t w = 0; w < count; ++w) {
    Elem shift = 0;
    BooleanFunction rhs = g;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if ((w >> i) & 1u) {
        shift ^= u[i];
        rhs = rhs ^ derivs[i];
      }
    }
    const BooleanFunction lhs = g.Shifted(shift);
    if (!(lhs == rhs)) return {false, w, lhs.FirstDifference(rhs)};
  }
  return {true, std::nullopt, 0};
}

BooleanFunction ProductShift(const BooleanFunction& g, const DefiningSet& u, Elem b) {
  const PropertyCheck pre = SatisfiesP(g, u);
  if (!pre.holds) {
    throw PreconditionError("product shift needs the pairwise property; fails for u_" +
                            std::to_string(pre.failure->i + 1) + ", u_" +
                            std::to_string(pre.failure->j + 1));
  }
  if (!u.SpanContains(b)) {
    throw PreconditionError("shift " + std::to_string(b) + " is not in span" + u.ToString());
  }
  BooleanFunction h = g & g.Shifted(b);
  if (!SatisfiesP(h, u).holds) {
    throw VerificationError("g(x)g(x+b) lost the pairwise property");
  }
  return h;
}

SearchResult FindDefiningSets(const BooleanFunction& g, int tau, const SearchOptions& options) {
  if (tau < 2) throw InvalidArgument("defining set search needs tau >= 2");
  std::vector<Elem> pool = options.candidates;
  if (pool.empty()) {
    for (Elem e = 1; e < g.size(); ++e) pool.push_back(e);
  } else {
    for (Elem e : pool) {
      if (e >= g.size()) throw InvalidArgument("candidate outside the domain");
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  const std::size_t count = pool.size();
  const std::size_t row_words = (count + 63) / 64;
  std::vector<std::uint64_t> adjacent(count * row_words, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const BooleanFunction di = Derivative(g, pool[i]);
    for (std::size_t j = i + 1; j < count; ++j) {
      if (Derivative(di, pool[j]).is_zero()) {
        adjacent[i * row_words + j / 64] |= std::uint64_t{1} << (j % 64);
        adjacent[j * row_words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  SearchResult result;
  std::vector<std::size_t> clique;
  bool stop = false;
  // allowed: vertices after the last pick that are adjacent to every pick.
  auto extend = [&](auto&& self, const std::vector<std::uint64_t>& allowed) -> void {
    if (stop) return;
    if (clique.size() == static_cast<std::size_t>(tau)) {
      ++result.total_found;
      if (options.limit == 0 || result.sets.size() < options.limit) {
        std::vector<Elem> elems;
        for (std::size_t v : clique) elems.push_back(pool[v]);
        result.sets.emplace_back(std::move(elems));
      } else {
        result.truncated = true;
      }
      return;
    }
    const std::size_t need = static_cast<std::size_t>(tau) - clique.size();
    for (std::size_t w = 0; w < row_words; ++w) {
      std::uint64_t bits = allowed[w];
      while (bits != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (count - v < need) return;
        if (options.node_budget != 0 && result.nodes >= options.node_budget) {
          result.budget_exhausted = true;
          stop = true;
          return;
        }
        ++result.nodes;
        std::vector<std::uint64_t> next(row_words, 0);
        for (std::size_t k = 0; k < row_words; ++k) {
          next[k] = allowed[k] & adjacent[v * row_words + k];
        }
        // Keep only vertices after v.
        for (std::size_t k = 0; k <= v / 64; ++k) {
          if (k < v / 64) {
            next[k] = 0;
          } else {
            const unsigned shift = static_cast<unsigned>(v % 64) + 1;
            next[k] &= shift == 64 ? 0 : ~std::uint64_t{0} << shift;
          }
        }
        clique.push_back(v);
        self(self, next);
        clique.pop_back();
        if (stop) return;
      }
    }
  };
  std::vector<std::uint64_t> all(row_words, ~std::uint64_t{0});
  if (count % 64 != 0) all.back() = (std::uint64_t{1} << (count % 64)) - 1;
  if (count == 0) all.clear();
  extend(extend, all);
  return result;
}

}  // namespace vbent
