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

#ifndef VBENT_PROPP_H_
#define VBENT_PROPP_H_

// Vanishing second derivatives along a set of directions u_1, ..., u_tau:
// D_{u_i} D_{u_j} g = 0 for every i < j.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vbent/boolfun.h"
#include "vbent/redpoly.h"

namespace vbent {

struct PairWitness {
  std::size_t i = 0;  // 0-based positions in the defining set, i < j
  std::size_t j = 0;
  std::uint32_t x = 0;  // least x with D_{u_i} D_{u_j} g(x) = 1
};

struct PropertyCheck {
  bool holds = false;
  std::optional<PairWitness> failure;
};

// Sets of size 0 or 1 pass vacuously.
PropertyCheck SatisfiesP(const BooleanFunction& g, const DefiningSet& u);

// D_a D_b g = 0 for all a, b in span(u). Throws PreconditionError when
// SatisfiesP(g, u) fails.
bool SpanClosure(const BooleanFunction& g, const DefiningSet& u);

struct ShiftCheck {
  bool holds = false;
  // On failure: the least weight vector w (bit i <-> u_i) and point x where
  // g(x + sum w_i u_i) != g(x) + sum w_i D_{u_i} g(x).
  std::optional<std::uint32_t> weight;
  std::uint32_t x = 0;
};

ShiftCheck ShiftDecomposition(const BooleanFunction& g, const DefiningSet& u);

// h(x) = g(x) g(x + b). Throws PreconditionError unless g has the property
// for u and b lies in span(u); throws VerificationError if h does not.
BooleanFunction ProductShift(const BooleanFunction& g, const DefiningSet& u, Elem b);

struct SearchOptions {
  std::size_t limit = 0;          // sets kept; 0 keeps all
  std::uint64_t node_budget = 0;  // search nodes; 0 is unbounded
  std::vector<Elem> candidates;   // empty means every nonzero element
};

struct SearchResult {
  std::vector<DefiningSet> sets;  // lexicographic, each ascending
  std::uint64_t total_found = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
  bool budget_exhausted = false;
};

// All tau-subsets of the candidate pool with the property, found as cliques
// of the graph joining a, b whenever D_a D_b g = 0.
SearchResult FindDefiningSets(const BooleanFunction& g, int tau,
                              const SearchOptions& options = {});

}  // namespace vbent

#endif  // VBENT_PROPP_H_
