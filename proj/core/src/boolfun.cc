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

#include "vbent/boolfun.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include "vbent/error.h"

namespace vbent {
namespace {

// kLow[i] selects the lower half of every 2^(i+1)-bit block.
constexpr std::array<std::uint64_t, 6> kLow = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::size_t WordCount(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

std::uint64_t TailMask(int n) {
  return n >= 6 ? ~0ull : ((1ull << (1u << n)) - 1);
}

void CheckVariables(int n) {
  if (n < 0 || n > kMaxFieldDegree) {
    throw InvalidArgument("variable count " + std::to_string(n) +
                          " outside [0, " + std::to_string(kMaxFieldDegree) + "]");
  }
}

void CheckSameArity(const BooleanFunction& a, const BooleanFunction& b) {
  if (a.n() != b.n()) {
    throw InvalidArgument("Boolean functions on " + std::to_string(a.n()) +
                          " and " + std::to_string(b.n()) + " variables");
  }
}

void CheckField(const BooleanFunction& f, const FieldSpec& field) {
  if (f.n() != field.n()) {
    throw InvalidArgument("function on " + std::to_string(f.n()) +
                          " variables used with GF(2^" + std::to_string(field.n()) + ")");
  }
}

// Bit b of the result is bit b ^ c of x, for c < 64.
std::uint64_t PermuteWord(std::uint64_t x, unsigned c) {
  for (unsigned i = 0; i < 6; ++i) {
    if ((c >> i) & 1u) {
      const unsigned s = 1u << i;
      x = ((x & kLow[i]) << s) | ((x >> s) & kLow[i]);
    }
  }
  return x;
}

template <typename T>
void Butterfly(std::vector<T>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T x = v[j];
        const T y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

// table[a] = trace_functional(a) for every a.
std::vector<std::uint32_t> TraceIndex(const FieldSpec& field) {
  std::vector<std::uint32_t> basis(static_cast<std::size_t>(field.n()));
  for (int i = 0; i < field.n(); ++i) {
    basis[static_cast<std::size_t>(i)] = field.trace_functional(Elem{1} << i);
  }
  std::vector<std::uint32_t> table(field.size(), 0);
  for (std::uint32_t a = 1; a < field.size(); ++a) {
    table[a] = table[a & (a - 1)] ^ basis[static_cast<std::size_t>(std::countr_zero(a))];
  }
  return table;
}

struct AuditState {
  std::atomic<bool> enabled{false};
  std::atomic<std::uint64_t> spectra{0};
  std::atomic<std::uint64_t> parseval{0};
  std::atomic<std::uint64_t> roundtrip{0};
};

AuditState& Audit() {
  static AuditState state;
  return state;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  CheckVariables(n);
  words_.assign(WordCount(n), 0);
}

BooleanFunction BooleanFunction::Constant(int n, bool value) {
  BooleanFunction f(n);
  if (value) {
    for (auto& w : f.words_) w = ~0ull;
    f.words_.back() &= TailMask(n);
  }
  return f;
}

BooleanFunction BooleanFunction::Tabulate(int n, const std::function<bool(std::uint32_t)>& f) {
  BooleanFunction out(n);
  for (std::uint32_t x = 0; x < out.size(); ++x) {
    if (f(x)) out.words_[x >> 6] |= 1ull << (x & 63u);
  }
  return out;
}

BooleanFunction BooleanFunction::FromWords(int n, std::vector<std::uint64_t> words) {
  CheckVariables(n);
  if (words.size() != WordCount(n)) {
    throw InvalidArgument("expected " + std::to_string(WordCount(n)) +
                          " table words, got " + std::to_string(words.size()));
  }
  if ((words.back() & ~TailMask(n)) != 0) {
    throw InvalidArgument("table bits beyond 2^n are set");
  }
  return BooleanFunction(n, std::move(words));
}

std::uint64_t BooleanFunction::weight() const {
  std::uint64_t w = 0;
  for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

bool BooleanFunction::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool BooleanFunction::is_one() const { return weight() == size(); }

BooleanFunction BooleanFunction::Shifted(std::uint32_t a) const {
  if (a >= size()) throw InvalidArgument("shift outside the domain");
  std::vector<std::uint64_t> out(words_.size());
  const std::size_t word_shift = a >> 6;
  const unsigned bit_shift = a & 63u;
  for (std::size_t w = 0; w < out.size(); ++w) {
    out[w] = PermuteWord(words_[w ^ word_shift], bit_shift);
  }
  return BooleanFunction(n_, std::move(out));
}

BooleanFunction BooleanFunction::Scaled(const FieldSpec& field, Elem delta) const {
  CheckField(*this, field);
  return Tabulate(n_, [&](std::uint32_t x) { return (*this)(field.mul(delta, x)); });
}

BooleanFunction BooleanFunction::operator~() const {
  BooleanFunction out = *this;
  for (auto& w : out.words_) w = ~w;
  out.words_.back() &= TailMask(n_);
  return out;
}

BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b) {
  CheckSameArity(a, b);
  BooleanFunction out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= b.words_[i];
  return out;
}

BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b) {
  CheckSameArity(a, b);
  BooleanFunction out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
  return out;
}

BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b) {
  CheckSameArity(a, b);
  BooleanFunction out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] |= b.words_[i];
  return out;
}

std::uint32_t BooleanFunction::FirstDifference(const BooleanFunction& other) const {
  CheckSameArity(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t d = words_[i] ^ other.words_[i];
    if (d != 0) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(d));
  }
  return size();
}

BooleanFunction FromUnivariate(std::span<const Term> terms, const FieldSpec& field) {
  const std::uint32_t size = field.size();
  std::vector<Elem> sum(size, 0);
  // Walk x = g^i and keep c * x^d = c * (g^d)^i per term.
  for (const Term& term : terms) {
    if (term.coefficient == 0) continue;
    if (term.exponent == 0) {
      for (auto& s : sum) s ^= term.coefficient;
      continue;
    }
    const Elem step = field.pow(field.generator(), term.exponent);
    Elem x = 1;
    Elem value = term.coefficient;
    for (std::uint32_t i = 0; i < field.group_order(); ++i) {
      sum[x] ^= value;
      x = field.mul(x, field.generator());
      value = field.mul(value, step);
    }
  }
  return BooleanFunction::Tabulate(field.n(), [&](std::uint32_t x) {
    return field.abs_trace(sum[x]) != 0;
  });
}

BooleanFunction LinearTrace(Elem a, const FieldSpec& field) {
  const std::uint32_t mask = field.trace_functional(a);
  return BooleanFunction::Tabulate(field.n(), [mask](std::uint32_t x) {
    return (std::popcount(mask & x) & 1) != 0;
  });
}

BooleanFunction Derivative(const BooleanFunction& f, std::uint32_t a) {
  return f ^ f.Shifted(a);
}

BooleanFunction SecondDerivative(const BooleanFunction& f, std::uint32_t a,
                                 std::uint32_t b) {
  return Derivative(Derivative(f, b), a);
}

std::string Classification::ToString() const {
  switch (kind) {
    case SpectrumKind::kBent:
      return "Bent";
    case SpectrumKind::kSemiBent:
      return "SemiBent";
    case SpectrumKind::kPlateaued:
      return "Plateaued(" + std::to_string(amplitude_log2) + ")";
    case SpectrumKind::kMixed:
      break;
  }
  std::string s = "Mixed{";
  for (std::size_t i = 0; i < abs_values.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(abs_values[i]);
  }
  return s + "}";
}

Classification Classify(std::span<const std::int32_t> values, int n) {
  std::set<std::int64_t> seen;
  for (std::int32_t v : values) seen.insert(std::llabs(v));
  Classification c;
  c.abs_values.assign(seen.begin(), seen.end());
  std::vector<std::int64_t> nonzero;
  for (auto v : c.abs_values) {
    if (v != 0) nonzero.push_back(v);
  }
  if (nonzero.size() != 1 || !std::has_single_bit(static_cast<std::uint64_t>(nonzero[0]))) {
    c.kind = SpectrumKind::kMixed;
    return c;
  }
  const int s = std::countr_zero(static_cast<std::uint64_t>(nonzero[0]));
  c.amplitude_log2 = s;
  if (n % 2 == 0 && seen.size() == 1 && s == n / 2) {
    c.kind = SpectrumKind::kBent;
  } else if (n % 2 == 0 && s == n / 2 + 1) {
    c.kind = SpectrumKind::kSemiBent;
  } else {
    c.kind = SpectrumKind::kPlateaued;
  }
  return c;
}

Classification MixedClass(std::vector<std::int64_t> abs_values) {
  std::sort(abs_values.begin(), abs_values.end());
  abs_values.erase(std::unique(abs_values.begin(), abs_values.end()), abs_values.end());
  Classification c;
  c.kind = SpectrumKind::kMixed;
  c.abs_values = std::move(abs_values);
  return c;
}

Classification BentClass(int n) {
  Classification c;
  c.kind = SpectrumKind::kBent;
  c.amplitude_log2 = n / 2;
  c.abs_values = {std::int64_t{1} << (n / 2)};
  return c;
}

Classification SemiBentClass(int n) {
  Classification c;
  c.kind = SpectrumKind::kSemiBent;
  c.amplitude_log2 = n / 2 + 1;
  c.abs_values = {0, std::int64_t{1} << (n / 2 + 1)};
  return c;
}

WalshSpectrum::WalshSpectrum(int n, std::vector<std::int32_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << n_)) {
    throw InvalidArgument("spectrum length does not match 2^n");
  }
  class_ = Classify(values_, n_);
}

std::int64_t WalshSpectrum::SquareSum() const {
  std::int64_t s = 0;
  for (std::int32_t v : values_) s += static_cast<std::int64_t>(v) * v;
  return s;
}

WalshSpectrum Walsh(const BooleanFunction& f, const FieldSpec& field) {
  CheckField(f, field);
  std::vector<std::int32_t> t(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) t[x] = f(x) ? -1 : 1;
  Butterfly(t);
  const std::vector<std::uint32_t> index = TraceIndex(field);
  std::vector<std::int32_t> values(f.size());
  for (std::uint32_t a = 0; a < f.size(); ++a) values[a] = t[index[a]];
  WalshSpectrum spectrum(f.n(), std::move(values));

  AuditState& audit = Audit();
  if (audit.enabled.load(std::memory_order_relaxed)) {
    audit.spectra.fetch_add(1, std::memory_order_relaxed);
    if (spectrum.SquareSum() != (std::int64_t{1} << (2 * f.n()))) {
      audit.parseval.fetch_add(1, std::memory_order_relaxed);
    }
    bool round_trip = false;
    try {
      round_trip = InverseWalsh(spectrum, field) == f;
    } catch (const VerificationError&) {
    }
    if (!round_trip) audit.roundtrip.fetch_add(1, std::memory_order_relaxed);
  }
  return spectrum;
}

BooleanFunction InverseWalsh(const WalshSpectrum& spectrum, const FieldSpec& field) {
  if (spectrum.n() != field.n()) {
    throw InvalidArgument("spectrum and field sizes differ");
  }
  const std::vector<std::uint32_t> index = TraceIndex(field);
  std::vector<std::int64_t> t(field.size());
  for (std::uint32_t a = 0; a < field.size(); ++a) t[index[a]] = spectrum[a];
  Butterfly(t);
  const std::int64_t scale = std::int64_t{1} << field.n();
  std::vector<std::uint64_t> words(WordCount(field.n()), 0);
  for (std::uint32_t x = 0; x < field.size(); ++x) {
    if (t[x] == -scale) {
      words[x >> 6] |= 1ull << (x & 63u);
    } else if (t[x] != scale) {
      throw VerificationError("spectrum is not a Boolean spectrum at x=" +
                              std::to_string(x));
    }
  }
  return BooleanFunction::FromWords(field.n(), std::move(words));
}

BooleanFunction DualFromSpectrum(const WalshSpectrum& spectrum) {
  const int n = spectrum.n();
  const std::int32_t root = n % 2 == 0 ? (std::int32_t{1} << (n / 2)) : 0;
  for (std::uint32_t a = 0; a < spectrum.values().size(); ++a) {
    if (n % 2 != 0 || std::abs(spectrum[a]) != root) {
      throw PreconditionError("dual of a non-bent function: W(" + std::to_string(a) +
                              ") = " + std::to_string(spectrum[a]));
    }
  }
  return BooleanFunction::Tabulate(n, [&](std::uint32_t a) { return spectrum[a] < 0; });
}

BooleanFunction Dual(const BooleanFunction& f, const FieldSpec& field) {
  return DualFromSpectrum(Walsh(f, field));
}

BooleanFunction AnfCoefficients(const BooleanFunction& f) {
  std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
  const int in_word = std::min(f.n(), 6);
  for (auto& word : w) {
    for (int i = 0; i < in_word; ++i) {
      word ^= (word & kLow[static_cast<std::size_t>(i)]) << (1u << i);
    }
  }
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) w[j + h] ^= w[j];
    }
  }
  return BooleanFunction::FromWords(f.n(), std::move(w));
}

std::vector<std::uint32_t> AnfMonomials(const BooleanFunction& f) {
  const BooleanFunction anf = AnfCoefficients(f);
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < anf.size(); ++u) {
    if (anf(u)) out.push_back(u);
  }
  return out;
}

int AlgebraicDegree(const BooleanFunction& f) {
  const BooleanFunction anf = AnfCoefficients(f);
  int degree = 0;
  const auto words = anf.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t word = words[i];
    while (word != 0) {
      const auto u = static_cast<std::uint32_t>(i * 64 + std::countr_zero(word));
      degree = std::max(degree, std::popcount(u));
      word &= word - 1;
    }
  }
  return degree;
}

void SetSpectrumAudit(bool enabled) { Audit().enabled.store(enabled); }
bool SpectrumAuditEnabled() { return Audit().enabled.load(); }

SpectrumAuditCounts SpectrumAudit() {
  const AuditState& a = Audit();
  return {a.spectra.load(), a.parseval.load(), a.roundtrip.load()};
}

void ResetSpectrumAudit() {
  Audit().spectra = 0;
  Audit().parseval = 0;
  Audit().roundtrip = 0;
}

}  // namespace vbent
