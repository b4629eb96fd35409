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

#include "vbent/gf2n.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <string>

#include "vbent/error.h"

namespace vbent {
namespace {

// One primitive polynomial per degree, leading term included.
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kPrimitive = {
    0x0,        // unused
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xB,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11D,      // x^8 + x^4 + x^3 + x^2 + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201B,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1100B,    // x^16 + x^12 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x1000087,  // x^24 + x^7 + x^2 + x + 1
};

void CheckDegree(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw InvalidArgument("field degree " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxFieldDegree) +
                          "]");
  }
}

// Multiplication in F2[x]/(modulus), valid for any modulus of degree n.
std::uint32_t RingMul(std::uint32_t a, std::uint32_t b, int n,
                      std::uint32_t modulus) {
  const std::uint32_t top = std::uint32_t{1} << n;
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

int Degree(std::uint64_t p) { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t PolyGcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    while (a != 0 && Degree(a) >= Degree(b)) {
      a ^= b << (Degree(a) - Degree(b));
    }
    std::swap(a, b);
  }
  return a;
}

// Ben-Or style irreducibility test: x^(2^n) == x mod p and
// gcd(x^(2^(n/q)) - x, p) == 1 for every prime q | n.
bool IsIrreducible(int n, std::uint32_t modulus) {
  if (n == 1) return true;
  auto x_pow_2_pow = [&](int i) {
    std::uint32_t v = 2;  // the class of x
    for (int j = 0; j < i; ++j) v = RingMul(v, v, n, modulus);
    return v;
  };
  if (x_pow_2_pow(n) != 2) return false;
  for (std::uint64_t q : PrimeFactors(static_cast<std::uint64_t>(n))) {
    const std::uint32_t h = x_pow_2_pow(n / static_cast<int>(q)) ^ 2u;
    if (h == 0 || PolyGcd(modulus, h) != 1) return false;
  }
  return true;
}

std::uint32_t ParseHex(std::string_view s, const char* what) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
  }
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string("malformed ") + what + " '" +
                          std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::uint32_t StandardModulus(int n) {
  CheckDegree(n);
  return kPrimitive[static_cast<std::size_t>(n)];
}

FieldSpec::FieldSpec(int n, std::uint32_t modulus, Elem generator)
    : n_(n), modulus_(modulus), generator_(generator), trace_mask_(0) {
  for (int j = 0; j < n_; ++j) {
    Elem x = Elem{1} << j;
    Elem s = 0;
    for (int i = 0; i < n_; ++i) {
      s ^= x;
      x = mul(x, x);
    }
    trace_mask_ |= (s & 1u) << j;
  }
}

FieldSpec FieldSpec::Standard(int n) {
  CheckDegree(n);
  // x generates the group for a primitive modulus; n == 1 is the prime field.
  return FieldSpec(n, kPrimitive[static_cast<std::size_t>(n)], n == 1 ? 1 : 2);
}

FieldSpec FieldSpec::WithModulus(int n, std::uint64_t modulus) {
  CheckDegree(n);
  if (Degree(modulus) != n) {
    throw InvalidArgument("modulus has degree " +
                          std::to_string(Degree(modulus)) + ", expected " +
                          std::to_string(n));
  }
  const auto mod32 = static_cast<std::uint32_t>(modulus);
  if (!IsIrreducible(n, mod32)) {
    throw InvalidArgument("modulus is not irreducible over F2");
  }
  FieldSpec probe(n, mod32, 1);
  for (Elem g = 1; g < probe.size(); ++g) {
    if (MultiplicativeOrder(probe, g) == probe.group_order()) {
      return FieldSpec(n, mod32, g);
    }
  }
  throw InvalidArgument("no primitive element found");  // unreachable
}

FieldSpec FieldSpec::Parse(std::string_view text) {
  int n = -1;
  std::uint32_t modulus = 0;
  std::uint32_t generator = 0;
  bool have_mod = false;
  bool have_gen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidArgument("malformed field token '" + std::string(token) + "'");
    }
    const std::string_view key = token.substr(0, colon);
    const std::string_view value = token.substr(colon + 1);
    if (key == "n") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw InvalidArgument("malformed field degree '" + std::string(value) + "'");
      }
    } else if (key == "modulus") {
      modulus = ParseHex(value, "modulus");
      have_mod = true;
    } else if (key == "generator") {
      generator = ParseHex(value, "generator");
      have_gen = true;
    } else {
      throw InvalidArgument("unknown field key '" + std::string(key) + "'");
    }
    pos = end;
  }
  if (n < 0 || !have_mod) throw InvalidArgument("field needs n and modulus");
  FieldSpec spec = WithModulus(n, modulus);
  if (have_gen && generator != spec.generator()) {
    if (generator == 0 || generator >= spec.size() ||
        MultiplicativeOrder(spec, generator) != spec.group_order()) {
      throw InvalidArgument("generator is not primitive");
    }
    spec.generator_ = generator;
  }
  return spec;
}

Elem FieldSpec::mul(Elem a, Elem b) const { return RingMul(a, b, n_, modulus_); }

Elem FieldSpec::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  e %= group_order();
  Elem r = 1;
  while (e != 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldSpec::inverse(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return pow(a, group_order() - 1);
}

Elem FieldSpec::frobenius(Elem a, int i) const {
  i %= n_;
  if (i < 0) i += n_;
  for (int j = 0; j < i; ++j) a = mul(a, a);
  return a;
}

Elem FieldSpec::trace(Elem a, int m) const {
  if (m <= 0 || n_ % m != 0) {
    throw InvalidArgument("trace: " + std::to_string(m) + " does not divide " +
                          std::to_string(n_));
  }
  Elem s = 0;
  for (int i = 0; i < n_ / m; ++i) {
    s ^= a;
    a = frobenius(a, m);
  }
  return s;
}

int FieldSpec::abs_trace(Elem a) const {
  return std::popcount(a & trace_mask_) & 1;
}

bool FieldSpec::in_subfield(Elem a, int m) const {
  if (m <= 0 || n_ % m != 0) {
    throw InvalidArgument("subfield degree " + std::to_string(m) +
                          " does not divide " + std::to_string(n_));
  }
  return frobenius(a, m) == a;
}

int FieldSpec::subfield_trace(Elem a, int m) const {
  if (!in_subfield(a, m)) {
    throw InvalidArgument("element outside GF(2^" + std::to_string(m) + ")");
  }
  Elem s = 0;
  for (int i = 0; i < m; ++i) {
    s ^= a;
    a = mul(a, a);
  }
  return static_cast<int>(s);
}

std::uint32_t FieldSpec::trace_functional(Elem a) const {
  std::uint32_t mask = 0;
  for (int j = 0; j < n_; ++j) {
    mask |= static_cast<std::uint32_t>(abs_trace(mul(a, Elem{1} << j))) << j;
  }
  return mask;
}

std::uint32_t FieldSpec::subfield_functional(Elem lambda, int m) const {
  if (!in_subfield(lambda, m)) {
    throw InvalidArgument("functional coefficient outside GF(2^" +
                          std::to_string(m) + ")");
  }
  // Tr^m_1(lambda y) = Tr^n_1(c lambda y) whenever Tr^n_m(c) = 1.
  Elem c = 0;
  for (int j = 0; j < n_; ++j) {
    const Elem t = trace(Elem{1} << j, m);
    if (t != 0) {
      c = mul(Elem{1} << j, inverse(t));
      break;
    }
  }
  return trace_functional(mul(c, lambda));
}

std::vector<Elem> FieldSpec::subfield_elements(int m) const {
  if (m <= 0 || n_ % m != 0) {
    throw InvalidArgument("subfield degree " + std::to_string(m) +
                          " does not divide " + std::to_string(n_));
  }
  const std::uint64_t sub_order = (std::uint64_t{1} << m) - 1;
  const Elem step = pow(generator_, group_order() / sub_order);
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(sub_order) + 1);
  out.push_back(0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < sub_order; ++i) {
    out.push_back(x);
    x = mul(x, step);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FieldSpec::unit_circle() const { return unit_circle(n_); }

std::vector<Elem> FieldSpec::unit_circle(int d) const {
  if (d <= 0 || d % 2 != 0 || n_ % d != 0) {
    throw InvalidArgument("unit circle needs an even subfield degree dividing " +
                          std::to_string(n_) + ", got " + std::to_string(d));
  }
  const std::uint64_t circle = (std::uint64_t{1} << (d / 2)) + 1;
  const Elem step = pow(generator_, group_order() / circle);
  std::vector<Elem> out;
  Elem x = 1;
  for (std::uint64_t i = 0; i < circle; ++i) {
    out.push_back(x);
    x = mul(x, step);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FieldSpec::ToString() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "n:%d modulus:%x generator:%x", n_,
                static_cast<unsigned>(modulus_), static_cast<unsigned>(generator_));
  return buf;
}

std::uint64_t MultiplicativeOrder(const FieldSpec& field, Elem a) {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t order = field.group_order();
  for (std::uint64_t q : PrimeFactors(order)) {
    while (order % q == 0 && field.pow(a, order / q) == 1) order /= q;
  }
  return order;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ModInverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw InvalidArgument(std::to_string(a) + " is not invertible modulo " +
                          std::to_string(m));
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

int Rank(std::span<const Elem> vectors) {
  std::array<Elem, 32> pivots{};  // pivots[b] has leading bit b
  int rank = 0;
  for (Elem v : vectors) {
    while (v != 0) {
      const int b = static_cast<int>(std::bit_width(v)) - 1;
      if (pivots[static_cast<std::size_t>(b)] == 0) {
        pivots[static_cast<std::size_t>(b)] = v;
        ++rank;
        break;
      }
      v ^= pivots[static_cast<std::size_t>(b)];
    }
  }
  return rank;
}

bool LinearlyIndependent(std::span<const Elem> vectors) {
  return Rank(vectors) == static_cast<int>(vectors.size());
}

std::vector<Elem> GreedyBasis(std::span<const Elem> pool) {
  std::vector<Elem> basis;
  for (Elem v : pool) {
    basis.push_back(v);
    if (!LinearlyIndependent(basis)) basis.pop_back();
  }
  return basis;
}

std::vector<Elem> SpanOf(std::span<const Elem> generators) {
  std::vector<Elem> out(std::size_t{1} << generators.size(), 0);
  for (std::size_t w = 1; w < out.size(); ++w) {
    const int low = std::countr_zero(w);
    out[w] = out[w & (w - 1)] ^ generators[static_cast<std::size_t>(low)];
  }
  return out;
}

}  // namespace vbent
