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

#include "vbent/families.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

#include "vbent/error.h"

namespace vbent {
namespace {

std::string Hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(v));
  return buf;
}

// Table of x -> sum_j x^(exps[j]), walking x through powers of the generator.
std::vector<Elem> PowerSum(const FieldSpec& field, std::span<const std::uint64_t> exps) {
  std::vector<Elem> out(field.size(), 0);
  for (std::uint64_t d : exps) out[0] ^= field.pow(0, d);
  std::vector<Elem> cur(exps.size(), 1);
  std::vector<Elem> step;
  for (std::uint64_t d : exps) step.push_back(field.pow(field.generator(), d));
  Elem x = 1;
  for (std::uint32_t i = 0; i < field.group_order(); ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      s ^= cur[j];
      cur[j] = field.mul(cur[j], step[j]);
    }
    out[x] = s;
    x = field.mul(x, field.generator());
  }
  return out;
}

std::vector<Elem> NonzeroSubfield(const FieldSpec& field, int m) {
  std::vector<Elem> out = field.subfield_elements(m);
  out.erase(out.begin());  // ascending, so 0 comes first
  return out;
}

Elem LeastNonTrivial(const std::vector<Elem>& circle) {
  for (Elem e : circle) {
    if (e != 1) return e;
  }
  throw PreconditionError("unit circle has no element other than 1");
}

void CheckDistinctNonzero(const std::vector<Elem>& u, const FieldSpec& field) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0 || !field.contains(u[i])) {
      throw PreconditionError("u_" + std::to_string(i + 1) + " must be a nonzero field element");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (u[i] == u[j]) {
        throw PreconditionError("u_" + std::to_string(j + 1) + " and u_" +
                                std::to_string(i + 1) + " coincide");
      }
    }
  }
}

// u_i u_j^(2^k) in GF(2^k)* for all i < j.
void CheckConjugateProducts(const FieldSpec& field, const std::vector<Elem>& u, int k) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const Elem p = field.mul(u[i], field.frobenius(u[j], k));
      if (p == 0 || !field.in_subfield(p, k)) {
        throw PreconditionError("u_" + std::to_string(i + 1) + " u_" + std::to_string(j + 1) +
                                "^(2^" + std::to_string(k) + ") = " + Hex(p) +
                                " is not in GF(2^" + std::to_string(k) + ")*");
      }
    }
  }
}

void CheckKasamiParams(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxFieldDegree) {
    throw PreconditionError("kasami family needs an even n in [2, " +
                            std::to_string(kMaxFieldDegree) + "], got " + std::to_string(n));
  }
}

void CheckNihoParams(int n, int r) {
  if (n < 2 || n % 2 != 0 || n > kMaxFieldDegree) {
    throw PreconditionError("niho family needs an even n in [2, " +
                            std::to_string(kMaxFieldDegree) + "], got " + std::to_string(n));
  }
  const int k = n / 2;
  if (r <= 1 || r >= k) {
    throw PreconditionError("niho family needs 1 < r < k = " + std::to_string(k) + ", got r=" +
                            std::to_string(r));
  }
  if (std::gcd(r, k) != 1) {
    throw PreconditionError("niho family needs gcd(r, k) = 1, got gcd(" + std::to_string(r) +
                            ", " + std::to_string(k) + ") = " +
                            std::to_string(std::gcd(r, k)));
  }
}

void CheckGoldParams(int n) {
  if (n < 8 || n % 4 != 0 || n > kMaxFieldDegree) {
    throw PreconditionError("gold family needs n = 4k with k >= 2, got n=" + std::to_string(n));
  }
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kKasami:
      return "kasami";
    case Family::kNiho:
      return "niho";
    case Family::kGold:
      return "gold";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "kasami") return Family::kKasami;
  if (name == "niho") return Family::kNiho;
  if (name == "gold") return Family::kGold;
  return std::nullopt;
}

VectorialFunction KasamiBase(const FieldSpec& field) {
  CheckKasamiParams(field.n());
  const int k = field.n() / 2;
  const std::uint64_t e[] = {(std::uint64_t{1} << k) + 1};
  return VectorialFunction(field, k, PowerSum(field, e));
}

BooleanFunction KasamiDual(const FieldSpec& field, Elem lambda) {
  const int k = field.n() / 2;
  if (lambda == 0 || !field.in_subfield(lambda, k)) {
    throw InvalidArgument("lambda must lie in GF(2^k)*");
  }
  const Elem inv = field.inverse(lambda);
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;
  return BooleanFunction::Tabulate(field.n(), [&](std::uint32_t x) {
    return field.subfield_trace(field.mul(inv, field.pow(x, e)), k) == 0;
  });
}

std::vector<Elem> KasamiAutoU(const FieldSpec& field, int tau) {
  const int k = field.n() / 2;
  if (tau < 0 || tau > k) throw PreconditionError("tau must lie in [0, k]");
  const std::vector<Elem> pool = NonzeroSubfield(field, k);
  const std::vector<Elem> rho = GreedyBasis(pool);
  const Elem v = LeastNonTrivial(field.unit_circle());
  std::vector<Elem> u;
  for (int i = 0; i < tau; ++i) u.push_back(field.mul(rho[static_cast<std::size_t>(i)], v));
  return u;
}

void CheckKasamiU(const FieldSpec& field, const std::vector<Elem>& u) {
  CheckDistinctNonzero(u, field);
  CheckConjugateProducts(field, u, field.n() / 2);
}

std::vector<std::uint64_t> NihoExponents(int n, int r) {
  CheckNihoParams(n, r);
  const int k = n / 2;
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const std::uint64_t half = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << r); ++i) {
    out.push_back(((i * (std::uint64_t{1} << (k - r)) + 1) * half + 1) % order);
  }
  return out;
}

VectorialFunction NihoBase(const FieldSpec& field, int r) {
  const int k = field.n() / 2;
  const std::vector<std::uint64_t> exps = NihoExponents(field.n(), r);
  std::vector<Elem> values = PowerSum(field, exps);
  for (std::uint32_t x = 0; x < field.size(); ++x) {
    if (!field.in_subfield(values[x], k)) {
      throw VerificationError("niho G(" + Hex(x) + ") = " + Hex(values[x]) +
                              " is outside GF(2^" + std::to_string(k) + ")");
    }
  }
  return VectorialFunction(field, k, std::move(values));
}

std::uint64_t NihoScalingExponent(int n, int r) {
  CheckNihoParams(n, r);
  const int k = n / 2;
  const std::uint64_t t = (std::uint64_t{1} << (r - 1)) - 1;
  return ((std::uint64_t{1} << k) - 1) * (t * (std::uint64_t{1} << (k - r)) + 1) + 1;
}

Elem NihoDualParameter(const FieldSpec& field) {
  const int k = field.n() / 2;
  for (Elem u = 0; u < field.size(); ++u) {
    if ((u ^ field.frobenius(u, k)) == 1) return u;
  }
  throw PreconditionError("no u with u + u^(2^k) = 1");
}

BooleanFunction NihoDualOne(const FieldSpec& field, int r, Elem u) {
  CheckNihoParams(field.n(), r);
  const int n = field.n();
  const int k = n / 2;
  if ((u ^ field.frobenius(u, k)) != 1) {
    throw InvalidArgument("parameter u must satisfy u + u^(2^k) = 1");
  }
  const std::uint64_t s = ModInverse((std::uint64_t{1} << r) - 1, (std::uint64_t{1} << k) - 1);
  const Elem u_shift = field.frobenius(u, n - r);
  return BooleanFunction::Tabulate(n, [&](std::uint32_t x) {
    const Elem xc = field.frobenius(x, k);
    const Elem z = 1 ^ x ^ xc;
    const Elem val = field.mul(field.mul(u, z) ^ u_shift ^ xc, field.pow(z, s));
    if (!field.in_subfield(val, k)) {
      throw VerificationError("niho dual argument at x=" + Hex(x) + " is outside GF(2^k)");
    }
    return field.subfield_trace(val, k) != 0;
  });
}

Elem NihoDelta(const FieldSpec& field, int r, Elem lambda) {
  const std::uint64_t order = field.group_order();
  const std::uint64_t dt = NihoScalingExponent(field.n(), r) % order;
  if (std::gcd(dt, order) != 1) {
    throw PreconditionError("d_t is not invertible modulo 2^n - 1");
  }
  if (lambda == 0) throw InvalidArgument("lambda must be nonzero");
  return field.pow(lambda, ModInverse(dt, order));
}

std::vector<Elem> NihoAutoU(const FieldSpec& field, int tau) {
  const int k = field.n() / 2;
  if (tau < 0 || tau > k) throw PreconditionError("tau must lie in [0, k]");
  const std::vector<Elem> pool = NonzeroSubfield(field, k);
  std::vector<Elem> basis = GreedyBasis(pool);
  basis.resize(static_cast<std::size_t>(tau));
  return basis;
}

void CheckNihoU(const FieldSpec& field, const std::vector<Elem>& u) {
  CheckDistinctNonzero(u, field);
  const int k = field.n() / 2;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!field.in_subfield(u[i], k)) {
      throw PreconditionError("u_" + std::to_string(i + 1) + " = " + Hex(u[i]) +
                              " is not in GF(2^" + std::to_string(k) + ")");
    }
  }
  if (!LinearlyIndependent(u)) {
    throw PreconditionError("u must be linearly independent over GF(2)");
  }
}

Elem GoldOmega(const FieldSpec& field) {
  CheckGoldParams(field.n());
  const int k = field.n() / 4;
  const std::uint64_t e = ((std::uint64_t{1} << k) - 1) * ((std::uint64_t{1} << (2 * k)) + 1);
  return field.pow(field.generator(), e);
}

Elem GoldLambda0(const FieldSpec& field) {
  const Elem w = GoldOmega(field);
  const Elem s = w ^ field.frobenius(w, field.n() / 4);
  if (s == 0) throw VerificationError("omega + omega^(2^k) = 0");
  return field.inverse(s);
}

VectorialFunction GoldBase(const FieldSpec& field) {
  const int k = field.n() / 4;
  const Elem w = GoldOmega(field);
  const std::uint64_t e[] = {(std::uint64_t{1} << k) + 1};
  std::vector<Elem> values = PowerSum(field, e);
  for (Elem& v : values) v = field.trace(field.mul(w, v), k);
  return VectorialFunction(field, k, std::move(values));
}

Elem GoldDelta(const FieldSpec& field, Elem lambda) {
  const int k = field.n() / 4;
  if (lambda == 0 || !field.in_subfield(lambda, k)) {
    throw InvalidArgument("lambda must lie in GF(2^k)*");
  }
  const Elem mu = field.mul(lambda, field.inverse(GoldLambda0(field)));
  const std::uint64_t sub = (std::uint64_t{1} << k) - 1;
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;
  return field.pow(mu, ModInverse(e % sub, sub));
}

BooleanFunction GoldDual(const FieldSpec& field, Elem lambda) {
  const int k = field.n() / 4;
  const Elem c = field.mul(GoldLambda0(field), GoldOmega(field));
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;
  const BooleanFunction g0 = BooleanFunction::Tabulate(
      field.n(), [&](std::uint32_t x) { return field.abs_trace(field.mul(c, field.pow(x, e))); });
  return g0.Scaled(field, field.inverse(GoldDelta(field, lambda)));
}

std::vector<Elem> GoldAutoU(const FieldSpec& field, int tau) {
  const int k = field.n() / 4;
  if (tau < 0 || tau > k) throw PreconditionError("tau must lie in [0, k]");
  const std::vector<Elem> basis = GreedyBasis(NonzeroSubfield(field, k));
  const Elem s = LeastNonTrivial(field.unit_circle(2 * k));
  std::vector<Elem> u;
  for (int i = 0; i < tau; ++i) u.push_back(field.mul(basis[static_cast<std::size_t>(i)], s));
  return u;
}

void CheckGoldU(const FieldSpec& field, const std::vector<Elem>& u) {
  CheckDistinctNonzero(u, field);
  const int k = field.n() / 4;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!field.in_subfield(u[i], 2 * k)) {
      throw PreconditionError("u_" + std::to_string(i + 1) + " = " + Hex(u[i]) +
                              " is not in GF(2^" + std::to_string(2 * k) + ")");
    }
  }
  CheckConjugateProducts(field, u, k);
}

Construction BuildFamily(const FamilyRequest& req, const VerifyOptions& options) {
  switch (req.family) {
    case Family::kKasami:
      CheckKasamiParams(req.n);
      break;
    case Family::kNiho:
      CheckNihoParams(req.n, req.r);
      break;
    case Family::kGold:
      CheckGoldParams(req.n);
      break;
  }
  const FieldSpec field =
      req.modulus ? FieldSpec::WithModulus(req.n, *req.modulus) : FieldSpec::Standard(req.n);
  const int m = req.family == Family::kGold ? req.n / 4 : req.n / 2;
  const int tau =
      req.tau ? *req.tau : (req.u ? static_cast<int>(req.u->size()) : m);
  if (tau < 0 || tau > m) {
    throw PreconditionError("tau must lie in [0, " + std::to_string(m) + "], got " +
                            std::to_string(tau));
  }
  if (req.u && static_cast<int>(req.u->size()) != tau) {
    throw PreconditionError("expected " + std::to_string(tau) + " u values, got " +
                            std::to_string(req.u->size()));
  }
  if (req.t < 0 || req.t > VectorialFunction::kMaxExtraBits) {
    throw PreconditionError("t out of range");
  }
  std::vector<ReducedPolynomial> polys = req.polys;
  if (req.t == 0) {
    if (polys.size() > 1) throw PreconditionError("t = 0 takes a single polynomial");
    if (polys.empty()) polys.emplace_back(tau);
  } else if (static_cast<int>(polys.size()) != req.t) {
    throw PreconditionError("t = " + std::to_string(req.t) + " needs " + std::to_string(req.t) +
                            " polynomials, got " + std::to_string(polys.size()));
  }
  int d = 0;
  for (auto& p : polys) {
    if (p.arity() > tau) {
      throw PreconditionError("polynomial " + p.ToString() + " uses more than tau = " +
                              std::to_string(tau) + " variables");
    }
    p = p.WithArity(tau);
    d = std::max(d, p.degree());
  }

  std::vector<Elem> u;
  std::vector<Assertion> extra;
  std::optional<VectorialFunction> base;
  DualFormula dual;
  switch (req.family) {
    case Family::kKasami: {
      u = req.u ? *req.u : KasamiAutoU(field, tau);
      CheckKasamiU(field, u);
      base = KasamiBase(field);
      dual = [field](Elem lambda) { return KasamiDual(field, lambda); };
      break;
    }
    case Family::kNiho: {
      u = req.u ? *req.u : NihoAutoU(field, tau);
      CheckNihoU(field, u);
      base = NihoBase(field, req.r);
      extra.push_back({"G subfield-valued", true, {}});
      const std::uint64_t order = field.group_order();
      const std::uint64_t dt = NihoScalingExponent(req.n, req.r);
      const bool coprime = std::gcd(dt % order, order) == 1;
      extra.push_back({"gcd(d_t, 2^n - 1) = 1", coprime, "d_t = " + std::to_string(dt)});
      if (coprime) {
        std::string bad;
        for (Elem lambda : NonzeroSubfield(field, m)) {
          const Elem delta = NihoDelta(field, req.r, lambda);
          if (!field.in_subfield(delta, m) || field.pow(delta, dt) != lambda) {
            bad = "lambda=" + Hex(lambda) + " delta=" + Hex(delta);
            break;
          }
        }
        extra.push_back({"delta in GF(2^k) with delta^d_t = lambda", bad.empty(), bad});
        const BooleanFunction one = NihoDualOne(field, req.r, NihoDualParameter(field));
        const int r = req.r;
        dual = [field, one, r](Elem lambda) {
          return one.Scaled(field, field.inverse(NihoDelta(field, r, lambda)));
        };
      }
      break;
    }
    case Family::kGold: {
      u = req.u ? *req.u : GoldAutoU(field, tau);
      CheckGoldU(field, u);
      const int k = m;
      const Elem w = GoldOmega(field);
      const std::vector<Elem> circle = field.unit_circle(2 * k);
      const bool on_circle =
          w != 1 && std::binary_search(circle.begin(), circle.end(), w);
      extra.push_back({"omega in U minus {1}", on_circle, "omega=" + Hex(w)});
      const std::uint64_t order = field.group_order();
      const std::uint64_t e = (std::uint64_t{1} << k) + 1;
      const std::uint64_t sub_order = order / std::gcd(e, order);
      extra.push_back({"omega not in <g^(2^k+1)>", field.pow(w, sub_order) != 1, {}});
      const bool nondegenerate = (w ^ field.frobenius(w, k)) != 0;
      extra.push_back({"omega + omega^(2^k) != 0", nondegenerate, {}});
      base = GoldBase(field);
      if (nondegenerate) {
        const Elem l0 = GoldLambda0(field);
        extra.push_back({"lambda0 in GF(2^k)* with trace 1",
                         field.in_subfield(l0, k) && field.subfield_trace(l0, k) == 1,
                         "lambda0=" + Hex(l0)});
        const BooleanFunction g0 = Component(*base, {l0, 0}, field);
        bool self_dual = false;
        try {
          self_dual = Dual(g0, field) == g0;
        } catch (const PreconditionError&) {
        }
        extra.push_back({"G_lambda0 self-dual", self_dual, {}});
        dual = [field](Elem lambda) { return GoldDual(field, lambda); };
      }
      break;
    }
  }

  const DefiningSet set(u);
  LiftResult lift = req.t == 0
                        ? VecBentLift(*base, set, polys[0], field, options, dual)
                        : VecPlateauedLift(*base, set, polys, field, options, dual);
  ConstructionReport& report = lift.report;
  report.family = std::string(FamilyName(req.family));
  report.r = req.r;
  report.k = m;
  report.seed = req.seed;
  report.assertions.insert(report.assertions.begin(), extra.begin(), extra.end());

  if (LinearlyIndependent(u)) {
    if (req.family == Family::kNiho) {
      const int g_degree = VectorialDegree(*base, field);
      if (d == m && g_degree != m) report.predicted_degree = m;
    } else {
      report.predicted_degree = std::max(2, d);
    }
  }
  if (report.predicted_degree) {
    report.Check("algebraic degree", report.measured_degree == *report.predicted_degree,
                 "measured " + std::to_string(report.measured_degree) + ", predicted " +
                     std::to_string(*report.predicted_degree));
  }
  return {field, std::move(lift.function), std::move(report)};
}

}  // namespace vbent
