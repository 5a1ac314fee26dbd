// Copyright 2026 The pa-lab Authors
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

#include "palab/urn.h"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "palab/errors.h"
#include "palab/rng.h"
#include "palab/special.h"

namespace palab {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kNegativeSummandTolerance = 1e-12;
const double kLogGammaHalf = std::lgamma(0.5);

// (x)_n / n! for x = half_units / 2, i.e. the generalized binomial
// C(x + n - 1, n - 1 + ... ) form C(x + n - 1, x - 1) written without Gamma
// so the sqrt(pi) factors of half-integer arguments never appear.
mpq_class HalfPochhammerOverFactorial(int64_t half_units, uint64_t n) {
  mpz_class num(1), den(1);
  for (uint64_t j = 0; j < n; ++j) {
    num *= half_units + 2 * static_cast<int64_t>(j);
    den *= 2 * (j + 1);
  }
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// Canonical num / den; gmpxx arithmetic requires canonical operands.
mpq_class Ratio(int64_t num, int64_t den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void RequireN(uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
}

void RequireDegreeUrnStart(int64_t a0, int64_t b0) {
  if (a0 < 1) throw std::invalid_argument("a0 must be >= 1");
  if (b0 < 0) throw std::invalid_argument("b0 must be >= 0");
}

}  // namespace

std::string ReplacementMatrix::ToString() const {
  return "[" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
         std::to_string(gamma) + "," + std::to_string(delta) + "]";
}

void UrnSpec::Validate() const {
  if (a0 < 0 || b0 < 0) {
    throw std::invalid_argument("initial ball counts must be non-negative");
  }
  if (a0 + b0 < 1) throw std::invalid_argument("urn must start non-empty");
}

UrnState Simulate(const UrnSpec& spec, uint64_t n, uint64_t seed) {
  spec.Validate();
  if (!spec.matrix.additive()) {
    throw UnsupportedError("urn simulation requires an additive matrix, got " +
                           spec.matrix.ToString());
  }
  Rng rng = MakeRng(seed);
  UrnState state{spec.a0, spec.b0};
  for (uint64_t i = 0; i < n; ++i) {
    const auto total = static_cast<uint64_t>(state.a + state.b);
    if (UniformBelow(rng, total) < static_cast<uint64_t>(state.a)) {
      state.a += spec.matrix.alpha;
      state.b += spec.matrix.beta;
    } else {
      state.a += spec.matrix.gamma;
      state.b += spec.matrix.delta;
    }
  }
  return state;
}

ExactUrnEnumerator::ExactUrnEnumerator(const UrnSpec& spec)
    : spec_(spec), law_(ExactPmf::PointMass(spec.a0)) {
  spec_.Validate();
  if (!spec_.matrix.balanced() || !spec_.matrix.additive()) {
    throw UnsupportedError("exact enumeration needs a balanced additive urn, got " +
                           spec_.matrix.ToString());
  }
}

void ExactUrnEnumerator::Step() {
  const ReplacementMatrix& mat = spec_.matrix;
  const int64_t total = spec_.a0 + spec_.b0 +
                        static_cast<int64_t>(steps_) * mat.balance();
  const int64_t lo = law_.min_value();
  const int64_t hi = law_.max_value();
  const int64_t step_lo = std::min(mat.alpha, mat.gamma);
  const int64_t step_hi = std::max(mat.alpha, mat.gamma);
  const size_t new_size = static_cast<size_t>(hi - lo + 1 + step_hi - step_lo);
  scratch_.resize(new_size);
  for (auto& x : scratch_) x = 0;
  const std::vector<mpz_class>& num = law_.numerators();
  for (int64_t a = lo; a <= hi; ++a) {
    const mpz_class& w = num[a - lo];
    if (sgn(w) == 0) continue;
    const int64_t b = total - a;
    if (a > 0) {
      mpz_addmul_ui(scratch_[a + mat.alpha - lo - step_lo].get_mpz_t(),
                    w.get_mpz_t(), static_cast<unsigned long>(a));
    }
    if (b > 0) {
      mpz_addmul_ui(scratch_[a + mat.gamma - lo - step_lo].get_mpz_t(),
                    w.get_mpz_t(), static_cast<unsigned long>(b));
    }
  }
  std::swap(law_.mutable_numerators(), scratch_);
  law_.set_offset(lo + step_lo);
  mpz_mul_ui(law_.mutable_denominator().get_mpz_t(),
             law_.denominator().get_mpz_t(),
             static_cast<unsigned long>(total));
  ++steps_;
}

UrnPmf EnumerateExact(const UrnSpec& spec, uint64_t n) {
  if (n > kEnumerateCap) {
    throw std::invalid_argument("enumeration capped at n <= " +
                                std::to_string(kEnumerateCap));
  }
  ExactUrnEnumerator urn(spec);
  while (urn.steps() < n) urn.Step();
  return {spec, n, urn.law()};
}

mpq_class EasyCasePmfExact(uint64_t n, int64_t k) {
  RequireN(n);
  if (k < 2 || k > static_cast<int64_t>(n) + 1) return 0;
  const auto uk = static_cast<uint64_t>(k);
  mpz_class num = Binomial(2 * n - uk, n - 1) * (uk - 1);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), uk - 1);
  mpq_class out(num, Binomial(2 * n, n) * n);
  out.canonicalize();
  return out;
}

double EasyCasePmf(uint64_t n, int64_t k) {
  RequireN(n);
  if (k < 2 || k > static_cast<int64_t>(n) + 1) return 0;
  const auto uk = static_cast<uint64_t>(k);
  const double log_p = std::log(static_cast<double>(uk - 1)) -
                       std::log(static_cast<double>(n)) +
                       static_cast<double>(uk - 1) * kLn2 +
                       LogChoose(2 * n - uk, n - 1) - LogChoose(2 * n, n);
  return std::exp(log_p);
}

mpq_class ArbitraryA0PmfExact(uint64_t n, int64_t a0, int64_t k_offset) {
  if (a0 < 1) throw std::invalid_argument("a0 must be >= 1");
  if (n == 0) return k_offset == 0 ? 1 : 0;
  if (k_offset < 1 || k_offset > static_cast<int64_t>(n)) return 0;
  const auto k = static_cast<uint64_t>(k_offset);
  // Γ(a0/2) Γ(1/2 + n) / (Γ(a0/2 + n) Γ(1/2)) = Π_{j<n} (1 + 2j) / (a0 + 2j).
  mpz_class gamma_num(1), gamma_den(1);
  for (uint64_t j = 0; j < n; ++j) {
    gamma_num *= 1 + 2 * j;
    gamma_den *= a0 + 2 * static_cast<int64_t>(j);
  }
  mpz_class num = gamma_num * Binomial(k + a0 - 1, k) * k *
                  Binomial(2 * n - k - 1, n - 1);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), k);
  mpq_class out(num, gamma_den * n * Binomial(2 * n, n));
  out.canonicalize();
  return out;
}

double ArbitraryA0Pmf(uint64_t n, int64_t a0, int64_t k_offset) {
  if (a0 < 1) throw std::invalid_argument("a0 must be >= 1");
  if (n == 0) return k_offset == 0 ? 1 : 0;
  if (k_offset < 1 || k_offset > static_cast<int64_t>(n)) return 0;
  const auto k = static_cast<uint64_t>(k_offset);
  const double half_a0 = static_cast<double>(a0) / 2;
  const double dn = static_cast<double>(n);
  const double log_p = std::lgamma(half_a0) + std::lgamma(0.5 + dn) -
                       std::lgamma(half_a0 + dn) - kLogGammaHalf +
                       LogChoose(k + a0 - 1, k) +
                       std::log(static_cast<double>(k) / dn) +
                       static_cast<double>(k) * kLn2 +
                       LogChoose(2 * n - k - 1, n - 1) - LogChoose(2 * n, n);
  return std::exp(log_p);
}

mpq_class GeneralTriangularPmfExact(const UrnSpec& spec, uint64_t n,
                                    int64_t k) {
  spec.Validate();
  const ReplacementMatrix& mat = spec.matrix;
  if (!mat.balanced() || !mat.triangular() || !mat.additive() ||
      mat.alpha < 1) {
    throw UnsupportedError(
        "alternating-sum formula needs a balanced triangular additive urn "
        "with alpha >= 1, got " + mat.ToString());
  }
  if (k < 0 || k > static_cast<int64_t>(n)) return 0;
  const int64_t alpha = mat.alpha;
  const int64_t sigma = mat.balance();
  const int64_t s0 = spec.a0 + spec.b0;
  const auto uk = static_cast<uint64_t>(k);
  // With C(x + n - 1, n) = (x)_n / n! and x_i = (b0 - alpha i) / sigma:
  //   P = (a0/alpha)_k / (k! (s0/sigma)_n) Σ_i (-1)^i C(k, i) (x_i)_n,
  // and every Pochhammer symbol over sigma shares the factor sigma^-n.
  mpz_class sum(0), term;
  for (uint64_t i = 0; i <= uk; ++i) {
    term = Binomial(uk, i);
    const int64_t c = spec.b0 - alpha * static_cast<int64_t>(i);
    for (uint64_t j = 0; j < n; ++j) {
      const int64_t factor = c + static_cast<int64_t>(j) * sigma;
      if (factor == 0) {
        term = 0;
        break;
      }
      mpz_mul_si(term.get_mpz_t(), term.get_mpz_t(), factor);
    }
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  mpz_class num = sum;
  for (uint64_t j = 0; j < uk; ++j) {
    num *= spec.a0 + static_cast<int64_t>(j) * alpha;
  }
  mpz_class den(1);
  for (uint64_t j = 0; j < n; ++j) den *= s0 + static_cast<int64_t>(j) * sigma;
  mpz_class alpha_power;
  mpz_ui_pow_ui(alpha_power.get_mpz_t(), static_cast<unsigned long>(alpha), uk);
  mpz_class k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), uk);
  den *= alpha_power * k_factorial;
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpq_class GeneralTriangularPmf(const UrnSpec& spec, uint64_t n, int64_t k,
                               ArithmeticMode mode) {
  if (mode.kind != Arithmetic::kExactRational) {
    throw UnsupportedError(
        "the alternating sum cancels catastrophically in floating point; "
        "use exact mode");
  }
  return GeneralTriangularPmfExact(spec, n, k);
}

mpq_class Polya2002PmfExact(uint64_t n, int64_t a0, int64_t b0, int64_t k) {
  UrnSpec{kPolyaUrn, a0, b0}.Validate();
  if (k < 0 || k > static_cast<int64_t>(n)) return 0;
  const auto uk = static_cast<uint64_t>(k);
  if (a0 == 0) return uk == 0 ? 1 : 0;
  if (b0 == 0) return uk == n ? 1 : 0;
  // C(a0/2 + k - 1, a0/2 - 1) C(n + b0/2 - k - 1, b0/2 - 1)
  //   / C((a0 + b0)/2 + n - 1, (a0 + b0)/2 - 1)
  return HalfPochhammerOverFactorial(a0, uk) *
         HalfPochhammerOverFactorial(b0, n - uk) /
         HalfPochhammerOverFactorial(a0 + b0, n);
}

double Polya2002Pmf(uint64_t n, int64_t a0, int64_t b0, int64_t k) {
  UrnSpec{kPolyaUrn, a0, b0}.Validate();
  if (k < 0 || k > static_cast<int64_t>(n)) return 0;
  const auto uk = static_cast<uint64_t>(k);
  if (a0 == 0) return uk == 0 ? 1 : 0;
  if (b0 == 0) return uk == n ? 1 : 0;
  const double ha = static_cast<double>(a0) / 2;
  const double hb = static_cast<double>(b0) / 2;
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(uk);
  const SignedLog top_a = SignedLogChoose(ha + dk - 1, ha - 1);
  const SignedLog top_b = SignedLogChoose(dn + hb - dk - 1, hb - 1);
  const SignedLog bottom = SignedLogChoose(ha + hb + dn - 1, ha + hb - 1);
  return top_a.sign * top_b.sign * bottom.sign *
         std::exp(top_a.log_abs + top_b.log_abs - bottom.log_abs);
}

std::vector<mpq_class> NonalternatingSummandsExact(uint64_t n, int64_t a0,
                                                   int64_t b0,
                                                   int64_t k_offset) {
  RequireDegreeUrnStart(a0, b0);
  std::vector<mpq_class> summands(n + 1, mpq_class(0));
  if (k_offset < 0 || k_offset > static_cast<int64_t>(n)) return summands;
  if (k_offset == 0) {
    // Only i = 0 contributes: no A-draw at all, which is exactly the event
    // that the A' class of the [2,0,0,2] urn never grows. The displayed
    // prefactor carries a factor k and does not cover this case.
    summands[0] = Polya2002PmfExact(n, a0, b0, 0);
    return summands;
  }
  const auto k = static_cast<uint64_t>(k_offset);
  const int64_t s0 = a0 + b0;
  // Prefactor Γ(a0/2) C(k + a0 - 1, k) 2^k k / (Γ(1/2) C(s0/2 + n - 1,
  // s0/2 - 1)); the Γ(a0/2) / Γ(1/2) part is merged with the per-summand
  // Γ(1/2 + i) / Γ(a0/2 + i) below into the rational Π (1 + 2j) / (a0 + 2j).
  mpz_class pre_num = Binomial(k + a0 - 1, k) * k;
  mpz_mul_2exp(pre_num.get_mpz_t(), pre_num.get_mpz_t(), k);
  const mpq_class prefactor =
      mpq_class(pre_num) / HalfPochhammerOverFactorial(s0, n);

  // C(n - i + b0/2 - 1, b0/2 - 1) = (b0/2)_{n-i} / (n-i)!, tabulated by n - i.
  std::vector<mpq_class> b_binom(n + 1, mpq_class(0));
  b_binom[0] = 1;
  for (uint64_t j = 1; j <= n && b0 > 0; ++j) {
    b_binom[j] = b_binom[j - 1] * Ratio(b0 + 2 * (static_cast<int64_t>(j) - 1),
                                        2 * static_cast<int64_t>(j));
  }

  mpq_class gamma_ratio(1);  // Γ(a0/2) Γ(1/2 + i) / (Γ(1/2) Γ(a0/2 + i))
  mpq_class a_binom(1);      // C(a0/2 + i - 1, a0/2 - 1)
  mpz_class choose_2i(1);    // C(2i, i)
  mpz_class choose_k(0);     // C(2i - k - 1, i - 1), zero for i < k
  for (uint64_t i = 1; i <= n; ++i) {
    const auto j = static_cast<int64_t>(i) - 1;
    gamma_ratio *= Ratio(1 + 2 * j, a0 + 2 * j);
    a_binom *= Ratio(a0 + 2 * j, 2 * static_cast<int64_t>(i));
    // C(2i, i) = C(2i - 2, i - 1) (2i)(2i - 1) / i^2
    choose_2i *= 2 * (2 * i - 1);
    mpz_divexact_ui(choose_2i.get_mpz_t(), choose_2i.get_mpz_t(), i);
    if (i < k) continue;
    if (i == k) {
      choose_k = 1;  // C(k - 1, k - 1)
    } else {
      // C(2i - k - 1, i - 1) = C(2i - k - 3, i - 2) (2i-k-1)(2i-k-2)
      //                        / ((i - 1)(i - k))
      choose_k *= (2 * i - k - 1) * (2 * i - k - 2);
      mpz_divexact_ui(choose_k.get_mpz_t(), choose_k.get_mpz_t(),
                      (i - 1) * (i - k));
    }
    const mpq_class& b_term = b_binom[n - i];
    if (sgn(b_term) == 0) continue;
    summands[i] = prefactor * gamma_ratio * mpq_class(choose_k) * a_binom *
                  b_term / mpq_class(choose_2i * i);
    if (sgn(summands[i]) < 0) {
      throw InternalError("negative summand in non-alternating sum at i = " +
                          std::to_string(i));
    }
  }
  return summands;
}

mpq_class NonalternatingPmfExact(uint64_t n, int64_t a0, int64_t b0,
                                 int64_t k_offset) {
  mpq_class total(0);
  for (const mpq_class& s : NonalternatingSummandsExact(n, a0, b0, k_offset)) {
    total += s;
  }
  return total;
}

double NonalternatingPmf(uint64_t n, int64_t a0, int64_t b0,
                         int64_t k_offset) {
  RequireDegreeUrnStart(a0, b0);
  if (k_offset < 0 || k_offset > static_cast<int64_t>(n)) return 0;
  if (k_offset == 0) return Polya2002Pmf(n, a0, b0, 0);
  const auto k = static_cast<uint64_t>(k_offset);
  const double ha = static_cast<double>(a0) / 2;
  const double hb = static_cast<double>(b0) / 2;
  const double hs = ha + hb;
  const double dn = static_cast<double>(n);
  const SignedLog bottom = SignedLogChoose(hs + dn - 1, hs - 1);
  const double log_prefactor =
      std::lgamma(ha) + LogChoose(k + a0 - 1, k) +
      static_cast<double>(k) * kLn2 + std::log(static_cast<double>(k)) -
      kLogGammaHalf - bottom.log_abs;

  double total = 0;
  const uint64_t first = (b0 == 0) ? n : k;
  for (uint64_t i = first; i <= n; ++i) {
    const double di = static_cast<double>(i);
    const SignedLog a_binom = SignedLogChoose(ha + di - 1, ha - 1);
    SignedLog b_binom{0.0, 1};
    if (b0 != 0) b_binom = SignedLogChoose(dn + hb - di - 1, hb - 1);
    const double log_term = std::lgamma(0.5 + di) +
                            LogChoose(2 * i - k - 1, i - 1) + a_binom.log_abs +
                            b_binom.log_abs - std::lgamma(ha + di) -
                            std::log(di) - LogChoose(2 * i, i);
    const int sign = bottom.sign * a_binom.sign * b_binom.sign;
    const double summand = sign * std::exp(log_prefactor + log_term);
    if (summand < 0) {
      if (-summand > kNegativeSummandTolerance * std::max(total, 1e-300)) {
        throw InternalError("negative summand in non-alternating sum at i = " +
                            std::to_string(i));
      }
      continue;
    }
    total += summand;
  }
  return total;
}

mpq_class DegreePmfExact(uint64_t n, uint64_t t, int64_t k) {
  if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
  return NonalternatingPmfExact(n - t + 1, 1, static_cast<int64_t>(2 * t - 2),
                                k - 1);
}

double DegreePmf(uint64_t n, uint64_t t, int64_t k) {
  if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
  return NonalternatingPmf(n - t + 1, 1, static_cast<int64_t>(2 * t - 2),
                           k - 1);
}

namespace {

void RequireConditional(uint64_t n, uint64_t t, uint64_t d) {
  if (t < 1 || n < t) throw std::invalid_argument("need 1 <= t <= n");
  if (d < 1 || d > 2 * t) {
    throw std::invalid_argument("conditioning degree must lie in 1..2t");
  }
}

}  // namespace

mpq_class ConditionalDegreePmfExact(uint64_t n, uint64_t t, uint64_t d,
                                    int64_t k) {
  RequireConditional(n, t, d);
  return NonalternatingPmfExact(n - t, static_cast<int64_t>(d),
                                static_cast<int64_t>(2 * t + 1 - d),
                                k - static_cast<int64_t>(d));
}

double ConditionalDegreePmf(uint64_t n, uint64_t t, uint64_t d, int64_t k) {
  RequireConditional(n, t, d);
  return NonalternatingPmf(n - t, static_cast<int64_t>(d),
                           static_cast<int64_t>(2 * t + 1 - d),
                           k - static_cast<int64_t>(d));
}

void WriteUrnPmfCsv(std::ostream& out, const UrnSpec& spec, uint64_t n,
                    const std::string& mode,
                    const std::vector<std::pair<int64_t, std::string>>& rows) {
  out << "# urn matrix=" << spec.matrix.ToString() << " a0=" << spec.a0
      << " b0=" << spec.b0 << " n=" << n << " mode=" << mode << '\n';
  out << "k,probability\n";
  for (const auto& [k, p] : rows) out << k << ',' << p << '\n';
}

}  // namespace palab
